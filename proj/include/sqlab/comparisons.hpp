#pragma once

#include <functional>

namespace sqlab {

// Two-sided comparison constants between invariant metrics / volume forms in
// terms of a squeezing lower bound s: low * G <= F <= high * G. Everything is
// pure arithmetic in (s, n); no metric on a general domain is ever computed.
enum class EnvelopeRelation {
    MetricCK,   // Caratheodory vs Kobayashi metric
    MetricKB,   // Bergman vs Kobayashi metric
    MetricKKE,  // Kaehler-Einstein vs Kobayashi metric
    VolumeAny,  // any two of the four intrinsic volume forms
    VolumeKB,   // Bergman-metric volume vs Kobayashi-metric volume
    VolumeKKE,  // Kaehler-Einstein volume vs Kobayashi-metric volume
};

const char* relation_name(EnvelopeRelation r);

struct Envelope {
    double low = 1.0;
    double high = 1.0;
    EnvelopeRelation relation = EnvelopeRelation::MetricCK;
    double s = 1.0;
    int n = 1;

    // The Kaehler-Einstein constants cross (low > high) for n = 1 and
    // s > sqrt(2)/2; see the tests pinning that region.
    bool consistent() const { return low <= high; }
};

// Pinching function of the metric systems: P(r) = 1/r.
double pinching_metric(double r);

// Pinching function of the volume-form systems: P(r) = r^{-2n}.
double pinching_volume(double r, int n);

// s * HK <= HC <= HK (the upper factor 1 is the sharp bound; the Caratheodory
// metric is dominated by the Kobayashi metric).
Envelope envelope_caratheodory_kobayashi(double s);

// s * HK <= HB <= (2^{n+2} pi / s^{n+1}) * HK
Envelope envelope_kobayashi_bergman(double s, int n);

// sqrt(2/n) s * HK <= HKE <= (n / (2 s^2))^{(n-1)/2} * HK
Envelope envelope_kobayashi_ke(double s, int n);

// VolumeAny: (s^{2n}, s^{-2n});  VolumeKB: (s^{2n}, (2^{n+2} pi / s^{n+1})^{2n});
// VolumeKKE: ((2/n)^n s^{2n}, (n / (2 s^2))^{n(n-1)}).
Envelope envelope_volume_pair(double s, int n, EnvelopeRelation which);

// Generic comparison from a pair of pinching functions:
// (1 / pGF(s)) * G <= F <= pFG(s) * G. Both functions are spot-checked for
// positivity and monotone decrease on a coarse grid.
Envelope envelope_general(const std::function<double(double)>& pFG,
                          const std::function<double(double)>& pGF, double s,
                          EnvelopeRelation tag, int n);

}  // namespace sqlab
