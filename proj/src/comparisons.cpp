#include "sqlab/comparisons.hpp"

#include <cmath>

#include "sqlab/errors.hpp"

namespace sqlab {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void check_s(double s) {
    if (!(s > 0.0 && s <= 1.0)) throw OutOfRange("need s in (0, 1]");
}

void check_n(int n) {
    if (n < 1) throw OutOfRange("need n >= 1");
}

}  // namespace

const char* relation_name(EnvelopeRelation r) {
    switch (r) {
        case EnvelopeRelation::MetricCK: return "MetricCK";
        case EnvelopeRelation::MetricKB: return "MetricKB";
        case EnvelopeRelation::MetricKKE: return "MetricKKE";
        case EnvelopeRelation::VolumeAny: return "VolumeAny";
        case EnvelopeRelation::VolumeKB: return "VolumeKB";
        case EnvelopeRelation::VolumeKKE: return "VolumeKKE";
    }
    return "?";
}

double pinching_metric(double r) {
    if (!(r > 0.0 && r < 1.0)) throw OutOfRange("need r in (0, 1)");
    return 1.0 / r;
}

double pinching_volume(double r, int n) {
    if (!(r > 0.0 && r < 1.0)) throw OutOfRange("need r in (0, 1)");
    check_n(n);
    return std::pow(r, -2.0 * n);
}

Envelope envelope_caratheodory_kobayashi(double s) {
    check_s(s);
    return {s, 1.0, EnvelopeRelation::MetricCK, s, 1};
}

Envelope envelope_kobayashi_bergman(double s, int n) {
    check_s(s);
    check_n(n);
    const double high = std::pow(2.0, n + 2) * kPi / std::pow(s, n + 1);
    return {s, high, EnvelopeRelation::MetricKB, s, n};
}

Envelope envelope_kobayashi_ke(double s, int n) {
    check_s(s);
    check_n(n);
    const double low = std::sqrt(2.0 / n) * s;
    const double high = std::pow(n / (2.0 * s * s), 0.5 * (n - 1));
    return {low, high, EnvelopeRelation::MetricKKE, s, n};
}

Envelope envelope_volume_pair(double s, int n, EnvelopeRelation which) {
    check_s(s);
    check_n(n);
    const double s2n = std::pow(s, 2.0 * n);
    switch (which) {
        case EnvelopeRelation::VolumeAny:
            return {s2n, 1.0 / s2n, which, s, n};
        case EnvelopeRelation::VolumeKB: {
            const double base = std::pow(2.0, n + 2) * kPi / std::pow(s, n + 1);
            return {s2n, std::pow(base, 2.0 * n), which, s, n};
        }
        case EnvelopeRelation::VolumeKKE: {
            const double low = std::pow(2.0 / n, n) * s2n;
            const double high = std::pow(n / (2.0 * s * s), double(n) * (n - 1));
            return {low, high, which, s, n};
        }
        default:
            throw OutOfRange("not a volume relation");
    }
}

Envelope envelope_general(const std::function<double(double)>& pFG,
                          const std::function<double(double)>& pGF, double s,
                          EnvelopeRelation tag, int n) {
    if (!(s > 0.0 && s < 1.0)) throw OutOfRange("need s in (0, 1)");
    for (const auto* f : {&pFG, &pGF}) {
        double prev = 0.0;
        for (int i = 1; i <= 9; ++i) {
            const double r = 0.1 * i;
            const double v = (*f)(r);
            if (!(v > 0.0)) throw OutOfRange("pinching function must be positive");
            if (i > 1 && v > prev + 1e-12)
                throw NotDecreasing("pinching function increases on the grid");
            prev = v;
        }
    }
    return {1.0 / pGF(s), pFG(s), tag, s, n};
}

}  // namespace sqlab
