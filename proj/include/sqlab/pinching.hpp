#pragma once

#include <cstdint>
#include <vector>

#include "sqlab/domain.hpp"

namespace sqlab {

// Ball pinching radius data at a boundary point p:
//   lambda         largest eigenvalue of the unit-gradient-normalized Hessian
//                  restricted to the tangent space T_p(boundary)
//   inner_radius   1/lambda (infinite when the tangential form is flat)
//   enclosing      smallest radius of a ball through p containing the domain,
//                  estimated as a supremum over interior samples (lower bound
//                  of the true value, so pinching is an upper bound)
//   pinching       inner_radius / enclosing clamped to [0, 1]; 0 when the
//                  enclosing radius is infinite or lambda <= 1e-12
struct PinchResult {
    RealPoint point;
    double enclosing_radius = 0.0;
    double lambda = 0.0;
    double inner_radius = 0.0;
    double pinching = 0.0;
    bool gsc = false;
};

struct EnclosingOptions {
    int refine_iterations = 50;      // gradient ascent steps from the best sample
    double infinite_cap_factor = 1e3;  // declare +inf past cap * bbox diameter
};

// Smallest tangent-ball radius at p containing the sampled domain. A ball of
// radius R internally tangent at p (center p - R nu) contains z iff
// |z - p|^2 < 2 R <p - z, nu>, so the estimate is sup over samples of
// R(z) = |z - p|^2 / (2 <p - z, nu>), refined by safeguarded gradient ascent.
// Returns +inf when some sample has <p - z, nu> <= 1e-12 (the domain pokes
// past the tangent plane) or when the refined supremum exceeds the cap.
double enclosing_radius(const DomainSpec& domain, const RealPoint& p,
                        const std::vector<RealPoint>& interior_samples,
                        const EnclosingOptions& opts = {});

PinchResult pinching_radius(const DomainSpec& domain, const RealPoint& p,
                            const std::vector<RealPoint>& interior_samples,
                            const EnclosingOptions& opts = {});

// Lower-semicontinuity scan: minimum pinching over boundary samples within
// each radius of the base point. radii must be decreasing; the report checks
// min over the smallest ring against pinching(base) - tolerance.
struct RingScanReport {
    struct Ring {
        double radius = 0.0;
        double min_pinching = 0.0;
        int points = 0;
    };
    std::vector<Ring> rings;
    double base_pinching = 0.0;

    bool lower_semicontinuous(double tol) const {
        if (rings.empty()) return false;
        return rings.back().min_pinching >= base_pinching - tol;
    }
};

RingScanReport semicontinuity_scan(const DomainSpec& domain, const RealPoint& base,
                                   const std::vector<double>& radii, int samples_per_ring,
                                   const std::vector<RealPoint>& interior_samples,
                                   std::uint64_t seed, const EnclosingOptions& opts = {});

}  // namespace sqlab
