#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sqlab/linalg.hpp"
#include "sqlab/point.hpp"

namespace sqlab {

// A bounded domain {rho < 0} inside bbox, minus an optional excluded analytic
// set (handled by rejection, never by modifying rho). The excluded set may
// contribute boundary points that the zero set of rho misses (the puncture of
// the punctured disc, the z2 = 0 sheet of the Hartogs triangle); domains that
// need them provide excluded_boundary so distance and witness computations can
// see the full effective boundary.
struct DomainSpec {
    std::string name;
    int n = 0;
    Box bbox;
    std::function<double(const RealPoint&)> rho;
    std::function<bool(const RealPoint&)> excluded;  // optional
    std::function<std::vector<RealPoint>(int count, std::uint64_t seed)>
        excluded_boundary;                              // optional
    std::function<Vec(const RealPoint&)> analytic_gradient;  // optional override

    bool is_excluded(const RealPoint& p) const { return excluded && excluded(p); }

    // strict interior membership
    bool contains(const RealPoint& p) const {
        if (!bbox.contains(p.coords) || is_excluded(p)) return false;
        const double r = rho(p);
        return std::isfinite(r) && r < 0.0;
    }
};

struct HessianData {
    RealPoint point;
    Vec unit_gradient;  // Euclidean norm 1
    Matrix hessian;     // Hessian of rho / |grad rho(p)|, symmetrized
};

// Central differences of rho, step eps * max(1, |p|).
Vec finite_difference_gradient(const DomainSpec& domain, const RealPoint& p,
                               double eps = 1e-6);

// Analytic gradient when the catalog entry provides one, otherwise central
// differences. Throws NonFinite if a stencil evaluation is non-finite.
Vec gradient(const DomainSpec& domain, const RealPoint& p);

// Raw second-difference Hessian (before unit-gradient normalization),
// symmetrized; step eps * max(1, |p|).
Matrix finite_difference_hessian(const DomainSpec& domain, const RealPoint& p,
                                 double eps = 1e-4);

// Hessian of rho rescaled so |grad rho(p)| = 1. Throws DegenerateGradient when
// |grad rho(p)| <= 1e-8 and NotOnBoundary when |rho(p)| > boundary_tol.
HessianData hessian_at_boundary(const DomainSpec& domain, const RealPoint& p,
                                double boundary_tol = 1e-6);

// Seeded boundary sampling: random segments crossing the zero set of rho,
// bisected until |rho| < 1e-10 at the root; excluded-set hits are rejected.
std::vector<RealPoint> sample_boundary(const DomainSpec& domain, int count,
                                       std::uint64_t seed);

// Boundary samples at distance <= radius from base (offset + line search along
// the normal direction at base).
std::vector<RealPoint> sample_boundary_near(const DomainSpec& domain,
                                            const RealPoint& base, double radius,
                                            int count, std::uint64_t seed);

// Rejection sampling of the interior.
std::vector<RealPoint> sample_interior(const DomainSpec& domain, int count,
                                       std::uint64_t seed);

// Zero-set samples plus excluded-set boundary samples, when the domain has any.
std::vector<RealPoint> effective_boundary_cloud(const DomainSpec& domain, int count,
                                                std::uint64_t seed);

// Min Euclidean distance from z to the sample cloud. Overestimates the true
// boundary distance (the cloud is a subset of the boundary) and converges from
// above as the cloud grows. Throws OutsideDomain if z is not interior.
double interior_distance_to_boundary(const DomainSpec& domain, const RealPoint& z,
                                     const std::vector<RealPoint>& samples);

// Diameter of a sample cloud: exact pairwise maximum over support-extreme
// points in seeded random directions.
double diameter_estimate(const std::vector<RealPoint>& cloud,
                         std::uint64_t seed = 0x5eedu);

}  // namespace sqlab
