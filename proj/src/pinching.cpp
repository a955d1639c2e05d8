#include "sqlab/pinching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sqlab/errors.hpp"

namespace sqlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct TangentRadius {
    const RealPoint* p;
    const Vec* nu;

    // radius of the smallest ball tangent at p (center p - R nu) containing z
    double operator()(const RealPoint& z, double* depth_out = nullptr) const {
        double d2 = 0.0, depth = 0.0;
        for (std::size_t i = 0; i < z.coords.size(); ++i) {
            const double diff = z.coords[i] - p->coords[i];
            d2 += diff * diff;
            depth -= diff * (*nu)[i];  // <p - z, nu>
        }
        if (depth_out) *depth_out = depth;
        if (depth <= 1e-12) return kInf;
        return d2 / (2.0 * depth);
    }

    Vec gradient(const RealPoint& z) const {
        double d2 = 0.0, depth = 0.0;
        Vec g(z.coords.size());
        for (std::size_t i = 0; i < z.coords.size(); ++i) {
            const double diff = z.coords[i] - p->coords[i];
            d2 += diff * diff;
            depth -= diff * (*nu)[i];
        }
        const double f = d2 / (2.0 * depth * depth);
        for (std::size_t i = 0; i < z.coords.size(); ++i)
            g[i] = (z.coords[i] - p->coords[i]) / depth + f * (*nu)[i];
        return g;
    }
};

}  // namespace

double enclosing_radius(const DomainSpec& domain, const RealPoint& p,
                        const std::vector<RealPoint>& interior_samples,
                        const EnclosingOptions& opts) {
    if (interior_samples.empty()) throw EmptySamples("interior sample cloud is empty");
    Vec nu = gradient(domain, p);
    const double gn = norm(nu);
    if (gn <= 1e-8) throw DegenerateGradient("outward normal undefined at p");
    for (auto& v : nu) v /= gn;

    const TangentRadius radius{&p, &nu};
    double best = 0.0;
    const RealPoint* best_z = nullptr;
    for (const auto& z : interior_samples) {
        double depth = 0.0;
        const double r = radius(z, &depth);
        if (depth <= 1e-12) return kInf;  // domain reaches past the tangent plane
        if (r > best) {
            best = r;
            best_z = &z;
        }
    }

    const double cap = opts.infinite_cap_factor * domain.bbox.diameter();
    if (best > cap) return kInf;
    if (!best_z || opts.refine_iterations <= 0) return best;

    // local ascent on R from the best sample, steps safeguarded to stay inside
    RealPoint z = *best_z;
    double step = 0.05 * std::max(1.0, p.norm());
    for (int it = 0; it < opts.refine_iterations; ++it) {
        Vec g = radius.gradient(z);
        const double gnorm = norm(g);
        if (gnorm < 1e-14) break;
        RealPoint cand = z;
        bool moved = false;
        double s = step;
        for (int backtrack = 0; backtrack < 20; ++backtrack) {
            for (std::size_t i = 0; i < z.coords.size(); ++i)
                cand.coords[i] = z.coords[i] + s * g[i] / gnorm;
            if (domain.contains(cand)) {
                double depth = 0.0;
                const double r = radius(cand, &depth);
                if (depth <= 1e-12 || r > cap) return kInf;
                if (r > best) {
                    best = r;
                    z = cand;
                    moved = true;
                    break;
                }
            }
            s *= 0.5;
        }
        if (moved)
            step = std::min(step * 1.5, 0.5 * std::max(1.0, p.norm()));
        else
            step *= 0.25;
        if (step < 1e-15) break;
    }
    return best;
}

PinchResult pinching_radius(const DomainSpec& domain, const RealPoint& p,
                            const std::vector<RealPoint>& interior_samples,
                            const EnclosingOptions& opts) {
    HessianData hd = hessian_at_boundary(domain, p);
    const Matrix basis = householder_tangent_basis(hd.unit_gradient);
    Matrix restricted = restrict_form(hd.hessian, basis);
    symmetrize(restricted);
    const double lambda = symmetric_eigenvalues(std::move(restricted)).back();

    PinchResult res;
    res.point = p;
    res.lambda = lambda;
    res.enclosing_radius = enclosing_radius(domain, p, interior_samples, opts);

    if (lambda <= 1e-12) {
        // flat tangential direction: no inscribed tangent ball bound
        res.inner_radius = kInf;
        res.pinching = 0.0;
    } else {
        res.inner_radius = 1.0 / lambda;
        res.pinching = std::isinf(res.enclosing_radius)
                           ? 0.0
                           : std::clamp(res.inner_radius / res.enclosing_radius, 0.0, 1.0);
    }
    res.gsc = res.pinching > 0.0;
    return res;
}

RingScanReport semicontinuity_scan(const DomainSpec& domain, const RealPoint& base,
                                   const std::vector<double>& radii, int samples_per_ring,
                                   const std::vector<RealPoint>& interior_samples,
                                   std::uint64_t seed, const EnclosingOptions& opts) {
    RingScanReport report;
    report.base_pinching = pinching_radius(domain, base, interior_samples, opts).pinching;
    if (report.base_pinching <= 0.0) throw NotGsc("base point has pinching 0");

    std::uint64_t ring_seed = seed;
    for (double r : radii) {
        auto pts = sample_boundary_near(domain, base, r, samples_per_ring, ring_seed++);
        RingScanReport::Ring ring;
        ring.radius = r;
        ring.min_pinching = kInf;
        for (const auto& q : pts) {
            try {
                const auto pr = pinching_radius(domain, q, interior_samples, opts);
                ring.min_pinching = std::min(ring.min_pinching, pr.pinching);
                ++ring.points;
            } catch (const Error&) {
                // skip degenerate ring points; the count records coverage
            }
        }
        if (ring.points == 0) ring.min_pinching = 0.0;
        report.rings.push_back(ring);
    }
    return report;
}

}  // namespace sqlab
