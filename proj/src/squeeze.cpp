#include "sqlab/squeeze.hpp"

#include <algorithm>
#include <cmath>

#include "sqlab/errors.hpp"

namespace sqlab {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Exact: return "Exact";
        case Provenance::DiamBound: return "DiamBound";
        case Provenance::BoundaryEstimate: return "BoundaryEstimate";
        case Provenance::ProductBound: return "ProductBound";
        case Provenance::EmbeddingWitness: return "EmbeddingWitness";
        case Provenance::LimitTheorem: return "LimitTheorem";
        case Provenance::Vacuous: return "Vacuous";
        case Provenance::Heuristic: return "Heuristic";
    }
    return "?";
}

SqueezeBound exact_squeezing(const ModelDomain& model, const RealPoint& z) {
    z.require_valid();
    const double zn = z.norm();
    switch (model.kind) {
        case ModelDomain::Kind::Ball:
        case ModelDomain::Kind::Disc:
            if (zn >= 1.0) throw OutsideDomain("|z| must be < 1");
            return {1.0, 1.0, Provenance::Exact};
        case ModelDomain::Kind::PuncturedDisc:
            if (zn >= 1.0 || zn <= 0.0) throw OutsideDomain("need 0 < |z| < 1");
            return {zn, zn, Provenance::Exact};
        case ModelDomain::Kind::ScaledPuncturedDisc:
            if (zn >= model.scale || zn <= 0.0)
                throw OutsideDomain("need 0 < |z| < scale");
            return {zn / model.scale, zn / model.scale, Provenance::Exact};
    }
    throw OutOfRange("unknown model");
}

SqueezeBound diam_lower_bound(const DomainSpec& domain, const RealPoint& z,
                              const std::vector<RealPoint>& boundary_cloud) {
    const double delta = interior_distance_to_boundary(domain, z, boundary_cloud);
    const double diam = diameter_estimate(boundary_cloud);
    return {std::clamp(delta / diam, 0.0, 1.0), 1.0, Provenance::DiamBound};
}

double product_lower_bound(const std::vector<double>& factors) {
    if (factors.empty()) throw OutOfRange("need at least one factor");
    double s = 0.0;
    for (double f : factors) {
        if (!(f > 0.0 && f <= 1.0)) throw OutOfRange("factors must lie in (0, 1]");
        s += 1.0 / (f * f);
    }
    return 1.0 / std::sqrt(s);
}

SqueezeBound boundary_estimate(double delta, double e, double rho) {
    if (!(e > 0.0) || !(delta > 0.0) || !(delta / e < 1.0))
        throw OutOfRange("need 0 < delta/e < 1");
    if (!(rho > 0.0 && rho <= 1.0)) throw OutOfRange("need rho in (0, 1]");
    const double t = delta / e;
    const double radicand = 1.0 - (2.0 - t) * (1.0 - rho) / (2.0 * (1.0 - t));
    if (radicand < 0.0) return {0.0, 1.0, Provenance::Vacuous};
    return {std::sqrt(radicand), 1.0, Provenance::BoundaryEstimate};
}

std::vector<DepthBound> boundary_estimate_at_point(
    const DomainSpec& domain, const RealPoint& p, const std::vector<double>& depths,
    const std::vector<RealPoint>& interior_samples, const BoundaryEstimateOptions& opts) {
    const PinchResult pinch = pinching_radius(domain, p, interior_samples, opts.enclosing);
    if (!(pinch.pinching > 0.0)) throw NotGsc("pinching radius vanishes at p");

    Vec nu = gradient(domain, p);
    const double gn = norm(nu);
    for (auto& v : nu) v /= gn;

    const double max_depth = opts.max_depth_factor * pinch.enclosing_radius;
    std::vector<DepthBound> out;
    out.reserve(depths.size());
    for (double d : depths) {
        DepthBound row;
        row.delta = d;
        RealPoint z = p;
        for (std::size_t i = 0; i < z.coords.size(); ++i) z.coords[i] -= d * nu[i];
        row.inside = domain.contains(z);
        if (!row.inside || d > max_depth) {
            row.bound = {0.0, 1.0, Provenance::Vacuous};
        } else {
            // along the inward normal, delta(z) = d within the tubular range
            row.bound = boundary_estimate(d, pinch.enclosing_radius, pinch.pinching);
        }
        out.push_back(row);
    }
    return out;
}

namespace {

SequenceReport sequence_eval(const std::vector<DomainSpec>& domains, const RealPoint& z,
                             const SequenceEvaluator& evaluator, double limit_value,
                             double tol, bool increasing) {
    SequenceReport report;
    report.limit_value = limit_value;
    for (std::size_t k = 0; k < domains.size(); ++k) {
        const double v = evaluator(k, domains[k]);
        report.values.push_back(v);
        report.errors.push_back(std::abs(v - limit_value));
    }
    for (std::size_t k = 1; k < report.errors.size(); ++k)
        if (report.errors[k] > report.errors[k - 1] + 1e-12)
            report.errors_nonincreasing = false;
    if (!report.errors.empty()) report.converged = report.errors.back() <= tol;
    if (!increasing) {
        double sup = 0.0;
        for (double v : report.values) sup = std::max(sup, v);
        report.one_sided_holds = limit_value >= sup - tol;
    }
    return report;
}

}  // namespace

SequenceReport increasing_sequence_eval(const std::vector<DomainSpec>& domains,
                                        const DomainSpec& limit, const RealPoint& z,
                                        const SequenceEvaluator& evaluator,
                                        double limit_value, double tol) {
    if (!domains.empty() && !domains.front().contains(z))
        throw OutsideDomain("z must lie in the first domain of the family");
    (void)limit;
    return sequence_eval(domains, z, evaluator, limit_value, tol, /*increasing=*/true);
}

SequenceReport decreasing_sequence_eval(const std::vector<DomainSpec>& domains,
                                        const DomainSpec& limit, const RealPoint& z,
                                        const SequenceEvaluator& evaluator,
                                        double limit_value, double tol) {
    if (!limit.contains(z)) throw OutsideDomain("z must lie in the limit domain");
    return sequence_eval(domains, z, evaluator, limit_value, tol, /*increasing=*/false);
}

}  // namespace sqlab
