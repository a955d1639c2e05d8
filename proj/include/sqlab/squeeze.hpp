#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sqlab/domain.hpp"
#include "sqlab/pinching.hpp"

namespace sqlab {

enum class Provenance {
    Exact,
    DiamBound,
    BoundaryEstimate,
    ProductBound,
    EmbeddingWitness,
    LimitTheorem,
    Vacuous,
    Heuristic,
};

const char* provenance_name(Provenance p);

// Two-sided interval for the squeezing function value s_D(z), tagged with the
// estimate that produced it. Invariant: 0 <= lower <= upper <= 1.
struct SqueezeBound {
    double lower = 0.0;
    double upper = 1.0;
    Provenance provenance = Provenance::Exact;
};

// Model domains with known squeezing functions: the ball and disc are
// homogeneous (s == 1); the punctured disc has s(z) = |z|, and scaling by c
// transports it to s(z) = |z|/c by holomorphic invariance.
struct ModelDomain {
    enum class Kind { Ball, Disc, PuncturedDisc, ScaledPuncturedDisc };
    Kind kind = Kind::Disc;
    int n = 1;
    double scale = 1.0;  // ScaledPuncturedDisc radius
};

SqueezeBound exact_squeezing(const ModelDomain& model, const RealPoint& z);

// Crude estimate s_D(z) >= d(z, boundary) / diam(D) from sampled clouds.
SqueezeBound diam_lower_bound(const DomainSpec& domain, const RealPoint& z,
                              const std::vector<RealPoint>& boundary_cloud);

// Product rule: for factors with squeezing lower bounds s_i, the product
// domain satisfies s >= (sum s_i^-2)^{-1/2}.
double product_lower_bound(const std::vector<double>& factors);

// Normal-direction boundary estimate at depth delta below a boundary point
// with enclosing radius e and tangent-ball ratio rho:
//   s >= sqrt(1 - (2 - delta/e)(1 - rho) / (2 (1 - delta/e))).
// A negative radicand means the depth is outside the certified neighborhood;
// the bound degrades to lower = 0 tagged Vacuous instead of erroring.
SqueezeBound boundary_estimate(double delta, double e, double rho);

struct DepthBound {
    double delta = 0.0;
    SqueezeBound bound;
    bool inside = true;  // whether p - delta * nu landed in the domain
};

struct BoundaryEstimateOptions {
    EnclosingOptions enclosing;
    double max_depth_factor = 0.2;  // certified depth range defaults to 0.2 * e
};

// Composes pinching (as rho) and the enclosing radius (as e) with the
// normal-direction estimate at the given depths. Throws NotGsc when the
// pinching radius at p vanishes.
std::vector<DepthBound> boundary_estimate_at_point(
    const DomainSpec& domain, const RealPoint& p, const std::vector<double>& depths,
    const std::vector<RealPoint>& interior_samples,
    const BoundaryEstimateOptions& opts = {});

// Squeezing values along a monotone family of domains, compared with the
// limit value. The evaluator supplies s_{D_k}(z): exact for model families,
// a certified lower bound otherwise.
struct SequenceReport {
    std::vector<double> values;
    std::vector<double> errors;  // |value_k - limit_value|
    double limit_value = 0.0;
    bool errors_nonincreasing = true;
    bool converged = false;        // increasing case: last error below tol
    bool one_sided_holds = true;   // decreasing case: limit >= sup values - tol
    std::string note;
};

using SequenceEvaluator = std::function<double(std::size_t k, const DomainSpec& dk)>;

SequenceReport increasing_sequence_eval(const std::vector<DomainSpec>& domains,
                                        const DomainSpec& limit, const RealPoint& z,
                                        const SequenceEvaluator& evaluator,
                                        double limit_value, double tol = 1e-6);

SequenceReport decreasing_sequence_eval(const std::vector<DomainSpec>& domains,
                                        const DomainSpec& limit, const RealPoint& z,
                                        const SequenceEvaluator& evaluator,
                                        double limit_value, double tol = 1e-9);

}  // namespace sqlab
