#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sqlab/domain.hpp"
#include "sqlab/squeeze.hpp"

namespace sqlab {

// An explicit holomorphic embedding f : D -> B^n with f(basepoint) = 0.
// Holomorphy and injectivity are trusted, not verified. When the map extends
// continuously to the boundary, the largest ball B(0, r) inside f(D) has
// radius min |f(q)| over the effective boundary (zero-set samples plus
// excluded-set sheets, whose images are holes of the image domain).
struct EmbeddingSpec {
    std::string name;
    DomainSpec domain;
    std::function<RealPoint(const RealPoint&)> map;
    bool boundary_extension = false;
    RealPoint basepoint;
};

struct WitnessOptions {
    double cover_tolerance = 0.03;  // heuristic covering radius slack
    int cover_targets = 512;
    std::uint64_t seed = 42;
};

// Lower estimate of s_D(basepoint, f). With a continuous boundary extension
// the estimate is min |f(q)| over the boundary cloud (EmbeddingWitness);
// without it, the largest r whose seeded ball grid is covered by the sampled
// image within cover_tolerance (Heuristic).
SqueezeBound witness_radius(const EmbeddingSpec& spec,
                            const std::vector<RealPoint>& boundary_cloud,
                            const std::vector<RealPoint>& interior_samples,
                            const WitnessOptions& opts = {});

// Direct check of B(0, r) inside f(D): every target of a seeded ball grid
// must have a preimage in D, located by multi-start damped Gauss-Newton on
// |f(z) - target|^2 with objective threshold 1e-8. A false result carries the
// worst target and the converged distance; when the minimization merely
// stalled the report is downgraded to heuristic instead of asserting
// exclusion.
struct InclusionReport {
    bool included = false;
    bool heuristic = false;
    RealPoint worst_target;
    double worst_distance = 0.0;  // min |f(z) - target| over starts, worst target
    int targets = 0;
};

InclusionReport verify_inclusion(const EmbeddingSpec& spec, double r, int grid,
                                 std::uint64_t seed,
                                 const std::vector<RealPoint>& interior_starts);

// Embeddings registered by name: "identity:n=2", "moebius:a=0.5",
// "bidisc-scaled", "triangle-product-scaled:p=0.5,0,0.25,0",
// "product-moebius-scaled:c=0.5,0,0.5,0".
EmbeddingSpec embedding_from_id(const std::string& id);
std::vector<std::string> embedding_ids();

}  // namespace sqlab
