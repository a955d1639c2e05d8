#include "sqlab/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "sqlab/catalog.hpp"
#include "sqlab/errors.hpp"
#include "sqlab/parallel.hpp"
#include "sqlab/rng.hpp"

namespace sqlab {

namespace {

using Cx = std::complex<double>;

void check_spec(const EmbeddingSpec& spec, const std::vector<RealPoint>& interior) {
    if (spec.map(spec.basepoint).norm() > 1e-10)
        throw BasepointNotMappedToZero("|f(basepoint)| > 1e-10");
    for (const auto& z : interior)
        if (spec.map(z).norm() >= 1.0)
            throw ImageEscapesBall("an interior sample maps outside the unit ball");
}

std::vector<RealPoint> unit_ball_cloud(int n, int count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<RealPoint> pts;
    pts.reserve(std::size_t(count));
    const Box box = Box::cube(2 * n, 1.0);
    while (int(pts.size()) < count) {
        RealPoint p{rng.in_box(box), n};
        if (p.norm() < 1.0) pts.push_back(std::move(p));
    }
    return pts;
}

}  // namespace

SqueezeBound witness_radius(const EmbeddingSpec& spec,
                            const std::vector<RealPoint>& boundary_cloud,
                            const std::vector<RealPoint>& interior_samples,
                            const WitnessOptions& opts) {
    check_spec(spec, interior_samples);

    if (spec.boundary_extension) {
        if (boundary_cloud.empty()) throw EmptySamples("boundary cloud is empty");
        double r = std::numeric_limits<double>::infinity();
        for (const auto& q : boundary_cloud) r = std::min(r, spec.map(q).norm());
        r = std::clamp(r, 0.0, 1.0);
        return {r, 1.0, Provenance::EmbeddingWitness};
    }

    // heuristic covering: largest r whose ball grid lies within cover_tolerance
    // of the sampled image
    if (interior_samples.empty()) throw EmptySamples("interior cloud is empty");
    std::vector<RealPoint> image;
    image.reserve(interior_samples.size());
    for (const auto& z : interior_samples) image.push_back(spec.map(z));
    const auto targets = unit_ball_cloud(spec.domain.n, opts.cover_targets, opts.seed);

    auto covered = [&](double r) {
        for (const auto& t : targets) {
            RealPoint scaled = t;
            for (auto& c : scaled.coords) c *= r;
            double best = std::numeric_limits<double>::infinity();
            for (const auto& img : image) best = std::min(best, distance(scaled, img));
            if (best > opts.cover_tolerance) return false;
        }
        return true;
    };

    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 30; ++it) {
        const double mid = 0.5 * (lo + hi);
        (covered(mid) ? lo : hi) = mid;
    }
    return {lo, 1.0, Provenance::Heuristic};
}

InclusionReport verify_inclusion(const EmbeddingSpec& spec, double r, int grid,
                                 std::uint64_t seed,
                                 const std::vector<RealPoint>& interior_starts) {
    if (!(r > 0.0 && r < 1.0)) throw OutOfRange("need 0 < r < 1");
    if (interior_starts.empty()) throw EmptySamples("need interior starting points");
    check_spec(spec, interior_starts);

    const int n = spec.domain.n;
    const int dim = 2 * n;
    const auto unit_targets = unit_ball_cloud(n, grid, seed);

    // pick up to 32 well-spread starts (every k-th sample)
    std::vector<const RealPoint*> starts;
    const std::size_t stride = std::max<std::size_t>(1, interior_starts.size() / 32);
    for (std::size_t i = 0; i < interior_starts.size() && starts.size() < 32; i += stride)
        starts.push_back(&interior_starts[i]);

    auto objective = [&](const RealPoint& z, const RealPoint& target) {
        const RealPoint img = spec.map(z);
        double s = 0.0;
        for (int i = 0; i < dim; ++i) s += (img.coords[std::size_t(i)] - target.coords[std::size_t(i)]) *
                                           (img.coords[std::size_t(i)] - target.coords[std::size_t(i)]);
        return s;
    };

    // damped Gauss-Newton from one start; returns the best objective reached
    auto descend = [&](RealPoint z, const RealPoint& target, bool& converged) {
        double f = objective(z, target);
        double lambda = 1e-3;
        Matrix jac(dim, dim);  // local: targets run in parallel
        for (int it = 0; it < 60 && f > 1e-10; ++it) {
            const RealPoint img = spec.map(z);
            // forward-difference Jacobian of the map
            const double h = 1e-7 * std::max(1.0, z.norm());
            RealPoint zp = z;
            for (int c = 0; c < dim; ++c) {
                zp.coords[std::size_t(c)] = z.coords[std::size_t(c)] + h;
                const RealPoint imgp = spec.map(zp);
                zp.coords[std::size_t(c)] = z.coords[std::size_t(c)];
                for (int rix = 0; rix < dim; ++rix)
                    jac(rix, c) = (imgp.coords[std::size_t(rix)] - img.coords[std::size_t(rix)]) / h;
            }
            Vec residual(std::size_t(dim));
            for (int i = 0; i < dim; ++i)
                residual[std::size_t(i)] = img.coords[std::size_t(i)] - target.coords[std::size_t(i)];

            // (J^T J + lambda I) step = -J^T residual, solved by Gauss elimination
            Matrix a(dim, dim);
            Vec b(std::size_t(dim), 0.0);
            for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j) {
                    double s = 0.0;
                    for (int kk = 0; kk < dim; ++kk) s += jac(kk, i) * jac(kk, j);
                    a(i, j) = s;
                }
                a(i, i) += lambda;
                double s = 0.0;
                for (int kk = 0; kk < dim; ++kk) s += jac(kk, i) * residual[std::size_t(kk)];
                b[std::size_t(i)] = -s;
            }
            // solve a * step = b in place
            for (int col = 0; col < dim; ++col) {
                int piv = col;
                for (int rr = col + 1; rr < dim; ++rr)
                    if (std::abs(a(rr, col)) > std::abs(a(piv, col))) piv = rr;
                if (std::abs(a(piv, col)) < 1e-300) { b.assign(std::size_t(dim), 0.0); break; }
                if (piv != col) {
                    for (int cc = 0; cc < dim; ++cc) std::swap(a(piv, cc), a(col, cc));
                    std::swap(b[std::size_t(piv)], b[std::size_t(col)]);
                }
                for (int rr = col + 1; rr < dim; ++rr) {
                    const double fct = a(rr, col) / a(col, col);
                    for (int cc = col; cc < dim; ++cc) a(rr, cc) -= fct * a(col, cc);
                    b[std::size_t(rr)] -= fct * b[std::size_t(col)];
                }
            }
            for (int rr = dim - 1; rr >= 0; --rr) {
                double s = b[std::size_t(rr)];
                for (int cc = rr + 1; cc < dim; ++cc) s -= a(rr, cc) * b[std::size_t(cc)];
                b[std::size_t(rr)] = std::abs(a(rr, rr)) < 1e-300 ? 0.0 : s / a(rr, rr);
            }

            RealPoint cand = z;
            bool moved = false;
            double scale = 1.0;
            for (int bt = 0; bt < 25; ++bt) {
                for (int c = 0; c < dim; ++c)
                    cand.coords[std::size_t(c)] = z.coords[std::size_t(c)] + scale * b[std::size_t(c)];
                if (spec.domain.contains(cand)) {
                    const double fc = objective(cand, target);
                    if (fc < f) {
                        z = cand;
                        f = fc;
                        moved = true;
                        break;
                    }
                }
                scale *= 0.5;
            }
            lambda = moved ? std::max(lambda * 0.3, 1e-12) : std::min(lambda * 8.0, 1e6);
            if (!moved && lambda >= 1e6) break;
        }
        converged = f <= 1e-8;
        return f;
    };

    InclusionReport report;
    report.targets = grid;
    report.included = true;
    double worst = -1.0;
    bool any_stall = false;

    std::vector<double> results(unit_targets.size());
    std::vector<char> ok(unit_targets.size());
    auto run_target = [&](std::size_t ti) {
        RealPoint target = unit_targets[ti];
        for (auto& c : target.coords) c *= r;
        double best = std::numeric_limits<double>::infinity();
        bool conv = false;
        for (const auto* s : starts) {
            bool c = false;
            best = std::min(best, descend(*s, target, c));
            conv = conv || c;
            if (conv) break;
        }
        results[ti] = best;
        ok[ti] = conv ? 1 : 0;
        return conv ? 0.0 : best;
    };
    parallel_argmin(unit_targets.size(), run_target);  // deterministic fan-out

    for (std::size_t ti = 0; ti < unit_targets.size(); ++ti) {
        if (ok[ti]) continue;
        report.included = false;
        const double d = std::sqrt(results[ti]);
        if (d > worst) {
            worst = d;
            report.worst_target = unit_targets[ti];
            for (auto& c : report.worst_target.coords) c *= r;
            report.worst_distance = d;
        }
        // a stall is a failure with a tiny objective: no certified exclusion
        if (d < 1e-3) any_stall = true;
    }
    report.heuristic = !report.included && any_stall;
    return report;
}

// ---------------------------------------------------------------------------
// embedding catalog
// ---------------------------------------------------------------------------

namespace {

Cx moebius(Cx c, Cx w) { return (w - c) / (1.0 - std::conj(c) * w); }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Vec parse_numbers(const std::string& s) {
    Vec out;
    for (const auto& t : split(s, ',')) out.push_back(std::stod(t));
    return out;
}

EmbeddingSpec product_moebius_scaled(Cx c1, Cx c2) {
    EmbeddingSpec spec;
    spec.name = "product-moebius-scaled";
    spec.domain = punctured_bidisc_domain();
    spec.boundary_extension = true;  // componentwise disc automorphisms
    spec.basepoint = RealPoint::from_complex({c1, c2});
    const double inv = 1.0 / std::sqrt(2.0);
    spec.map = [c1, c2, inv](const RealPoint& w) {
        return RealPoint::from_complex(
            {inv * moebius(c1, w.z(0)), inv * moebius(c2, w.z(1))});
    };
    return spec;
}

}  // namespace

EmbeddingSpec embedding_from_id(const std::string& id) {
    const auto parts = split(id, ':');
    const std::string& head = parts[0];
    try {
        if (head == "identity") {
            int n = 2;
            if (parts.size() > 1) {
                const auto kv = split(parts[1], '=');
                if (kv.size() != 2 || kv[0] != "n") throw BadParams("expected n=<dim>");
                n = std::stoi(kv[1]);
            }
            EmbeddingSpec spec;
            spec.name = "identity";
            spec.domain = ball_domain(n);
            spec.boundary_extension = true;
            spec.basepoint = RealPoint::zero(n);
            spec.map = [](const RealPoint& z) { return z; };
            return spec;
        }
        if (head == "moebius") {
            const auto kv = split(parts.at(1), '=');
            if (kv.size() != 2 || kv[0] != "a") throw BadParams("expected a=<radius>");
            const double a = std::stod(kv[1]);
            if (!(a > 0.0 && a < 1.0)) throw BadParams("need 0 < a < 1");
            EmbeddingSpec spec;
            spec.name = "moebius";
            spec.domain = punctured_disc_domain();
            spec.boundary_extension = true;
            spec.basepoint = RealPoint::from_complex({Cx(a, 0.0)});
            spec.map = [a](const RealPoint& z) {
                return RealPoint::from_complex({moebius(Cx(a, 0.0), z.z(0))});
            };
            return spec;
        }
        if (head == "bidisc-scaled") {
            EmbeddingSpec spec;
            spec.name = "bidisc-scaled";
            spec.domain = bidisc_domain();
            spec.boundary_extension = true;
            spec.basepoint = RealPoint::zero(2);
            const double inv = 1.0 / std::sqrt(2.0);
            spec.map = [inv](const RealPoint& z) {
                return RealPoint::from_complex({inv * z.z(0), inv * z.z(1)});
            };
            return spec;
        }
        if (head == "product-moebius-scaled") {
            const auto kv = split(parts.at(1), '=');
            if (kv.size() != 2 || kv[0] != "c") throw BadParams("expected c=x1,y1,x2,y2");
            const Vec v = parse_numbers(kv[1]);
            if (v.size() != 4) throw BadParams("expected four coordinates");
            return product_moebius_scaled(Cx(v[0], v[1]), Cx(v[2], v[3]));
        }
        if (head == "triangle-product-scaled") {
            // basepoint given in Hartogs-triangle coordinates, transported to
            // the punctured bidisc where the map extends to the boundary
            const auto kv = split(parts.at(1), '=');
            if (kv.size() != 2 || kv[0] != "p") throw BadParams("expected p=x1,y1,x2,y2");
            const Vec v = parse_numbers(kv[1]);
            if (v.size() != 4) throw BadParams("expected four coordinates");
            const RealPoint w = triangle_to_product(RealPoint{Vec(v), 2});
            auto spec = product_moebius_scaled(w.z(0), w.z(1));
            spec.name = "triangle-product-scaled";
            return spec;
        }
    } catch (const Error&) {
        throw;
    } catch (...) {
        throw BadParams("could not parse embedding id '" + id + "'");
    }
    throw UnknownEmbedding("'" + id + "' — known: identity, moebius, bidisc-scaled, "
                           "product-moebius-scaled, triangle-product-scaled");
}

std::vector<std::string> embedding_ids() {
    return {"identity:n=2", "moebius:a=0.5", "bidisc-scaled",
            "product-moebius-scaled:c=0.5,0,0.5,0",
            "triangle-product-scaled:p=0.5,0,0.25,0"};
}

}  // namespace sqlab
