#include "sqlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "sqlab/errors.hpp"
#include "sqlab/parallel.hpp"
#include "sqlab/rng.hpp"

namespace sqlab {

double sigma(double x) {
    if (!(x >= 0.0 && x < 1.0)) throw OutOfRange("sigma needs 0 <= x < 1");
    return std::log((1.0 + x) / (1.0 - x));
}

double sigma_inverse(double y) {
    if (!(y >= 0.0)) throw OutOfRange("sigma_inverse needs y >= 0");
    return std::tanh(0.5 * y);
}

namespace {

// raw coordinates, 2n doubles per point; no allocation on the hot path
double kobayashi_raw(const double* z, const double* w, int n) {
    double z2 = 0.0, w2 = 0.0, dzw = 0.0;
    double ip_re = 0.0, ip_im = 0.0;  // <z, w> = sum z_k conj(w_k)
    for (int k = 0; k < n; ++k) {
        const double zx = z[2 * k], zy = z[2 * k + 1];
        const double wx = w[2 * k], wy = w[2 * k + 1];
        z2 += zx * zx + zy * zy;
        w2 += wx * wx + wy * wy;
        const double dx = zx - wx, dy = zy - wy;
        dzw += dx * dx + dy * dy;
        ip_re += zx * wx + zy * wy;
        ip_im += zy * wx - zx * wy;
    }
    double q2 = dzw + ip_re * ip_re + ip_im * ip_im - z2 * w2;
    if (q2 < 0.0) {
        if (q2 < -1e-14) throw NonFinite("negative radicand in ball distance");
        q2 = 0.0;
    }
    const double q = std::sqrt(q2);
    // |1 - <w, z>| = |1 - conj(<z, w>)|
    const double a = std::hypot(1.0 - ip_re, ip_im);
    if (a - q <= 0.0) return std::numeric_limits<double>::infinity();
    return std::log((a + q) / (a - q));
}

}  // namespace

double kobayashi_distance_ball(const BallPair& pair) {
    pair.z.require_valid();
    pair.w.require_valid();
    if (pair.z.n != pair.n || pair.w.n != pair.n)
        throw OutOfRange("points must live in B^n for the given n");
    if (pair.z.norm() >= 1.0 || pair.w.norm() >= 1.0)
        throw OutOfRange("both points must be strictly inside the unit ball");
    return kobayashi_raw(pair.z.coords.data(), pair.w.coords.data(), pair.n);
}

bool geodesic_closed_form_exact(double r, double rho) {
    return r * (1.0 + 2.0 * rho) >= 1.0;
}

namespace {

void check_geodesic_region(double r, double rho) {
    if (!(rho > 0.0 && rho < 1.0)) throw OutOfRange("need 0 < rho < 1");
    if (!(r > std::max(0.5, 1.0 - 2.0 * rho) && r < 1.0))
        throw OutOfRange("need max(1/2, 1 - 2 rho) < r < 1");
}

}  // namespace

GeodesicDistance geodesic_ball_boundary_distance(double r, double rho) {
    check_geodesic_region(r, rho);
    double a = 1.0 - (1.0 + r) * (1.0 - rho) / (2.0 * r);
    const bool exact = geodesic_closed_form_exact(r, rho);
    if (a < 0.0) a = 0.0;  // only happens in the non-exact sliver
    return GeodesicDistance{sigma(std::sqrt(a)), exact};
}

BoundaryDistanceOracle boundary_distance_oracle(double r, double rho, int n, int grid,
                                                std::uint64_t seed, bool refine) {
    check_geodesic_region(r, rho);
    if (n < 2) throw OutOfRange("the geodesic ball setup needs n > 1");
    if (grid < 1000) throw OutOfRange("grid must be >= 10^3");

    const int dim = 2 * n;
    Vec base(std::size_t(dim), 0.0);
    base[0] = r;  // the point (r, 0, ..., 0)

    // sphere samples: z = center + rho * v, center = (1 - rho) e_1
    SplitMix64 rng(seed);
    std::vector<double> pts(std::size_t(grid) * dim);
    for (int i = 0; i < grid; ++i) {
        const Vec v = rng.on_sphere(dim);
        double* z = &pts[std::size_t(i) * dim];
        for (int c = 0; c < dim; ++c) z[c] = rho * v[std::size_t(c)];
        z[0] += 1.0 - rho;
    }

    auto value_at = [&](std::size_t i) {
        return kobayashi_raw(base.data(), &pts[i * std::size_t(dim)], n);
    };
    const auto [grid_min, best_i] = parallel_argmin(std::size_t(grid), value_at);
    if (best_i == std::size_t(grid)) throw NonFinite("no finite distance on the sphere grid");

    BoundaryDistanceOracle out;
    out.grid = grid;
    out.grid_min = grid_min;
    out.refined_min = grid_min;

    Vec best(pts.begin() + long(best_i) * dim, pts.begin() + (long(best_i) + 1) * dim);
    if (refine) {
        // shrinking local search in the sphere parameterization
        Vec v(std::size_t(dim));
        for (int c = 0; c < dim; ++c) v[std::size_t(c)] = (best[std::size_t(c)] - (c == 0 ? 1.0 - rho : 0.0)) / rho;
        double scale = 0.05;
        double fbest = grid_min;
        Vec cand(std::size_t(dim)), zc(std::size_t(dim));
        for (int round = 0; round < 48; ++round) {
            bool improved = false;
            for (int probe = 0; probe < 64; ++probe) {
                double norm2 = 0.0;
                for (int c = 0; c < dim; ++c) {
                    cand[std::size_t(c)] = v[std::size_t(c)] + scale * rng.gaussian();
                    norm2 += cand[std::size_t(c)] * cand[std::size_t(c)];
                }
                const double inv = 1.0 / std::sqrt(norm2);
                for (int c = 0; c < dim; ++c) {
                    cand[std::size_t(c)] *= inv;
                    zc[std::size_t(c)] = rho * cand[std::size_t(c)] + (c == 0 ? 1.0 - rho : 0.0);
                }
                const double f = kobayashi_raw(base.data(), zc.data(), n);
                if (std::isfinite(f) && f < fbest) {
                    fbest = f;
                    v = cand;
                    improved = true;
                }
            }
            scale *= improved ? 0.7 : 0.5;
        }
        out.refined_min = fbest;
        for (int c = 0; c < dim; ++c) best[std::size_t(c)] = rho * v[std::size_t(c)] + (c == 0 ? 1.0 - rho : 0.0);
    }
    out.argmin_z1 = {best[0], best[1]};
    return out;
}

}  // namespace sqlab
