#include "sqlab/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sqlab/errors.hpp"
#include "sqlab/rng.hpp"

namespace sqlab {

namespace {

double eval_or_throw(const DomainSpec& domain, const RealPoint& p) {
    const double v = domain.rho(p);
    if (!std::isfinite(v)) throw NonFinite("rho not finite at a stencil point");
    return v;
}

double step_scale(const RealPoint& p) { return std::max(1.0, p.norm()); }

}  // namespace

Vec finite_difference_gradient(const DomainSpec& domain, const RealPoint& p, double eps) {
    p.require_valid();
    const double h = eps * step_scale(p);
    const int dim = 2 * p.n;
    Vec g(std::size_t(dim));
    RealPoint q = p;
    for (int i = 0; i < dim; ++i) {
        const double xi = p.coords[std::size_t(i)];
        q.coords[std::size_t(i)] = xi + h;
        const double fp = eval_or_throw(domain, q);
        q.coords[std::size_t(i)] = xi - h;
        const double fm = eval_or_throw(domain, q);
        q.coords[std::size_t(i)] = xi;
        g[std::size_t(i)] = (fp - fm) / (2.0 * h);
    }
    return g;
}

Vec gradient(const DomainSpec& domain, const RealPoint& p) {
    if (domain.analytic_gradient) {
        Vec g = domain.analytic_gradient(p);
        if (!all_finite(g)) throw NonFinite("analytic gradient not finite");
        return g;
    }
    return finite_difference_gradient(domain, p);
}

Matrix finite_difference_hessian(const DomainSpec& domain, const RealPoint& p, double eps) {
    p.require_valid();
    const double h = eps * step_scale(p);
    const int dim = 2 * p.n;
    Matrix hess(dim, dim);
    RealPoint q = p;
    const double f0 = eval_or_throw(domain, q);

    for (int i = 0; i < dim; ++i) {
        const double xi = p.coords[std::size_t(i)];
        q.coords[std::size_t(i)] = xi + h;
        const double fp = eval_or_throw(domain, q);
        q.coords[std::size_t(i)] = xi - h;
        const double fm = eval_or_throw(domain, q);
        q.coords[std::size_t(i)] = xi;
        hess(i, i) = (fp - 2.0 * f0 + fm) / (h * h);
    }
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            const double xi = p.coords[std::size_t(i)];
            const double xj = p.coords[std::size_t(j)];
            double v = 0.0;
            for (int si = -1; si <= 1; si += 2)
                for (int sj = -1; sj <= 1; sj += 2) {
                    q.coords[std::size_t(i)] = xi + si * h;
                    q.coords[std::size_t(j)] = xj + sj * h;
                    v += si * sj * eval_or_throw(domain, q);
                }
            q.coords[std::size_t(i)] = xi;
            q.coords[std::size_t(j)] = xj;
            hess(i, j) = hess(j, i) = v / (4.0 * h * h);
        }
    return hess;
}

HessianData hessian_at_boundary(const DomainSpec& domain, const RealPoint& p,
                                double boundary_tol) {
    p.require_valid();
    const double r = domain.rho(p);
    if (!std::isfinite(r) || std::abs(r) > boundary_tol)
        throw NotOnBoundary("|rho(p)| exceeds boundary tolerance");

    Vec g = gradient(domain, p);
    const double gn = norm(g);
    if (gn <= 1e-8) throw DegenerateGradient("|grad rho(p)| <= 1e-8");
    for (auto& v : g) v /= gn;

    Matrix hess = finite_difference_hessian(domain, p);
    for (auto& v : hess.a) v /= gn;
    symmetrize(hess);
    return HessianData{p, std::move(g), std::move(hess)};
}

namespace {

// Bisection along the segment inside -> outside; nullopt-style failure is
// signalled by returning false. Requires rho(a) < 0 and rho(b) > 0, both finite.
bool bisect_boundary(const DomainSpec& domain, RealPoint a, RealPoint b, RealPoint& out) {
    RealPoint mid = a;
    const int dim = int(a.coords.size());
    double width = distance(a, b);
    for (int it = 0; it < 200 && width > 1e-14; ++it) {
        for (int i = 0; i < dim; ++i)
            mid.coords[std::size_t(i)] =
                0.5 * (a.coords[std::size_t(i)] + b.coords[std::size_t(i)]);
        const double v = domain.rho(mid);
        if (std::isfinite(v) && std::abs(v) < 1e-12) break;
        if (!std::isfinite(v) || v > 0.0)
            b = mid;
        else
            a = mid;
        width *= 0.5;
    }
    for (int i = 0; i < dim; ++i)
        mid.coords[std::size_t(i)] = 0.5 * (a.coords[std::size_t(i)] + b.coords[std::size_t(i)]);
    const double v = domain.rho(mid);
    // a discontinuity of rho (corner sheet, excluded-set clip) shows up here
    if (!std::isfinite(v) || std::abs(v) > 1e-8) return false;
    if (domain.is_excluded(mid)) return false;
    out = mid;
    return true;
}

}  // namespace

std::vector<RealPoint> sample_boundary(const DomainSpec& domain, int count,
                                       std::uint64_t seed) {
    if (count < 1) throw OutOfRange("count must be >= 1");
    SplitMix64 rng(seed);

    // interior pool
    std::vector<RealPoint> pool;
    {
        long budget = 400000;
        while (int(pool.size()) < 64 && budget-- > 0) {
            RealPoint p{rng.in_box(domain.bbox), domain.n};
            if (domain.contains(p)) pool.push_back(std::move(p));
        }
        if (pool.empty()) throw NoBoundaryFound("no interior point located in bbox");
    }

    std::vector<RealPoint> result;
    result.reserve(std::size_t(count));
    long budget = 2000L * count + 100000;
    while (int(result.size()) < count) {
        if (budget-- <= 0) throw NoBoundaryFound("retry budget exhausted (bad bbox?)");
        const RealPoint& a = pool[std::size_t(rng.next() % pool.size())];
        RealPoint b{rng.in_box(domain.bbox), domain.n};
        const double vb = domain.rho(b);
        if (!std::isfinite(vb) || vb <= 0.0) continue;
        RealPoint hit;
        if (bisect_boundary(domain, a, b, hit)) result.push_back(std::move(hit));
    }
    return result;
}

std::vector<RealPoint> sample_boundary_near(const DomainSpec& domain, const RealPoint& base,
                                            double radius, int count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Vec g = gradient(domain, base);
    const double gn = norm(g);
    if (gn <= 1e-8) throw DegenerateGradient("normal direction undefined at base");
    for (auto& v : g) v /= gn;

    const int dim = 2 * domain.n;
    std::vector<RealPoint> result;
    result.reserve(std::size_t(count));
    long budget = 4000L * count;
    while (int(result.size()) < count && budget-- > 0) {
        // tangential-ish offset, then bracket rho along the normal line
        Vec u = rng.on_sphere(dim);
        const double t = radius * std::pow(rng.uniform(), 1.0 / dim);
        RealPoint x = base;
        for (int i = 0; i < dim; ++i) x.coords[std::size_t(i)] += t * u[std::size_t(i)];

        RealPoint lo = x, hi = x;
        bool found = false;
        for (double s = radius / 8.0; s <= 2.0 * radius && !found; s *= 2.0) {
            for (int sign = -1; sign <= 1 && !found; sign += 2) {
                RealPoint in = x, out = x;
                for (int i = 0; i < dim; ++i) {
                    in.coords[std::size_t(i)] = x.coords[std::size_t(i)];
                    out.coords[std::size_t(i)] =
                        x.coords[std::size_t(i)] + sign * s * g[std::size_t(i)];
                }
                const double vi = domain.rho(in), vo = domain.rho(out);
                if (std::isfinite(vi) && std::isfinite(vo) && vi < 0.0 && vo > 0.0) {
                    lo = in;
                    hi = out;
                    found = true;
                }
            }
        }
        if (!found) continue;
        RealPoint hit;
        if (!bisect_boundary(domain, lo, hi, hit)) continue;
        if (distance(hit, base) > radius) continue;
        result.push_back(std::move(hit));
    }
    return result;
}

std::vector<RealPoint> sample_interior(const DomainSpec& domain, int count,
                                       std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<RealPoint> result;
    result.reserve(std::size_t(count));
    long budget = 4000L * count + 100000;
    while (int(result.size()) < count) {
        if (budget-- <= 0) throw NoBoundaryFound("interior sampling budget exhausted");
        RealPoint p{rng.in_box(domain.bbox), domain.n};
        if (domain.contains(p)) result.push_back(std::move(p));
    }
    return result;
}

std::vector<RealPoint> effective_boundary_cloud(const DomainSpec& domain, int count,
                                                std::uint64_t seed) {
    std::vector<RealPoint> cloud = sample_boundary(domain, count, seed);
    if (domain.excluded_boundary) {
        auto extra = domain.excluded_boundary(count, seed ^ 0x9E3779B97F4A7C15ull);
        cloud.insert(cloud.end(), extra.begin(), extra.end());
    }
    return cloud;
}

double interior_distance_to_boundary(const DomainSpec& domain, const RealPoint& z,
                                     const std::vector<RealPoint>& samples) {
    if (!domain.contains(z)) throw OutsideDomain("z is not an interior point");
    if (samples.empty()) throw EmptySamples("boundary sample cloud is empty");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : samples) best = std::min(best, distance(z, q));
    return best;
}

double diameter_estimate(const std::vector<RealPoint>& cloud, std::uint64_t seed) {
    if (cloud.size() < 2) throw EmptySamples("need at least two points");
    const int dim = int(cloud.front().coords.size());
    SplitMix64 rng(seed);

    std::vector<std::size_t> extremes;
    for (int d = 0; d < 128; ++d) {
        const Vec u = rng.on_sphere(dim);
        std::size_t imin = 0, imax = 0;
        double smin = dot(cloud[0].coords, u), smax = smin;
        for (std::size_t i = 1; i < cloud.size(); ++i) {
            const double s = dot(cloud[i].coords, u);
            if (s < smin) { smin = s; imin = i; }
            if (s > smax) { smax = s; imax = i; }
        }
        extremes.push_back(imin);
        extremes.push_back(imax);
    }
    std::sort(extremes.begin(), extremes.end());
    extremes.erase(std::unique(extremes.begin(), extremes.end()), extremes.end());

    double diam = 0.0;
    for (std::size_t i = 0; i < extremes.size(); ++i)
        for (std::size_t j = i + 1; j < extremes.size(); ++j)
            diam = std::max(diam, distance(cloud[extremes[i]], cloud[extremes[j]]));
    return diam;
}

}  // namespace sqlab
