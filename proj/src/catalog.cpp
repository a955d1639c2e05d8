#include "sqlab/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "sqlab/errors.hpp"
#include "sqlab/rng.hpp"

namespace sqlab {

namespace {

using Cx = std::complex<double>;

constexpr double kSentinel = 1e9;  // rho value outside the natural chart
constexpr double kTwoPi = 6.28318530717958647692528676655900577;
const double kSqrt2 = std::sqrt(2.0);

double sq(double x) { return x * x; }

}  // namespace

// ---------------------------------------------------------------------------
// Cartan-Hartogs
// ---------------------------------------------------------------------------

int CartanHartogsParams::base_dim() const {
    switch (base) {
        case Base::I: return size1 * size2;
        case Base::II: return size1 * (size1 + 1) / 2;
        case Base::III: return size1 * (size1 - 1) / 2;
        case Base::IV: return size1;
    }
    return 0;
}

int CartanHartogsParams::total_complex_dim() const { return base_dim() + m; }

std::string CartanHartogsParams::id() const {
    std::ostringstream os;
    os << "cartan-hartogs:";
    switch (base) {
        case Base::I: os << "I:" << size1 << "," << size2; break;
        case Base::II: os << "II:" << size1; break;
        case Base::III: os << "III:" << size1; break;
        case Base::IV: os << "IV:" << size1; break;
    }
    os << ":k=" << k << ":m=" << m;
    return os.str();
}

namespace {

void validate(const CartanHartogsParams& p) {
    if (p.size1 < 1 || p.m < 1 || !(p.k > 0.0)) throw BadParams("need sizes >= 1, m >= 1, k > 0");
    if (p.base == CartanHartogsParams::Base::I && p.size1 > p.size2)
        throw BadParams("type I needs r <= s");
    if (p.base == CartanHartogsParams::Base::III && p.size1 < 2)
        throw BadParams("type III needs q >= 2");
}

// matrix shape of Z as handed to generic_norm
void matrix_shape(const CartanHartogsParams& p, int& rows, int& cols) {
    switch (p.base) {
        case CartanHartogsParams::Base::I: rows = p.size1; cols = p.size2; break;
        case CartanHartogsParams::Base::II:
        case CartanHartogsParams::Base::III: rows = cols = p.size1; break;
        case CartanHartogsParams::Base::IV: rows = 1; cols = p.size1; break;
    }
}

// Z Z* for a rows x cols matrix (Hermitian, rows x rows)
CMat gram(const CMat& z, int rows, int cols) {
    CMat g(std::size_t(rows) * rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) {
            Cx s = 0.0;
            for (int c = 0; c < cols; ++c)
                s += z[std::size_t(i) * cols + c] * std::conj(z[std::size_t(j) * cols + c]);
            g[std::size_t(i) * rows + j] = s;
        }
    return g;
}

bool in_base_domain(const CartanHartogsParams& p, const CMat& z) {
    int rows, cols;
    matrix_shape(p, rows, cols);
    if (p.base == CartanHartogsParams::Base::IV) {
        Cx zzt = 0.0;
        double zz = 0.0;
        for (int c = 0; c < cols; ++c) {
            zzt += z[std::size_t(c)] * z[std::size_t(c)];
            zz += std::norm(z[std::size_t(c)]);
        }
        return std::abs(zzt) < 1.0 && 1.0 + std::norm(zzt) - 2.0 * zz > 0.0;
    }
    return hermitian_max_eigenvalue(gram(z, rows, cols), rows) < 1.0;
}

double generic_norm_unchecked(const CartanHartogsParams& p, const CMat& z) {
    int rows, cols;
    matrix_shape(p, rows, cols);
    switch (p.base) {
        case CartanHartogsParams::Base::I:
        case CartanHartogsParams::Base::II: {
            CMat a = gram(z, rows, cols);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < rows; ++j) {
                    auto& e = a[std::size_t(i) * rows + j];
                    e = (i == j ? Cx(1.0) : Cx(0.0)) - e;
                }
            return complex_determinant(std::move(a), rows).real();
        }
        case CartanHartogsParams::Base::III: {
            // det(I + Z conj(Z)); for skew Z this is det(I - Z Z*)
            CMat a(std::size_t(rows) * rows);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < rows; ++j) {
                    Cx s = (i == j) ? Cx(1.0) : Cx(0.0);
                    for (int c = 0; c < cols; ++c)
                        s += z[std::size_t(i) * cols + c] *
                             std::conj(z[std::size_t(c) * cols + j]);
                    a[std::size_t(i) * rows + j] = s;
                }
            return complex_determinant(std::move(a), rows).real();
        }
        case CartanHartogsParams::Base::IV: {
            Cx zzt = 0.0;
            double zz = 0.0;
            for (int c = 0; c < cols; ++c) {
                zzt += z[std::size_t(c)] * z[std::size_t(c)];
                zz += std::norm(z[std::size_t(c)]);
            }
            return 1.0 + std::norm(zzt) - 2.0 * zz;
        }
    }
    throw BadParams("unknown base type");
}

}  // namespace

double generic_norm(const CartanHartogsParams& params, const CMat& Z) {
    validate(params);
    int rows, cols;
    matrix_shape(params, rows, cols);
    if (int(Z.size()) != rows * cols) throw ShapeMismatch("wrong number of matrix entries");
    if (params.base == CartanHartogsParams::Base::II ||
        params.base == CartanHartogsParams::Base::III) {
        const double sign = params.base == CartanHartogsParams::Base::II ? -1.0 : 1.0;
        double dev = 0.0;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                dev = std::max(dev, std::abs(Z[std::size_t(i) * cols + j] +
                                             sign * Z[std::size_t(j) * cols + i]));
        if (dev > 1e-10)
            throw SymmetryViolation(params.base == CartanHartogsParams::Base::II
                                        ? "Z is not symmetric"
                                        : "Z is not skew-symmetric");
    }
    return generic_norm_unchecked(params, Z);
}

void cartan_hartogs_unflatten(const CartanHartogsParams& params, const RealPoint& p,
                              CMat& Z, std::vector<Cx>& W) {
    const int d = params.base_dim();
    int rows, cols;
    matrix_shape(params, rows, cols);
    Z.assign(std::size_t(rows) * cols, Cx(0.0));

    int idx = 0;
    auto next = [&] { return p.z(idx++); };
    (void)d;
    switch (params.base) {
        case CartanHartogsParams::Base::I:
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) Z[std::size_t(i) * cols + j] = next();
            break;
        case CartanHartogsParams::Base::II:
            for (int i = 0; i < rows; ++i)
                for (int j = i; j < cols; ++j) {
                    const Cx u = next();
                    if (i == j) {
                        Z[std::size_t(i) * cols + j] = u;
                    } else {
                        Z[std::size_t(i) * cols + j] = u / kSqrt2;
                        Z[std::size_t(j) * cols + i] = u / kSqrt2;
                    }
                }
            break;
        case CartanHartogsParams::Base::III:
            for (int i = 0; i < rows; ++i)
                for (int j = i + 1; j < cols; ++j) {
                    const Cx u = next();
                    Z[std::size_t(i) * cols + j] = u / kSqrt2;
                    Z[std::size_t(j) * cols + i] = -u / kSqrt2;
                }
            break;
        case CartanHartogsParams::Base::IV:
            for (int j = 0; j < cols; ++j) Z[std::size_t(j)] = next() / kSqrt2;
            break;
    }
    W.assign(std::size_t(params.m), Cx(0.0));
    for (int j = 0; j < params.m; ++j) W[std::size_t(j)] = next();
}

DomainSpec cartan_hartogs_domain(const CartanHartogsParams& params) {
    validate(params);
    const int d = params.base_dim();
    const int n = params.total_complex_dim();

    DomainSpec spec;
    spec.name = params.id();
    spec.n = n;

    // per-coordinate half-widths: matrix entries stay in the unit disc, so a
    // scaled free entry is bounded by sqrt(2)
    Vec half(std::size_t(2 * n), 1.05);
    switch (params.base) {
        case CartanHartogsParams::Base::I:
            break;
        case CartanHartogsParams::Base::II: {
            int idx = 0;
            for (int i = 0; i < params.size1; ++i)
                for (int j = i; j < params.size1; ++j, ++idx)
                    if (i != j) half[std::size_t(2 * idx)] = half[std::size_t(2 * idx + 1)] = 1.5;
            break;
        }
        case CartanHartogsParams::Base::III:
        case CartanHartogsParams::Base::IV:
            for (int idx = 0; idx < d; ++idx)
                half[std::size_t(2 * idx)] = half[std::size_t(2 * idx + 1)] = 1.5;
            break;
    }
    spec.bbox.lo.resize(std::size_t(2 * n));
    spec.bbox.hi.resize(std::size_t(2 * n));
    for (int i = 0; i < 2 * n; ++i) {
        spec.bbox.lo[std::size_t(i)] = -half[std::size_t(i)];
        spec.bbox.hi[std::size_t(i)] = half[std::size_t(i)];
    }

    const CartanHartogsParams captured = params;
    spec.rho = [captured](const RealPoint& p) -> double {
        CMat Z;
        std::vector<Cx> W;
        cartan_hartogs_unflatten(captured, p, Z, W);
        if (!in_base_domain(captured, Z)) return kSentinel;
        const double norm_val = generic_norm_unchecked(captured, Z);
        if (!(norm_val > 0.0)) return kSentinel;
        double w2 = 0.0;
        for (const auto& w : W) w2 += std::norm(w);
        return w2 / std::pow(norm_val, captured.k) - 1.0;
    };
    return spec;
}

double s_omega_constant(CartanHartogsParams::Base base, int size1) {
    switch (base) {
        case CartanHartogsParams::Base::I: return 1.0 / std::sqrt(double(size1));
        case CartanHartogsParams::Base::II: return 1.0 / std::sqrt(double(size1));
        case CartanHartogsParams::Base::III: return 1.0 / std::sqrt(double(size1 / 2));
        case CartanHartogsParams::Base::IV: return 1.0 / std::sqrt(2.0);
    }
    throw BadParams("unknown base type");
}

double cartan_hartogs_k_limit(CartanHartogsParams::Base base, int size1) {
    const double s = s_omega_constant(base, size1);
    return 1.0 / std::sqrt(1.0 / (s * s) + 1.0);
}

// ---------------------------------------------------------------------------
// Thullen
// ---------------------------------------------------------------------------

DomainSpec thullen_domain(double k) {
    if (!(k > 0.0 && k < 1.0)) throw OutOfRange("thullen needs 0 < k < 1");
    DomainSpec spec;
    { std::ostringstream os; os << "thullen:k=" << k; spec.name = os.str(); }
    spec.n = 2;
    spec.bbox = Box::cube(4, 1.05);
    spec.rho = [k](const RealPoint& p) -> double {
        const double t = std::norm(p.z(1));
        if (t >= 1.0) return kSentinel;
        return std::norm(p.z(0)) / std::pow(1.0 - t, 1.0 / k) - 1.0;
    };
    return spec;
}

// ---------------------------------------------------------------------------
// Reinhardt example
// ---------------------------------------------------------------------------

namespace {

double log_sq_modulus(const Cx& z) {
    const double t = std::norm(z);
    if (t < 1e-300) return kSentinel;  // approaching a coordinate axis
    const double l = std::log(t);
    return l * l;
}

Cx shear(const Cx& z1, double eps) {
    // f_eps(z1) = eps (z1 + 1/z1 - 2)
    return eps * (z1 + 1.0 / z1 - 2.0);
}

}  // namespace

DomainSpec reinhardt_domain() {
    DomainSpec spec;
    spec.name = "reinhardt";
    spec.n = 2;
    spec.bbox = Box::cube(4, std::exp(0.5) * 1.05);
    spec.rho = [](const RealPoint& p) -> double {
        const double a = log_sq_modulus(p.z(0));
        const double b = log_sq_modulus(p.z(1));
        if (a >= kSentinel || b >= kSentinel) return kSentinel;
        return a + b - 1.0;
    };
    spec.excluded = [](const RealPoint& p) {
        return std::norm(p.z(0)) < 1e-18 || std::norm(p.z(1)) < 1e-18;
    };
    return spec;
}

DomainSpec reinhardt_sheared(const ShearParams& params) {
    if (!(params.epsilon > 0.0)) throw OutOfRange("epsilon must be positive");
    const double eps = params.epsilon;
    DomainSpec spec;
    { std::ostringstream os; os << "reinhardt-sheared:eps=" << eps; spec.name = os.str(); }
    spec.n = 2;
    const double reach = std::exp(0.5) * 1.05 + eps * (std::exp(0.5) + std::exp(-0.5) + 2.0);
    spec.bbox = Box::cube(4, reach);
    spec.rho = [eps](const RealPoint& p) -> double {
        const Cx z1 = p.z(0);
        if (std::norm(z1) < 1e-18) return kSentinel;
        const double a = log_sq_modulus(z1);
        const double b = log_sq_modulus(p.z(1) - shear(z1, eps));
        if (a >= kSentinel || b >= kSentinel) return kSentinel;
        return a + b - 1.0;
    };
    spec.excluded = [eps](const RealPoint& p) {
        const Cx z1 = p.z(0);
        if (std::norm(z1) < 1e-18) return true;
        return std::norm(p.z(1) - shear(z1, eps)) < 1e-18;
    };
    return spec;
}

SupportScanReport reinhardt_support_scan(const ShearParams& params, int grid) {
    if (grid < 100) throw OutOfRange("grid must be >= 100 per axis");
    const double eps = params.epsilon;

    auto g = [eps](double r1, double theta1) {
        return eps * ((std::exp(0.5 * r1) + std::exp(-0.5 * r1)) * std::cos(theta1) - 2.0) +
               std::exp(0.5 * std::sqrt(std::max(0.0, 1.0 - r1 * r1)));
    };

    SupportScanReport report;
    report.max_value = -std::numeric_limits<double>::infinity();
    report.monotone_in_r1 = true;

    for (int j = 0; j < grid; ++j) {
        const double theta = kTwoPi * j / grid;
        double prev = 0.0;
        for (int i = 0; i <= grid; ++i) {
            const double r1 = double(i) / grid;
            const double v = g(r1, theta);
            if (v > report.max_value) {
                report.max_value = v;
                report.argmax_r1 = r1;
                report.argmax_theta1 = theta;
            }
            if (i > 0 && v > prev + 1e-12) report.monotone_in_r1 = false;
            prev = v;
            if (i == 0) report.edge_r0_max = std::max(report.edge_r0_max, v);
            if (i == grid) report.edge_r1_max = std::max(report.edge_r1_max, v);
        }
    }
    report.max_at_origin = report.argmax_r1 == 0.0 && report.argmax_theta1 == 0.0;
    report.passed = report.max_at_origin && report.monotone_in_r1 &&
                    std::abs(report.max_value - std::exp(0.5)) < 1e-9;
    return report;
}

// ---------------------------------------------------------------------------
// Hartogs triangle
// ---------------------------------------------------------------------------

DomainSpec hartogs_triangle() {
    DomainSpec spec;
    spec.name = "hartogs-triangle";
    spec.n = 2;
    spec.bbox = Box::cube(4, 1.05);
    spec.rho = [](const RealPoint& p) {
        const double a = std::norm(p.z(0));
        const double b = std::norm(p.z(1));
        return std::max(b - a, a - 1.0);
    };
    spec.excluded = [](const RealPoint& p) { return std::norm(p.z(1)) < 1e-18; };
    spec.excluded_boundary = [](int count, std::uint64_t seed) {
        // the analytic sheet {z2 = 0, |z1| <= 1}
        SplitMix64 rng(seed);
        std::vector<RealPoint> pts;
        pts.reserve(std::size_t(count));
        for (int i = 0; i < count; ++i) {
            const double r = std::sqrt(rng.uniform());
            const double th = rng.uniform(0.0, kTwoPi);
            pts.push_back(RealPoint::from_complex({std::polar(r, th), 0.0}));
        }
        return pts;
    };
    return spec;
}

RealPoint triangle_to_product(const RealPoint& z) {
    const Cx z1 = z.z(0), z2 = z.z(1);
    const double a1 = std::abs(z1), a2 = std::abs(z2);
    if (!(a2 > 0.0 && a2 < a1 && a1 < 1.0))
        throw OutsideDomain("point is not in the Hartogs triangle");
    return RealPoint::from_complex({z1, z2 / z1});
}

RealPoint product_to_triangle(const RealPoint& w) {
    const Cx w1 = w.z(0), w2 = w.z(1);
    return RealPoint::from_complex({w1, w1 * w2});
}

// ---------------------------------------------------------------------------
// model domains
// ---------------------------------------------------------------------------

DomainSpec ball_domain(int n) {
    if (n < 1) throw BadParams("ball needs n >= 1");
    DomainSpec spec;
    spec.name = n == 1 ? "disc" : "ball:n=" + std::to_string(n);
    spec.n = n;
    spec.bbox = Box::cube(2 * n, 1.05);
    spec.rho = [](const RealPoint& p) { return dot(p.coords, p.coords) - 1.0; };
    spec.analytic_gradient = [](const RealPoint& p) {
        Vec g = p.coords;
        for (auto& v : g) v *= 2.0;
        return g;
    };
    return spec;
}

DomainSpec bidisc_domain() {
    DomainSpec spec;
    spec.name = "bidisc";
    spec.n = 2;
    spec.bbox = Box::cube(4, 1.05);
    spec.rho = [](const RealPoint& p) {
        return std::max(std::norm(p.z(0)) - 1.0, std::norm(p.z(1)) - 1.0);
    };
    return spec;
}

DomainSpec punctured_disc_domain(double scale) {
    if (!(scale > 0.0)) throw BadParams("scale must be positive");
    DomainSpec spec;
    if (scale == 1.0) { spec.name = "punctured-disc"; } else { std::ostringstream os; os << "scaled-punctured-disc:c=" << scale; spec.name = os.str(); }
    spec.n = 1;
    spec.bbox = Box::cube(2, scale * 1.05);
    spec.rho = [scale](const RealPoint& p) { return std::norm(p.z(0)) - scale * scale; };
    spec.excluded = [](const RealPoint& p) { return std::norm(p.z(0)) < 1e-18; };
    spec.excluded_boundary = [](int, std::uint64_t) {
        return std::vector<RealPoint>{RealPoint::zero(1)};  // the puncture
    };
    return spec;
}

DomainSpec punctured_bidisc_domain() {
    DomainSpec spec;
    spec.name = "punctured-bidisc";
    spec.n = 2;
    spec.bbox = Box::cube(4, 1.05);
    spec.rho = [](const RealPoint& p) {
        return std::max(std::norm(p.z(0)) - 1.0, std::norm(p.z(1)) - 1.0);
    };
    spec.excluded = [](const RealPoint& p) {
        return std::norm(p.z(0)) < 1e-18 || std::norm(p.z(1)) < 1e-18;
    };
    spec.excluded_boundary = [](int count, std::uint64_t seed) {
        // the sheets {0} x closed disc and closed disc x {0}
        SplitMix64 rng(seed);
        std::vector<RealPoint> pts;
        pts.reserve(std::size_t(count));
        for (int i = 0; i < count; ++i) {
            const double r = std::sqrt(rng.uniform());
            const double th = rng.uniform(0.0, kTwoPi);
            const Cx w = std::polar(r, th);
            pts.push_back(i % 2 == 0 ? RealPoint::from_complex({0.0, w})
                                     : RealPoint::from_complex({w, 0.0}));
        }
        return pts;
    };
    return spec;
}

DomainSpec ellipsoid_domain(const Vec& semiaxes) {
    if (semiaxes.empty() || semiaxes.size() % 2 != 0)
        throw BadParams("need 2n positive semiaxes");
    for (double a : semiaxes)
        if (!(a > 0.0)) throw BadParams("semiaxes must be positive");

    DomainSpec spec;
    spec.n = int(semiaxes.size() / 2);
    {
        std::ostringstream os;
        os << "ellipsoid:axes=";
        for (std::size_t i = 0; i < semiaxes.size(); ++i) os << (i ? "," : "") << semiaxes[i];
        spec.name = os.str();
    }
    spec.bbox.lo.resize(semiaxes.size());
    spec.bbox.hi.resize(semiaxes.size());
    for (std::size_t i = 0; i < semiaxes.size(); ++i) {
        spec.bbox.lo[i] = -1.05 * semiaxes[i];
        spec.bbox.hi[i] = 1.05 * semiaxes[i];
    }
    const Vec axes = semiaxes;
    spec.rho = [axes](const RealPoint& p) {
        double s = -1.0;
        for (std::size_t i = 0; i < axes.size(); ++i) s += sq(p.coords[i] / axes[i]);
        return s;
    };
    spec.analytic_gradient = [axes](const RealPoint& p) {
        Vec g(axes.size());
        for (std::size_t i = 0; i < axes.size(); ++i) g[i] = 2.0 * p.coords[i] / sq(axes[i]);
        return g;
    };
    return spec;
}

// ---------------------------------------------------------------------------
// string catalog
// ---------------------------------------------------------------------------

namespace {

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

double parse_value(const std::string& token, const std::string& key) {
    const auto kv = split(token, '=');
    if (kv.size() != 2 || kv[0] != key) throw BadParams("expected " + key + "=<value>");
    try {
        return std::stod(kv[1]);
    } catch (...) {
        throw BadParams("could not parse " + token);
    }
}

}  // namespace

DomainSpec domain_from_id(const std::string& id) {
    const auto parts = split(id, ':');
    const std::string& head = parts[0];
    try {
        if (head == "ball") {
            int n = 2;
            if (parts.size() > 1) n = int(parse_value(parts[1], "n"));
            return ball_domain(n);
        }
        if (head == "disc") return ball_domain(1);
        if (head == "bidisc") return bidisc_domain();
        if (head == "punctured-disc") return punctured_disc_domain();
        if (head == "scaled-punctured-disc")
            return punctured_disc_domain(parse_value(parts.at(1), "c"));
        if (head == "punctured-bidisc") return punctured_bidisc_domain();
        if (head == "hartogs-triangle") return hartogs_triangle();
        if (head == "thullen") return thullen_domain(parse_value(parts.at(1), "k"));
        if (head == "reinhardt") return reinhardt_domain();
        if (head == "reinhardt-sheared") {
            ShearParams sp;
            if (parts.size() > 1) sp.epsilon = parse_value(parts[1], "eps");
            return reinhardt_sheared(sp);
        }
        if (head == "ellipsoid") {
            const auto kv = split(parts.at(1), '=');
            if (kv.size() != 2 || kv[0] != "axes") throw BadParams("expected axes=a1,a2,...");
            Vec axes;
            for (const auto& t : split(kv[1], ',')) axes.push_back(std::stod(t));
            return ellipsoid_domain(axes);
        }
        if (head == "cartan-hartogs") {
            if (parts.size() != 5) throw BadParams("expected cartan-hartogs:TYPE:SIZES:k=..:m=..");
            CartanHartogsParams p;
            if (parts[1] == "I") p.base = CartanHartogsParams::Base::I;
            else if (parts[1] == "II") p.base = CartanHartogsParams::Base::II;
            else if (parts[1] == "III") p.base = CartanHartogsParams::Base::III;
            else if (parts[1] == "IV") p.base = CartanHartogsParams::Base::IV;
            else throw BadParams("type must be I, II, III or IV");
            const auto sizes = split(parts[2], ',');
            p.size1 = std::stoi(sizes.at(0));
            p.size2 = sizes.size() > 1 ? std::stoi(sizes[1]) : p.size1;
            p.k = parse_value(parts[3], "k");
            p.m = int(parse_value(parts[4], "m"));
            return cartan_hartogs_domain(p);
        }
    } catch (const Error&) {
        throw;
    } catch (...) {
        throw BadParams("could not parse domain id '" + id + "'");
    }
    throw UnknownDomain("'" + id + "' — run the catalog command for known ids");
}

std::vector<std::string> catalog_ids() {
    return {
        "disc",
        "ball:n=2",
        "ball:n=3",
        "bidisc",
        "punctured-disc",
        "scaled-punctured-disc:c=0.5",
        "punctured-bidisc",
        "hartogs-triangle",
        "thullen:k=0.25",
        "thullen:k=0.5",
        "thullen:k=0.75",
        "reinhardt",
        "reinhardt-sheared:eps=0.01",
        "cartan-hartogs:I:1,1:k=0.5:m=1",
        "cartan-hartogs:I:1,2:k=0.5:m=1",
        "cartan-hartogs:II:2:k=0.5:m=1",
        "cartan-hartogs:III:2:k=0.5:m=1",
        "cartan-hartogs:IV:2:k=0.5:m=1",
        "ellipsoid:axes=1,0.8,0.7,0.9",
    };
}

}  // namespace sqlab
