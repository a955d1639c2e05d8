#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

#include "sqlab/errors.hpp"

namespace sqlab {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double distance(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline bool all_finite(const Vec& a) {
    for (double v : a)
        if (!std::isfinite(v)) return false;
    return true;
}

// A point of C^n stored as 2n real coordinates (x1, y1, ..., xn, yn).
struct RealPoint {
    Vec coords;
    int n = 0;

    RealPoint() = default;
    RealPoint(Vec c, int dim) : coords(std::move(c)), n(dim) {}

    static RealPoint zero(int dim) { return RealPoint(Vec(2 * std::size_t(dim), 0.0), dim); }

    static RealPoint from_complex(std::initializer_list<std::complex<double>> zs) {
        RealPoint p = zero(int(zs.size()));
        int j = 0;
        for (auto z : zs) p.set_z(j++, z);
        return p;
    }

    std::complex<double> z(int j) const { return {coords[2 * j], coords[2 * j + 1]}; }

    void set_z(int j, std::complex<double> v) {
        coords[2 * j] = v.real();
        coords[2 * j + 1] = v.imag();
    }

    double norm() const { return sqlab::norm(coords); }

    bool valid() const { return int(coords.size()) == 2 * n && all_finite(coords); }

    void require_valid() const {
        if (!valid()) throw OutOfRange("RealPoint needs 2n finite coordinates");
    }
};

inline double distance(const RealPoint& a, const RealPoint& b) {
    return distance(a.coords, b.coords);
}

// Axis-aligned box in R^{2n}.
struct Box {
    Vec lo, hi;

    bool contains(const Vec& x) const {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] < lo[i] || x[i] > hi[i]) return false;
        return true;
    }

    double diameter() const {
        double s = 0.0;
        for (std::size_t i = 0; i < lo.size(); ++i) {
            const double d = hi[i] - lo[i];
            s += d * d;
        }
        return std::sqrt(s);
    }

    static Box cube(int dim, double halfwidth) {
        return Box{Vec(std::size_t(dim), -halfwidth), Vec(std::size_t(dim), halfwidth)};
    }
};

}  // namespace sqlab
