#pragma once

#include <cmath>
#include <cstdint>

#include "sqlab/point.hpp"

namespace sqlab {

// SplitMix64: the 64-bit counter recurrence with Stafford's mix13 finalizer.
// Constants 0x9E3779B97F4A7C15 (golden-ratio increment), 0xBF58476D1CE4E5B9,
// 0x94D049BB133111EB. Every random draw in the toolkit comes from this
// generator so that runs are reproducible from the recorded seed.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53-bit resolution
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    double gaussian() {
        // Box-Muller; 1-u keeps the log argument in (0, 1]
        const double u = 1.0 - uniform();
        const double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
    }

    Vec in_box(const Box& box) {
        Vec x(box.lo.size());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = uniform(box.lo[i], box.hi[i]);
        return x;
    }

    // uniform on the unit sphere S^{dim-1}
    Vec on_sphere(int dim) {
        Vec x(std::size_t(dim));
        double r2;
        do {
            r2 = 0.0;
            for (auto& c : x) {
                c = gaussian();
                r2 += c * c;
            }
        } while (r2 < 1e-30);
        const double inv = 1.0 / std::sqrt(r2);
        for (auto& c : x) c *= inv;
        return x;
    }

  private:
    std::uint64_t state_;
};

}  // namespace sqlab
