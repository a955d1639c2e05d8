#pragma once

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <thread>
#include <utility>
#include <vector>

namespace sqlab {

// Worker count: hardware concurrency capped by SQUEEZE_LAB_THREADS.
inline int worker_threads() {
    int hw = int(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("SQUEEZE_LAB_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
}

// Deterministic parallel argmin: each chunk reports its (value, index) minimum
// with ties broken toward the smaller index, and chunks merge in index order,
// so the result is independent of the thread count. Non-finite values are
// skipped. Returns {value, index}; index == count means nothing was finite.
template <class F>
std::pair<double, std::size_t> parallel_argmin(std::size_t count, F&& value_at) {
    const std::size_t nthreads =
        std::min<std::size_t>(std::size_t(worker_threads()), std::max<std::size_t>(count, 1));
    std::vector<std::pair<double, std::size_t>> local(
        nthreads, {std::numeric_limits<double>::infinity(), count});

    auto run = [&](std::size_t t) {
        const std::size_t lo = count * t / nthreads;
        const std::size_t hi = count * (t + 1) / nthreads;
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_i = count;
        for (std::size_t i = lo; i < hi; ++i) {
            const double v = value_at(i);
            if (std::isfinite(v) && (best_i == count || v < best)) {
                best = v;
                best_i = i;
            }
        }
        local[t] = {best, best_i};
    };

    if (nthreads <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }

    std::pair<double, std::size_t> best{std::numeric_limits<double>::infinity(), count};
    for (const auto& cand : local) {
        if (cand.second == count) continue;
        if (best.second == count || cand.first < best.first) best = cand;
    }
    return best;
}

}  // namespace sqlab
