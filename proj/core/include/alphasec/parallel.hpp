#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace alphasec {

/// Thread budget for internal scans: ALPHASEC_THREADS if set (minimum 1),
/// otherwise the hardware concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("ALPHASEC_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Index-parallel loop with deterministic results: fn(i) must only write
/// state owned by index i.
template <typename Fn>
void parallel_for(size_t n, Fn&& fn) {
    unsigned workers = thread_budget();
    if (workers <= 1 || n < 64) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&fn, n, w, workers] {
            for (size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

} // namespace alphasec
