#pragma once

#include <thread>
#include <vector>

namespace zakfiber {

/// Thread budget: min(hardware_concurrency, ZAKFIBER_THREADS if set), at least 1.
int max_threads();

/// Runs fn(i) for i in [0, n). Work items write disjoint outputs and the
/// per-item computation order is fixed, so results are identical for every
/// thread count; parallelism only reorders wall-clock execution.
template <class F>
void parallel_for(int n, F&& fn) {
    int threads = max_threads();
    if (n <= 1 || threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    if (threads > n) threads = n;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < n; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace zakfiber
