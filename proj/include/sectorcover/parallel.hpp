#pragma once
// Minimal deterministic parallel-for: work items are indexed, results are
// written to per-index slots, so reductions are order-independent.

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace sectorcover {

/// SECTORCOVER_THREADS when set, else the hardware concurrency.
inline int default_thread_count() {
    if (const char* env = std::getenv("SECTORCOVER_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

template <class F>
void parallel_for(std::size_t n, F&& fn, int threads = 0) {
    if (threads <= 0) threads = default_thread_count();
    if (threads == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const int count = static_cast<int>(std::min<std::size_t>(threads, n));
    pool.reserve(count);
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace sectorcover
