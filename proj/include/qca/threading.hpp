#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace qca {

/// Chunked parallel loop over [0, n). Chunks are disjoint and each worker
/// writes only to its own range, so results do not depend on thread count.
inline void parallel_for(int n, int n_threads, const std::function<void(int, int)>& body) {
    if (n <= 0) return;
    n_threads = std::max(1, std::min(n_threads, n));
    if (n_threads == 1) {
        body(0, n);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(n_threads);
    const int chunk = (n + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
        const int lo = t * chunk;
        const int hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back(body, lo, hi);
    }
    for (auto& w : workers) w.join();
}

inline int default_thread_count() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

} // namespace qca
