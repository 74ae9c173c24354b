#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace zf {

inline int default_workers() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 8u));
}

// Index-parallel loop. Results must be written into per-index slots by fn;
// any reduction happens after the join, so the outcome is independent of
// the worker count.
template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
    if (n == 0) return;
    workers = std::max(1, workers);
    if (workers == 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = static_cast<int>(std::min<std::size_t>(workers, n));
    pool.reserve(spawn - 1);
    for (int w = 1; w < spawn; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
}

// Pairwise (balanced tree) sum of a slot vector; deterministic for a given
// slot order no matter how the slots were filled.
inline double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
    const std::size_t n = hi - lo;
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    std::size_t mid = lo + n / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

inline double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v, 0, v.size()); }

} // namespace zf
