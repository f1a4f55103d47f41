#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace extremis {

// Static contiguous partition of [0, n) over worker threads; fn is
// called as fn(begin, end). Chunk assignment depends only on n and the
// thread count, and workers write disjoint ranges, so callers that
// store per-index results get schedule-independent output.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (threads == 1 || n < 2) {
        fn(static_cast<std::size_t>(0), n);
        return;
    }
    if (threads > n) threads = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t begin = static_cast<std::size_t>(t) * chunk;
        std::size_t end = begin + chunk < n ? begin + chunk : n;
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace extremis
