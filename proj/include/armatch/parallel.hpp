#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace armatch {

// Runs fn(i) for i in [0, n), index-strided over `workers` threads; inline
// when workers <= 1. Callers write results into index-addressed slots so the
// outcome is schedule-independent.
template <typename Fn>
void parallel_for_index(std::size_t n, int workers, Fn&& fn) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t w = std::min(static_cast<std::size_t>(workers), n);
    std::vector<std::thread> threads;
    threads.reserve(w);
    for (std::size_t t = 0; t < w; ++t)
        threads.emplace_back([&fn, t, w, n] {
            for (std::size_t i = t; i < n; i += w) fn(i);
        });
    for (auto& th : threads) th.join();
}

} // namespace armatch
