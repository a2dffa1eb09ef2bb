#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace gsum {

/// Runs fn(begin, end) over a static chunking of [0, n) on `threads` workers.
/// Blocks until every chunk is done; the caller thread runs the first chunk.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (n == 0) return;
    threads = std::max(1u, threads);
    std::size_t chunks = std::min<std::size_t>(threads, n);
    std::size_t per = (n + chunks - 1) / chunks;

    std::vector<std::thread> workers;
    workers.reserve(chunks - 1);
    for (std::size_t c = 1; c < chunks; c++) {
        std::size_t begin = c * per;
        std::size_t end = std::min(n, begin + per);
        if (begin >= end) break;
        workers.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    fn(0, std::min(n, per));
    for (auto& w : workers) w.join();
}

}  // namespace gsum
