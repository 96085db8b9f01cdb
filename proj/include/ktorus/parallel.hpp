#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ktorus::detail {

inline int thread_count() {
    static const int n = [] {
        unsigned hw = std::thread::hardware_concurrency();
        int v = hw == 0 ? 1 : static_cast<int>(hw);
        if (const char* env = std::getenv("KTORUS_THREADS")) {
            int cap = std::atoi(env);
            if (cap >= 1) v = std::min(v, cap);
        }
        return v;
    }();
    return n;
}

/// Runs fn(begin, end) over fixed-size chunks.  Chunk boundaries depend only
/// on total, so per-chunk results (and any chunk-ordered reduction done by the
/// caller) are identical for every thread count.
template <class Fn>
void parallel_chunks(std::size_t total, Fn&& fn, std::size_t chunk = 8192) {
    std::size_t nchunks = (total + chunk - 1) / chunk;
    int nthreads = thread_count();
    if (nthreads <= 1 || nchunks <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c)
            fn(c, c * chunk, std::min(total, (c + 1) * chunk));
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t c = next.fetch_add(1);
                if (c >= nchunks) return;
                fn(c, c * chunk, std::min(total, (c + 1) * chunk));
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace ktorus::detail
