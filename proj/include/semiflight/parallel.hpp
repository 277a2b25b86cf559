#ifndef SEMIFLIGHT_PARALLEL_HPP
#define SEMIFLIGHT_PARALLEL_HPP

#include <functional>
#include <thread>
#include <vector>

namespace semiflight {

// Partitions [0, n) into contiguous blocks, one per worker rank.  The body
// receives (rank, begin, end); per-rank results must be merged by the
// caller in rank order so the outcome depends only on (seed, workers).
inline void parallel_blocks(long long n, int workers,
                            const std::function<void(int, long long, long long)>& body) {
    if (workers <= 1) {
        body(0, 0, n);
        return;
    }
    const long long chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int r = 0; r < workers; ++r) {
        const long long lo = static_cast<long long>(r) * chunk;
        const long long hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, r, lo, hi] { body(r, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace semiflight

#endif
