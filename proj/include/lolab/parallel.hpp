#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace lolab {

/// Resolve a thread-count request: 0 means "LO_LAB_THREADS env var if set,
/// else hardware concurrency". Always at least 1.
int resolve_threads(int requested);

/// Run f(chunk_index, begin, end) over [0, total) split into `threads`
/// contiguous chunks. Results must be reduced by the caller in chunk order so
/// that the outcome is independent of the parallelism degree.
template <class F>
void parallel_chunks(std::uint64_t total, int threads, F&& f) {
    threads = resolve_threads(threads);
    if (total == 0) return;
    if (std::uint64_t(threads) > total) threads = int(total);
    if (threads == 1) {
        f(0, std::uint64_t(0), total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::uint64_t b = std::uint64_t(t) * chunk;
        const std::uint64_t e = std::min(total, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&, t, b, e] { f(t, b, e); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace lolab
