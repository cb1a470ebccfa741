#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace dagtopo {

inline int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(worker_index, begin, end) over fixed-size chunks of [0, n).
// Chunk boundaries do not depend on the thread count, so any per-chunk
// results a caller collects are identical for any number of workers.
template <typename Fn>
void parallel_for_chunks(std::uint64_t n, int threads, std::uint64_t chunk_size,
                         Fn&& fn) {
    threads = resolve_thread_count(threads);
    if (n == 0) return;
    if (chunk_size == 0) chunk_size = 1;
    const std::uint64_t n_chunks = (n + chunk_size - 1) / chunk_size;
    if (threads == 1 || n_chunks == 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c) {
            std::uint64_t begin = c * chunk_size;
            std::uint64_t end = begin + chunk_size < n ? begin + chunk_size : n;
            fn(0, begin, end);
        }
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (;;) {
                std::uint64_t c = next.fetch_add(1);
                if (c >= n_chunks) break;
                std::uint64_t begin = c * chunk_size;
                std::uint64_t end = begin + chunk_size < n ? begin + chunk_size : n;
                fn(w, begin, end);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace dagtopo
