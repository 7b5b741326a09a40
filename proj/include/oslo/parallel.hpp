#pragma once

#include <cstddef>
#include <thread>
#include <utility>
#include <vector>

namespace oslo {

/// Maps fn over [0, count) with a fixed number of workers. Results are
/// concatenated in index order, so the output is identical for any worker
/// count. fn must be safe to call concurrently on distinct indices.
template <typename Fn>
auto indexed_map(std::size_t count, unsigned workers, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
    using R = decltype(fn(std::size_t{0}));
    if (workers <= 1 || count <= 1) {
        std::vector<R> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
        return out;
    }
    const std::size_t n_chunks = std::min<std::size_t>(workers, count);
    std::vector<std::vector<R>> chunks(n_chunks);
    std::vector<std::thread> threads;
    threads.reserve(n_chunks);
    for (std::size_t c = 0; c < n_chunks; ++c) {
        const std::size_t begin = count * c / n_chunks;
        const std::size_t end = count * (c + 1) / n_chunks;
        threads.emplace_back([&, c, begin, end] {
            chunks[c].reserve(end - begin);
            for (std::size_t i = begin; i < end; ++i) chunks[c].push_back(fn(i));
        });
    }
    for (auto& t : threads) t.join();
    std::vector<R> out;
    out.reserve(count);
    for (auto& chunk : chunks)
        for (auto& r : chunk) out.push_back(std::move(r));
    return out;
}

}  // namespace oslo
