// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace mlpide {

// Static contiguous partition of [0, count) over at most `threads` workers.
// fn(begin, end, worker) runs once per chunk; worker ids are dense from 0.
// The partition depends only on (count, threads), never on scheduling, so
// callers that write into per-index slots and reduce in index order obtain
// results that are byte-identical for every thread count.
inline void parallel_for(std::int64_t count, int threads,
                         const std::function<void(std::int64_t, std::int64_t, int)>& fn) {
    if (count <= 0) {
        return;
    }
    const std::int64_t workers =
        std::max<std::int64_t>(1, std::min<std::int64_t>(threads, count));
    if (workers == 1) {
        fn(0, count, 0);
        return;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    auto run_chunk = [&](std::int64_t w) {
        const std::int64_t lo = count * w / workers;
        const std::int64_t hi = count * (w + 1) / workers;
        try {
            fn(lo, hi, static_cast<int>(w));
        } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
    };
    for (std::int64_t w = 1; w < workers; ++w) {
        pool.emplace_back(run_chunk, w);
    }
    run_chunk(0);
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace mlpide
