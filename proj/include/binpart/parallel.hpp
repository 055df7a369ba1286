#pragma once

#include "binpart/bignat.hpp"

#include <atomic>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace binpart {

// Smallest index in [lo, hi] for which `ok` is false, or nullopt.  The range
// is split into contiguous chunks, one per thread; each chunk records its own
// first failure and the minimum wins, so the result does not depend on
// scheduling.  `ok` must be safe to call concurrently.
inline std::optional<u64> first_failing_index(u64 lo, u64 hi, u64 threads,
                                              const std::function<bool(u64)>& ok) {
    if (hi < lo) return std::nullopt;
    u64 n = hi - lo + 1;
    if (threads <= 1 || n < 2048) {
        for (u64 x = lo; x <= hi; ++x)
            if (!ok(x)) return x;
        return std::nullopt;
    }
    std::atomic<u64> best{~u64(0)};
    u64 chunk = (n + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (u64 t = 0; t < threads; ++t) {
        u64 a = lo + t * chunk;
        if (a > hi) break;
        u64 b = std::min(hi, a + chunk - 1);
        pool.emplace_back([&ok, &best, a, b] {
            for (u64 x = a; x <= b; ++x) {
                if (best.load(std::memory_order_relaxed) < a) return;
                if (!ok(x)) {
                    u64 cur = best.load();
                    while (x < cur && !best.compare_exchange_weak(cur, x)) {
                    }
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    u64 b = best.load();
    return b == ~u64(0) ? std::nullopt : std::optional<u64>(b);
}

// Apply `work` to every index of [lo, hi], partitioned in blocks pulled from
// an atomic cursor.  Results must be written into per-index storage by the
// caller; ordering of calls is unspecified.
inline void parallel_for_index(u64 lo, u64 hi, u64 threads, const std::function<void(u64)>& work) {
    if (hi < lo) return;
    if (threads <= 1) {
        for (u64 x = lo; x <= hi; ++x) work(x);
        return;
    }
    std::atomic<u64> cursor{lo};
    const u64 block = 64;
    std::vector<std::thread> pool;
    for (u64 t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            while (true) {
                u64 a = cursor.fetch_add(block);
                if (a > hi) return;
                u64 b = std::min(hi, a + block - 1);
                for (u64 x = a; x <= b; ++x) work(x);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace binpart
