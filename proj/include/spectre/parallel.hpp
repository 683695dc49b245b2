// Deterministic fork/join helper.  Work is split into contiguous chunks,
// each chunk's result is kept in chunk order, and the caller merges
// sequentially, so outputs are byte-identical no matter how many threads
// run.  SPECTRE_THREADS caps the worker count (1 = fully serial).
#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace spectre {

inline int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    int budget = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("SPECTRE_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1) budget = std::min(budget, cap);
        } catch (...) {
            // unparsable -> ignore, keep hardware default
        }
    }
    return std::max(budget, 1);
}

// Applies fn(lo, hi) to a partition of [0, n) and returns the per-chunk
// results in ascending chunk order.
template <typename R, typename F>
std::vector<R> parallel_chunk_map(long long n, F fn) {
    if (n <= 0) return {};
    int workers = thread_budget();
    long long chunks = std::min<long long>(workers, n);
    if (chunks <= 1) return {fn(0, n)};

    std::vector<R> results(static_cast<std::size_t>(chunks));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(chunks));
    long long base = n / chunks, extra = n % chunks, lo = 0;
    for (long long i = 0; i < chunks; ++i) {
        long long hi = lo + base + (i < extra ? 1 : 0);
        pool.emplace_back([&results, &fn, i, lo, hi]() { results[static_cast<std::size_t>(i)] = fn(lo, hi); });
        lo = hi;
    }
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace spectre
