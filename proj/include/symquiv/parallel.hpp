#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace symquiv {

// Worker count from the SYMQUIV_THREADS environment variable; defaults to 1
// (fully sequential) and ignores unparsable or nonpositive values.
inline int configured_threads() {
    const char* env = std::getenv("SYMQUIV_THREADS");
    if (!env) return 1;
    const int v = std::atoi(env);
    return v >= 1 ? v : 1;
}

// Runs f(0), ..., f(n-1), splitting the indices over configured_threads()
// workers by stride. Each index is processed exactly once, so writes to
// disjoint preallocated slots stay deterministic regardless of thread count.
inline void parallel_for(int n, const std::function<void(int)>& f) {
    const int workers = std::min(configured_threads(), n > 0 ? n : 1);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) f(i);
        });
    for (std::thread& t : pool) t.join();
}

}  // namespace symquiv
