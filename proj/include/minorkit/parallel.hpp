#pragma once
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace minorkit {

// MINORKIT_JOBS, else 1. Values < 1 fall back to 1.
inline int default_jobs() {
    const char* env = std::getenv("MINORKIT_JOBS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v >= 1 ? v : 1;
}

// Order-preserving map: out[i] = fn(items[i]) regardless of jobs, so results
// are byte-identical across thread counts.
template <class In, class F>
auto parallel_map(const std::vector<In>& items, F fn, int jobs)
    -> std::vector<decltype(fn(items[0]))> {
    using Out = decltype(fn(items[0]));
    std::vector<Out> out(items.size());
    if (jobs <= 1 || items.size() <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), items.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= items.size()) return;
                out[i] = fn(items[i]);
            }
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace minorkit
