#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zonekit {

/// Worker count: hardware concurrency, capped by the ZONEKIT_THREADS
/// environment variable when set.
inline int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* cap = std::getenv("ZONEKIT_THREADS")) {
        const int limit = std::atoi(cap);
        if (limit >= 1 && limit < n) n = limit;
    }
    return n;
}

/// Runs body(i) for i in [0, count) over contiguous index blocks. Results must
/// not depend on the thread split: bodies write to disjoint slots only. The
/// first exception thrown by any worker is rethrown on the caller.
template <class F>
void parallel_for(std::size_t count, F&& body) {
    const int workers = worker_count();
    if (workers <= 1 || count < 128) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_lock;
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        if (lo >= count) break;
        const std::size_t hi = std::min(count, lo + chunk);
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> guard(failure_lock);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace zonekit
