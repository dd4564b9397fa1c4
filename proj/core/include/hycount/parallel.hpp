#pragma once

// Minimal deterministic parallel-for: work items are indexed, each item writes
// only to its own slot, so results are identical to the sequential run no
// matter how the items are scheduled.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hycount {

template <typename F>
void parallel_for(std::uint64_t n, std::uint32_t threads, F&& body) {
    if (threads <= 1 || n <= 1) {
        for (std::uint64_t i = 0; i < n; ++i) body(i);
        return;
    }
    const std::uint32_t nw = static_cast<std::uint32_t>(
        std::min<std::uint64_t>(threads, n));
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::uint32_t t = 0; t < nw; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= n) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(error_mu);
                    if (!error) error = std::current_exception();
                    next.store(n, std::memory_order_relaxed); // drain remaining work
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace hycount
