#pragma once

// Index-space worker pool for embarrassingly parallel sweeps. Each index is
// processed exactly once and results land in caller-owned slots, so parallel
// and serial execution produce identical row order.

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace lmg {

template <class Fn>
void parallel_for(std::size_t count, int n_threads, Fn&& fn) {
    if (n_threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load())
                return;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true))
                    error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int n = std::min<std::size_t>(static_cast<std::size_t>(n_threads), count);
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    if (failed.load())
        std::rethrow_exception(error);
}

} // namespace lmg
