#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kstk {

/// Runs body(i) for i in [0, count) on up to `threads` workers. Callers write
/// into per-index slots so results never depend on scheduling. The first
/// exception thrown by any body is rethrown after all workers finish.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body &&body)
{
    threads = std::max(1u, threads);
    if (threads == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            auto i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                body(i);
            }
            catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
        pool.emplace_back(worker);
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace kstk
