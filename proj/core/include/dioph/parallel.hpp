#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dioph {

/// Runs fn(task) for every task in [0, tasks) on up to `workers` threads.
/// Task i goes to worker i % workers; fn must only touch state owned by its
/// task index, so results do not depend on the worker count. The first
/// exception thrown by any task is rethrown on the calling thread.
template <typename Fn>
void for_each_task(std::size_t tasks, std::size_t workers, Fn&& fn)
{
    workers = std::max<std::size_t>(1, std::min(workers, tasks));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks; ++i) fn(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < tasks; i += workers) fn(i);
                } catch (...) {
                    const std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

} // namespace dioph
