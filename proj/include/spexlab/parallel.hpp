#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace spexlab {

/// jobs <= 0 means one worker per hardware thread.
inline int resolve_jobs(int jobs)
{
    if (jobs > 0)
        return jobs;
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Calls f(i) for i in [0, count), striped over `jobs` threads. f must only
/// write to per-index state. The first exception thrown by any worker is
/// rethrown after all workers finish.
template <class F>
void parallel_for(std::size_t count, int jobs, F&& f)
{
    const int workers = static_cast<int>(std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(count, 1)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i)
            f(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers)
                    f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace spexlab
