#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace flowpoly {

/// Hardware concurrency, capped by FLOWPOLY_THREADS when set to a positive
/// integer.
inline std::size_t worker_count()
{
    std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("FLOWPOLY_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap > 0) workers = std::min(workers, static_cast<std::size_t>(cap));
        } catch (const std::exception&) {
            // Unparsable value: ignore the cap.
        }
    }
    return workers;
}

/// Calls body(k) for k in [0, count) on up to worker_count() threads with
/// a static interleaved split. Results must be written by index so the
/// outcome does not depend on scheduling. The first exception is rethrown.
template <typename Body>
void parallel_for(std::size_t count, Body&& body)
{
    const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t k = 0; k < count; ++k) body(k);
        return;
    }
    std::exception_ptr failure;
    std::mutex guard;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t k = w; k < count; k += workers) body(k);
            } catch (...) {
                std::lock_guard lock(guard);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace flowpoly
