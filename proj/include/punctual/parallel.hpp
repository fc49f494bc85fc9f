#ifndef PUNCTUAL_PARALLEL_HPP
#define PUNCTUAL_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace punctual {

// Index-deterministic parallel map: slot i always receives fn(i), so the
// aggregated output is byte-identical regardless of the worker count.
template <class T, class F>
std::vector<T> parallel_map(size_t count, int jobs, F&& fn) {
    std::vector<T> out(count);
    if (count == 0) return out;
    size_t workers = jobs < 1 ? 1 : std::min<size_t>(static_cast<size_t>(jobs), count);
    if (workers == 1) {
        for (size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto work = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

inline int default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace punctual

#endif
