#ifndef RIGIDBOUND_PARALLEL_HPP
#define RIGIDBOUND_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace rigidbound {

// Apply fn(0..count-1) with `jobs` workers and return results in index
// order. Work-stealing over an atomic counter; results are merged by
// index, so output never depends on scheduling.
template <typename R, typename Fn>
std::vector<R> parallel_map(size_t count, int jobs, Fn fn) {
    std::vector<R> out(count);
    if (count == 0) return out;
    if (jobs < 1) jobs = 1;
    size_t workers = std::min(static_cast<size_t>(jobs), count);
    if (workers == 1) {
        for (size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<size_t> cursor{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                size_t i = cursor.fetch_add(1);
                if (i >= count) return;
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace rigidbound

#endif
