#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace schurcalc::detail {

// Worker count for verification sweeps: SCHURCALC_THREADS caps it, absence
// means min(hardware_concurrency, 8).
inline int verification_threads() {
    int threads = static_cast<int>(std::min(std::thread::hardware_concurrency(), 8u));
    if (threads < 1) threads = 1;
    if (const char* env = std::getenv("SCHURCALC_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) threads = std::min(threads, cap);
    }
    return threads;
}

// Index-sharded parallel loop. fn(i) must only write to its own slot of any
// shared output so results can be merged in index order afterwards.
template <typename Fn>
void parallel_for(size_t count, Fn&& fn) {
    const int threads = static_cast<int>(std::min<size_t>(verification_threads(), count));
    if (threads <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            size_t i;
            while (!failed.load(std::memory_order_relaxed) && (i = next.fetch_add(1)) < count) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace schurcalc::detail
