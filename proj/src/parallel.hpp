#ifndef TRICIRCLE_PARALLEL_HPP
#define TRICIRCLE_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace tricircle::detail {

/// Runs work(chunk) for chunk in [0, chunks) on `workers` threads and folds the partial
/// results in chunk order, so the outcome never depends on scheduling.
template <class Result, class Work, class Merge>
Result parallel_reduce(std::size_t chunks, unsigned workers, Work work, Merge merge, Result init) {
    std::vector<std::optional<Result>> parts(chunks);
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_lock;

    auto run = [&] {
        for (;;) {
            const std::size_t k = cursor.fetch_add(1);
            if (k >= chunks) return;
            try {
                parts[k].emplace(work(k));
            } catch (...) {
                std::lock_guard<std::mutex> g(failure_lock);
                if (!failure) failure = std::current_exception();
                cursor = chunks;
                return;
            }
        }
    };

    const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(chunks)));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    Result acc = std::move(init);
    for (auto& p : parts) acc = merge(std::move(acc), std::move(*p));
    return acc;
}

}  // namespace tricircle::detail

#endif  // TRICIRCLE_PARALLEL_HPP
