// parallel.cpp

#include "dephase/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace dephase {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned n) { g_threads.store(std::max(1u, n)); }

unsigned thread_count() noexcept { return g_threads.load(); }

void parallel_for_blocks(std::size_t n_blocks,
                         const std::function<void(std::size_t)>& fn) {
    const std::size_t workers =
        std::min<std::size_t>(thread_count(), std::max<std::size_t>(n_blocks, 1));
    if (workers <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) fn(b);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            try {
                fn(b);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(n_blocks);
                return;
            }
        }
    };

    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    pool.clear();  // joins
    if (error) std::rethrow_exception(error);
}

EnsembleEstimate to_estimate(const RunningStats& s, std::uint64_t seed) noexcept {
    return EnsembleEstimate{s.mean, s.stderr_of_mean(), s.count, seed};
}

EnsembleEstimate ensemble_mean(std::size_t n, std::uint64_t seed,
                               const std::function<double(std::size_t)>& f) {
    auto blocks = blocked_reduce<RunningStats>(
        n, kDefaultBlockSize, [] { return RunningStats{}; },
        [&](RunningStats& acc, std::size_t i) { acc.push(f(i)); });
    RunningStats total;
    for (const auto& b : blocks) total.merge(b);
    return to_estimate(total, seed);
}

}  // namespace dephase
