// parallel.hpp: deterministic ensemble loops.
//
// Work is cut into fixed-size blocks whose boundaries depend only on the
// problem size, never on the worker count. Each block is reduced in index
// order and the per-block results are folded in block order, so results are
// bit-identical for any number of threads.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace dephase {

// Process-wide worker count used by the ensemble loops (default 1).
void set_thread_count(unsigned n);
unsigned thread_count() noexcept;

// Calls fn(b) for every b in [0, n_blocks), distributed over the worker pool.
void parallel_for_blocks(std::size_t n_blocks, const std::function<void(std::size_t)>& fn);

inline constexpr std::size_t kDefaultBlockSize = 64;

// Runs `accumulate(acc, i)` for i in [0, n), one accumulator per block, and
// returns the block accumulators in block order.
template <class Acc, class Init, class Step>
std::vector<Acc> blocked_reduce(std::size_t n, std::size_t block_size, Init&& init,
                                Step&& accumulate) {
    const std::size_t n_blocks = block_size == 0 ? 0 : (n + block_size - 1) / block_size;
    std::vector<Acc> out;
    out.reserve(n_blocks);
    for (std::size_t b = 0; b < n_blocks; ++b) out.push_back(init());
    parallel_for_blocks(n_blocks, [&](std::size_t b) {
        const std::size_t lo = b * block_size;
        const std::size_t hi = std::min(n, lo + block_size);
        for (std::size_t i = lo; i < hi; ++i) accumulate(out[b], i);
    });
    return out;
}

// Welford accumulator with Chan's pairwise merge.
struct RunningStats {
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void push(double x) noexcept {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }

    void merge(const RunningStats& o) noexcept {
        if (o.count == 0) return;
        if (count == 0) {
            *this = o;
            return;
        }
        const double n1 = static_cast<double>(count);
        const double n2 = static_cast<double>(o.count);
        const double delta = o.mean - mean;
        const double n = n1 + n2;
        mean += delta * n2 / n;
        m2 += o.m2 + delta * delta * n1 * n2 / n;
        count += o.count;
    }

    [[nodiscard]] double sample_variance() const noexcept {
        return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
    }
    [[nodiscard]] double stderr_of_mean() const noexcept {
        return count > 0 ? std::sqrt(sample_variance() / static_cast<double>(count)) : 0.0;
    }
};

// Mean and standard error of a Monte-Carlo quantity, tagged with its seed.
struct EnsembleEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t master_seed = 0;

    // |mean - value| <= k * stderr
    [[nodiscard]] bool within(double value, double k) const noexcept {
        return std::abs(mean - value) <= k * std_error;
    }
};

EnsembleEstimate to_estimate(const RunningStats& s, std::uint64_t seed) noexcept;

// Map i -> f(i) over [0, n) in parallel and reduce into an estimate.
EnsembleEstimate ensemble_mean(std::size_t n, std::uint64_t seed,
                               const std::function<double(std::size_t)>& f);

}  // namespace dephase
