// rng.hpp: counter-based random streams (Philox4x32-10).
//
// A stream is addressed by (master_seed, stream_index). Its n-th 128-bit
// block is Philox(counter = {n_lo, n_hi, index_lo, index_hi}, key = seed),
// so every stream is reproducible bit-for-bit on any platform and streams
// never overlap. Ensemble loops hand sample i the stream (seed, i).

#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace dephase {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

// The bare 10-round Philox4x32 bijection.
PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) noexcept;

// SplitMix64 finalizer; used to derive independent seeds for sub-experiments.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) noexcept;

class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept;

    // Uniform in the open interval (0, 1), 53-bit resolution.
    double uniform() noexcept;

    // Standard normal via Box-Muller (portable, unlike std::normal_distribution).
    double normal() noexcept;

    double normal(double mean, double sd) noexcept { return mean + sd * normal(); }

    [[nodiscard]] std::uint64_t master_seed() const noexcept { return seed_; }
    [[nodiscard]] std::uint64_t stream_index() const noexcept { return index_; }

private:
    void refill() noexcept;

    std::uint64_t seed_;
    std::uint64_t index_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    int buffered_ = 0;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace dephase
