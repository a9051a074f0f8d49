// trajectories.hpp: Ito stochastic Schroedinger unraveling of the dephasing
// master equation,
//   d|psi> = [-i H0 dt - i sum sqrt(gamma) V dW - 1/2 sum gamma V^2 dt] |psi>,
// integrated with Euler-Maruyama. One Wiener increment per (step, channel).

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dephase/hermitian.hpp"
#include "dephase/rates.hpp"
#include "dephase/rng.hpp"

namespace dephase {

inline constexpr double kMaxSseStepScale = 0.01;
inline constexpr double kNormCollapse = 1e-6;

struct TrajectoryConfig {
    double dt = 1e-3;
    std::size_t steps = 1000;
    std::size_t n_trajectories = 1;
    std::uint64_t master_seed = 0;
    bool renormalize = true;
    std::size_t record_every = 1;
};

// dt * sum gamma ||V||^2 <= 0.01, n_trajectories >= 1, record_every >= 1.
void validate_config(const TrajectoryConfig& cfg, std::span<const LindbladChannel> channels);

// 1e-3 / (||H0|| + sum gamma ||V||^2).
double default_sse_dt(const HermitianOperator& h0, std::span<const LindbladChannel> channels);

struct TrajectoryPath {
    std::vector<double> times;
    std::vector<ComplexVector> states;
    // |psi| after each Euler-Maruyama step, before any renormalization.
    std::vector<double> raw_norms;
};

// Throws NumericalFailure when the pre-renormalization norm drops below 1e-6.
TrajectoryPath sse_trajectory(const HermitianOperator& h0,
                              std::span<const LindbladChannel> channels,
                              const DensityState& psi0, const TrajectoryConfig& cfg,
                              RngStream& stream);

struct TrajectoryAverage {
    std::vector<double> times;
    std::vector<ComplexMatrix> rho;        // mean |psi><psi|
    std::vector<RealMatrix> rho_stderr;    // entrywise standard error of rho
    std::vector<double> purity;            // unbiased estimate of tr(rho^2)
    std::vector<double> purity_stderr;     // from the U-statistic projection
    std::size_t n_trajectories = 0;
};

// Trajectory i uses RngStream(cfg.master_seed, i); identical for any thread count.
TrajectoryAverage average_trajectories(const HermitianOperator& h0,
                                       std::span<const LindbladChannel> channels,
                                       const DensityState& psi0, const TrajectoryConfig& cfg);

struct NoiseSetup {
    HermitianOperator h0;
    std::vector<LindbladChannel> channels;
    DensityState psi0;
};

// Two copies of a system with independent amplitude noise on each copy:
// H0 = H (x) 1 + 1 (x) H, channels {(gamma, H (x) 1), (gamma, 1 (x) H)},
// psi0 = sum_k w_k |k>|k>. Operators are expressed in the product eigenbasis
// |k>|l> (index k*d + l), where all of them are diagonal. Requires d^2 <= 2^12.
NoiseSetup tfd_two_noise_config(const SpectralData& spectral, double beta, double gamma);

}  // namespace dephase
