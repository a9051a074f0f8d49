// experiments.hpp: the figure-data commands behind the CLI. Each command
// validates its configuration (ContractViolation on bad input) and writes a
// versioned CSV document to a stream.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "dephase/rates.hpp"

namespace dephase {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct RateGueConfig {
    std::vector<std::size_t> dims{2, 4, 8, 16, 32, 64};
    double gamma = 1.0;
    std::size_t n_samples = 20000;
    std::uint64_t seed = kDefaultSeed;
};

// Columns d, gamma, rate_paper, rate_wick, rate_mc_mean, rate_mc_stderr,
// n_samples, seed. The initial state is the fixed basis state |1>.
void cmd_rate_gue(const RateGueConfig& cfg, std::ostream& os);

struct Fig1Config {
    std::vector<int> ks{1, 2, 3, 4, 5};
    int n_max = 40;
    int n0 = 1;
    double gamma = 1.0;
    KBodyBoundMode mode = KBodyBoundMode::approx;
    std::uint64_t seed = kDefaultSeed;  // echoed only; nothing is sampled
};

// Main table n, D_gue, D_gue_wick, D_kbody_k<k>...; then a second table
// (k, n_min) introduced by "# inset". eps^2 comes from calibrating k = 1 at
// n0 and is shared by every k; an absent crossover is written as "none".
void cmd_fig1(const Fig1Config& cfg, std::ostream& os);

struct TfdConfig {
    int n_qubits = 5;
    std::vector<double> betas{0.0, 0.1, 1.0};
    double gamma = 1.0;
    std::vector<double> gamma_t;  // empty: 0 plus 71 log-spaced points in [1e-3, 1e4]
    std::size_t n_samples = 1000;
    std::uint64_t seed = kDefaultSeed;
    bool formula_only = false;    // closed forms only; allows n_qubits up to 60
};

// Columns beta, gamma_t, purity_mean, purity_stderr, purity_inf,
// rate_exact_E4, rate_semicircle_F3, rate_highT, rate_lowT.
// Formula-only mode writes one row per beta with gamma_t and the sampled
// purity columns set to nan; purity_inf is then the annealed ratio
// <Z(2 beta)> / <Z(beta)>^2.
void cmd_tfd(const TfdConfig& cfg, std::ostream& os);

std::vector<double> default_gamma_t_grid();

// Largest d for which the O(d) Laguerre closed form is evaluated.
inline constexpr double kExactFormulaMaxDim = 1 << 20;

}  // namespace dephase
