// rates.hpp: decoherence-rate calculators.
//
// The rate is the initial fractional purity decay under a dephasing
// Lindbladian with Hermitian jump operators,
//   D = 2 sum_mu gamma_mu [tr(rho^2 V^2) - tr(rho V rho V)] / tr(rho^2).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dephase/hermitian.hpp"
#include "dephase/parallel.hpp"
#include "dephase/rng.hpp"

namespace dephase {

struct LindbladChannel {
    double gamma = 0.0;
    HermitianOperator v;

    LindbladChannel(double gamma, HermitianOperator v);
};

double total_gamma(std::span<const LindbladChannel> channels) noexcept;

// Empty channel list -> 0.
double decoherence_rate(const DensityState& rho0, std::span<const LindbladChannel> channels);

// ---- GUE channels -------------------------------------------------------

// Closed form Gamma d^2 / (d + 1) as published.
double rate_gue_paper(std::size_t d, double total_gamma);

// Entrywise Wick evaluation Gamma (d - 1/tr rho0^2); Gamma (d - 1) when pure.
double rate_gue_wick(std::size_t d, double total_gamma, double initial_purity = 1.0);

// Monte-Carlo mean of decoherence_rate over V ~ GUE(d) (stream (seed, i)).
EnsembleEstimate rate_gue_mc(const DensityState& rho0, double gamma, std::size_t n_samples,
                             std::uint64_t seed);

// ---- k-body sigma^z strings ----------------------------------------------

struct KBodySpec {
    int n = 1;
    int k = 1;
    double epsilon = 1.0;
};

// Diagonal of epsilon * sum_{l1<..<lk} sigma^z_{l1}...sigma^z_{lk}: entry for
// basis state b (bit l set = spin down) is epsilon * e_k(s_1..s_n).
// Requires 1 <= k <= n <= 24; throws DomainError otherwise.
RealVector build_kbody_diagonal(const KBodySpec& spec);
HermitianOperator build_kbody_operator(const KBodySpec& spec);

// 2 gamma var(V) for a pure state and a diagonal V, O(2^n).
double pure_state_rate_diagonal(const ComplexVector& psi, const RealVector& diag,
                                double gamma);

double binomial(int n, int k);

enum class KBodyBoundMode { approx, exact_binomial };

// approx: 2 gamma eps^2 n^{2k} / (k!)^2; exact_binomial: 2 gamma eps^2 C(n,k)^2.
double rate_kbody_bound(const KBodySpec& spec, double gamma, KBodyBoundMode mode);

// eps^2 such that rate_gue_paper(2^n0) equals the k-body bound at n0.
double calibrate_epsilon_sq(int n0, int k, double gamma,
                            KBodyBoundMode mode = KBodyBoundMode::approx);

inline constexpr int kCrossoverScanLimit = 64;

// Onset of sustained dominance: smallest n >= k such that
// rate_gue_paper(2^m) > k-body bound (strictly) for every m in [n, 64].
// nullopt when the GUE rate does not dominate at n = 64.
std::optional<int> crossover_min_n(int k, double epsilon_sq, KBodyBoundMode mode);

// ---- two-body random ensemble ---------------------------------------------

struct TbreSpec {
    int n = 2;
    double coupling_mean = 0.0;
    double coupling_sd = 1.0;
    double field_mean = 0.0;
    double field_sd = 1.0;
};

// sum_l sum_{a,a'} sigma_l^a sigma_{l+1}^{a'} (open chain), 2^n x 2^n.
HermitianOperator tbre_noise_operator(int n);

// Random H0 = sum A sigma sigma + sum B sigma with couplings drawn from `rng`.
HermitianOperator tbre_hamiltonian(const TbreSpec& spec, RngStream& rng);

// (rate with the coupling-noise operator, bound 162 gamma (n-1)^2).
std::pair<double, double> tbre_rate_and_bound(const TbreSpec& spec,
                                              const DensityState& rho0, double gamma);

// ---- Lipkin-Meshkov-Glick, zero field ---------------------------------------

// 4 gamma var_beta(H0) for H0 = eps sum_{l<m} s^z_l s^z_m, evaluated on the
// sector spectrum E_j = eps[(n-2j)^2 - n]/2 with multiplicity C(n,j).
double rate_lmg(int n, double epsilon, double beta, double gamma);

// Pauli matrices, n-site embedding.
ComplexMatrix pauli(char axis);
ComplexMatrix embed_site_operator(const ComplexMatrix& op, int site, int n);

}  // namespace dephase
