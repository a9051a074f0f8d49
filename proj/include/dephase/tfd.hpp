// tfd.hpp: thermofield-double energy dephasing.
//
// With noise on H in each copy, the TFD density matrix stays in the span of
// |k>|k><l|<l| and evolves in closed form:
//   c_kl(t) = exp(-beta (E_k + E_l)/2 - 2 i t (E_k - E_l) - gamma t (E_k - E_l)^2) / Z.
// States are therefore stored as d x d Schmidt coefficients, never as d^2
// vectors.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dephase/hermitian.hpp"
#include "dephase/parallel.hpp"
#include "dephase/specfun.hpp"

namespace dephase {

// ln tr e^{-beta H} from eigenvalues, max-shifted.
double log_partition(std::span<const double> energies, double beta);

// Analytic continuation: log_value = ln Z(beta), complex_value is the
// normalized ratio Z(beta - i y) / Z(beta), so |complex_value| <= 1.
PartitionValue partition_continued(std::span<const double> energies, double beta, double y);

// Gibbs variance of the spectrum at inverse temperature beta.
double gibbs_variance(std::span<const double> energies, double beta);

struct TfdSystem {
    SpectralData spectral;
    double beta = 0.0;
    double gamma = 1.0;
    double log_z = 0.0;
    RealVector weights;      // e^{-beta E_k / 2} / sqrt(Z)
    RealVector populations;  // weights^2 (thermal probabilities)

    [[nodiscard]] std::size_t dim() const noexcept { return spectral.dim(); }
    [[nodiscard]] std::span<const double> energies() const noexcept {
        return {spectral.eigenvalues.data(), static_cast<std::size_t>(spectral.eigenvalues.size())};
    }
};

// Throws ContractViolation for beta < 0, gamma <= 0 or non-finite energies.
TfdSystem build_tfd(SpectralData spectral, double beta, double gamma = 1.0);

// Convenience for a bare spectrum (eigenvectors set to the identity).
TfdSystem build_tfd_from_energies(const RealVector& energies, double beta, double gamma = 1.0);

struct TfdDensity {
    ComplexMatrix coefficients;  // c_kl(t)

    [[nodiscard]] double purity() const noexcept { return coefficients.squaredNorm(); }
    [[nodiscard]] Complex trace() const noexcept { return coefficients.trace(); }
};

TfdDensity evolve_tfd(const TfdSystem& sys, double t);

// Dense d^2 x d^2 density matrix of `coeffs` in the product basis built from
// the system's eigenvectors: sum c_kl |v_k v_k><v_l v_l|.
ComplexMatrix tfd_density_matrix(const TfdSystem& sys, const TfdDensity& coeffs);

// Reduced state of either copy: sum_k p_k |v_k><v_k|.
ComplexMatrix tfd_reduced_state(const TfdSystem& sys);

// P_t = sum_kl p_k p_l exp(-2 gamma t (E_k - E_l)^2); t may be +infinity.
double purity_tfd(const TfdSystem& sys, double t);

// Z(2 beta) / Z(beta)^2.
double purity_tfd_limit(const TfdSystem& sys);

// Gaussian-integral form: (8 pi gamma t)^{-1/2} int e^{-y^2/(8 gamma t)}
// |Z(beta - i y)/Z(beta)|^2 dy on a Gauss-Hermite rule. Throws for t <= 0.
double purity_tfd_hs(const TfdSystem& sys, double t, std::size_t quadrature_nodes);

// Node count that resolves the fastest oscillation sqrt(8 gamma t) * (E_max - E_min)
// of the integrand; capped at 4096.
std::size_t recommended_hs_nodes(const TfdSystem& sys, double t);

// 4 gamma var_beta(H).
double rate_tfd(const TfdSystem& sys);

// Ensemble-averaged purity curve over GUE Hamiltonians of dimension 2^n.
// Each sample is diagonalized once and reused for every beta; result[b][t].
std::vector<std::vector<EnsembleEstimate>> ensemble_purity_tfd(
    int n_qubits, std::span<const double> betas, double gamma, std::span<const double> times,
    std::size_t n_samples, std::uint64_t seed);

// Single-beta form.
std::vector<EnsembleEstimate> ensemble_purity_tfd(int n_qubits, double beta, double gamma,
                                                  std::span<const double> times,
                                                  std::size_t n_samples, std::uint64_t seed);

// Quenched versus annealed averages of ln Z over the GUE.
struct AnnealingResult {
    double mean_log_z = 0.0;       // <ln Z>
    double log_mean_z = 0.0;       // ln <Z> (sample mean)
    double std_error_log_z = 0.0;
    double log_mean_z_exact = 0.0; // ln <Z> from the Laguerre closed form
    std::size_t n_samples = 0;
};

// Jensen guarantees mean_log_z <= log_mean_z for the empirical measure.
AnnealingResult annealing_check(double beta, std::size_t d, std::size_t n_samples,
                                std::uint64_t seed);

// Rate from the quenched average <4 gamma var_beta(H)> versus the annealed
// closed form 4 gamma d^2/dbeta^2 ln<Z>.
struct AnnealedRates {
    EnsembleEstimate quenched;
    double annealed = 0.0;

    [[nodiscard]] double relative_gap() const noexcept;
};

AnnealedRates annealing_rates(double beta, std::size_t d, double gamma,
                              std::size_t n_samples, std::uint64_t seed);

}  // namespace dephase
