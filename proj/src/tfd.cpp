// tfd.cpp

#include "dephase/tfd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dephase/ensembles.hpp"
#include "dephase/errors.hpp"

namespace dephase {

namespace {

double min_energy(std::span<const double> e) { return *std::min_element(e.begin(), e.end()); }

// Normalized Gibbs probabilities, max-shifted so beta up to 1e3 is safe.
RealVector gibbs_probabilities(std::span<const double> e, double beta) {
    RealVector p(static_cast<Eigen::Index>(e.size()));
    const double e0 = beta > 0.0 ? min_energy(e) : 0.0;
    double z = 0.0;
    for (std::size_t k = 0; k < e.size(); ++k) {
        const double w = std::exp(-beta * (e[k] - e0));
        p(static_cast<Eigen::Index>(k)) = w;
        z += w;
    }
    return p / z;
}

RealVector gue_spectrum(std::size_t d, RngStream& rng) {
    const auto v = sample_gue(GueSpec{d}, rng);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(v.matrix(), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalFailure("GUE spectrum: eigensolver did not converge");
    }
    return es.eigenvalues();
}

std::span<const double> as_span(const RealVector& v) {
    return {v.data(), static_cast<std::size_t>(v.size())};
}

double purity_from_populations(std::span<const double> e, const RealVector& p, double gamma,
                               double t) {
    if (t == 0.0) return 1.0;
    if (std::isinf(t)) return p.squaredNorm();
    const double rate = 2.0 * gamma * t;
    const auto d = e.size();
    double off = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = k + 1; l < d; ++l) {
            const double gap = e[k] - e[l];
            off += p(static_cast<Eigen::Index>(k)) * p(static_cast<Eigen::Index>(l)) *
                   std::exp(-rate * gap * gap);
        }
    }
    return p.squaredNorm() + 2.0 * off;
}

}  // namespace

double log_partition(std::span<const double> energies, double beta) {
    if (energies.empty()) throw ContractViolation("log_partition: empty spectrum");
    const double e0 = min_energy(energies);
    double z = 0.0;
    for (double e : energies) z += std::exp(-beta * (e - e0));
    return -beta * e0 + std::log(z);
}

PartitionValue partition_continued(std::span<const double> energies, double beta, double y) {
    const RealVector p = gibbs_probabilities(energies, beta);
    Complex ratio(0.0, 0.0);
    for (std::size_t k = 0; k < energies.size(); ++k) {
        ratio += p(static_cast<Eigen::Index>(k)) * std::polar(1.0, y * energies[k]);
    }
    return PartitionValue{log_partition(energies, beta), ratio};
}

double gibbs_variance(std::span<const double> energies, double beta) {
    const RealVector p = gibbs_probabilities(energies, beta);
    double mean = 0.0;
    for (std::size_t k = 0; k < energies.size(); ++k) mean += p(static_cast<Eigen::Index>(k)) * energies[k];
    double var = 0.0;
    for (std::size_t k = 0; k < energies.size(); ++k) {
        const double dev = energies[k] - mean;
        var += p(static_cast<Eigen::Index>(k)) * dev * dev;
    }
    return var;
}

TfdSystem build_tfd(SpectralData spectral, double beta, double gamma) {
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
        throw ContractViolation("build_tfd: beta must be finite and >= 0");
    }
    if (!(gamma > 0.0)) throw ContractViolation("build_tfd: gamma must be positive");
    if (spectral.eigenvalues.size() == 0 || !spectral.eigenvalues.allFinite()) {
        throw ContractViolation("build_tfd: eigenvalues must be finite and non-empty");
    }
    TfdSystem sys;
    sys.spectral = std::move(spectral);
    sys.beta = beta;
    sys.gamma = gamma;
    const auto e = as_span(sys.spectral.eigenvalues);
    sys.log_z = log_partition(e, beta);
    sys.populations = gibbs_probabilities(e, beta);
    sys.weights = sys.populations.cwiseSqrt();
    return sys;
}

TfdSystem build_tfd_from_energies(const RealVector& energies, double beta, double gamma) {
    const auto d = energies.size();
    return build_tfd(SpectralData{energies, ComplexMatrix::Identity(d, d)}, beta, gamma);
}

TfdDensity evolve_tfd(const TfdSystem& sys, double t) {
    if (t < 0.0) throw ContractViolation("evolve_tfd: t must be >= 0");
    const auto d = static_cast<Eigen::Index>(sys.dim());
    const auto& e = sys.spectral.eigenvalues;
    TfdDensity out{ComplexMatrix(d, d)};
    for (Eigen::Index k = 0; k < d; ++k) {
        for (Eigen::Index l = 0; l < d; ++l) {
            const double gap = e(k) - e(l);
            const double mag = sys.weights(k) * sys.weights(l) * std::exp(-sys.gamma * t * gap * gap);
            out.coefficients(k, l) = std::polar(mag, -2.0 * t * gap);
        }
    }
    return out;
}

ComplexMatrix tfd_density_matrix(const TfdSystem& sys, const TfdDensity& coeffs) {
    const auto d = static_cast<Eigen::Index>(sys.dim());
    const auto& u = sys.spectral.eigenvectors;
    // Columns |v_k> (x) |v_k>
    ComplexMatrix pairs(d * d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        pairs.col(k) = kron(u.col(k), u.col(k));
    }
    return pairs * coeffs.coefficients * pairs.adjoint();
}

ComplexMatrix tfd_reduced_state(const TfdSystem& sys) {
    const auto& u = sys.spectral.eigenvectors;
    return u * sys.populations.cast<Complex>().asDiagonal() * u.adjoint();
}

double purity_tfd(const TfdSystem& sys, double t) {
    if (t < 0.0) throw ContractViolation("purity_tfd: t must be >= 0");
    return purity_from_populations(sys.energies(), sys.populations, sys.gamma, t);
}

double purity_tfd_limit(const TfdSystem& sys) {
    const auto e = sys.energies();
    return std::exp(log_partition(e, 2.0 * sys.beta) - 2.0 * sys.log_z);
}

double purity_tfd_hs(const TfdSystem& sys, double t, std::size_t quadrature_nodes) {
    if (!(t > 0.0)) {
        throw ContractViolation("purity_tfd_hs: the Gaussian kernel degenerates at t = 0; "
                                "use purity_tfd");
    }
    const auto rule = gauss_hermite(quadrature_nodes);
    const double scale = std::sqrt(8.0 * sys.gamma * t);
    const auto e = sys.energies();
    // Symmetric rule and |Z(beta - iy)|^2 even in y: sum each mirrored pair once.
    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double y = scale * rule.nodes[i];
        Complex ratio(0.0, 0.0);
        for (std::size_t k = 0; k < e.size(); ++k) {
            ratio += sys.populations(static_cast<Eigen::Index>(k)) * std::polar(1.0, y * e[k]);
        }
        total += rule.weights[i] * std::norm(ratio);
    }
    return total / std::sqrt(std::numbers::pi);
}

std::size_t recommended_hs_nodes(const TfdSystem& sys, double t) {
    const auto e = sys.energies();
    const auto [lo, hi] = std::minmax_element(e.begin(), e.end());
    const double omega = std::sqrt(8.0 * sys.gamma * t) * (*hi - *lo);
    const double n = 0.75 * omega * omega + 4.0 * omega + 64.0;
    return static_cast<std::size_t>(std::min(n, 4096.0));
}

double rate_tfd(const TfdSystem& sys) {
    return 4.0 * sys.gamma * gibbs_variance(sys.energies(), sys.beta);
}

std::vector<std::vector<EnsembleEstimate>> ensemble_purity_tfd(
    int n_qubits, std::span<const double> betas, double gamma, std::span<const double> times,
    std::size_t n_samples, std::uint64_t seed) {
    if (n_qubits < 1 || n_qubits > 10) {
        throw ContractViolation("ensemble_purity_tfd: need 1 <= n_qubits <= 10");
    }
    if (!(gamma > 0.0)) throw ContractViolation("ensemble_purity_tfd: gamma must be positive");
    for (double b : betas) {
        if (!(b >= 0.0)) throw ContractViolation("ensemble_purity_tfd: beta must be >= 0");
    }
    for (double t : times) {
        if (!(t >= 0.0)) throw ContractViolation("ensemble_purity_tfd: times must be >= 0");
    }
    const std::size_t d = std::size_t{1} << n_qubits;
    const std::size_t nb = betas.size(), nt = times.size();
    auto blocks = blocked_reduce<std::vector<RunningStats>>(
        n_samples, kDefaultBlockSize, [&] { return std::vector<RunningStats>(nb * nt); },
        [&](std::vector<RunningStats>& acc, std::size_t i) {
            RngStream rng(seed, i);
            const RealVector e = gue_spectrum(d, rng);
            for (std::size_t b = 0; b < nb; ++b) {
                const RealVector p = gibbs_probabilities(as_span(e), betas[b]);
                for (std::size_t j = 0; j < nt; ++j) {
                    acc[b * nt + j].push(purity_from_populations(as_span(e), p, gamma, times[j]));
                }
            }
        });
    std::vector<RunningStats> total(nb * nt);
    for (const auto& blk : blocks) {
        for (std::size_t c = 0; c < total.size(); ++c) total[c].merge(blk[c]);
    }
    std::vector<std::vector<EnsembleEstimate>> out(nb, std::vector<EnsembleEstimate>(nt));
    for (std::size_t b = 0; b < nb; ++b) {
        for (std::size_t j = 0; j < nt; ++j) out[b][j] = to_estimate(total[b * nt + j], seed);
    }
    return out;
}

std::vector<EnsembleEstimate> ensemble_purity_tfd(int n_qubits, double beta, double gamma,
                                                  std::span<const double> times,
                                                  std::size_t n_samples, std::uint64_t seed) {
    const double betas[] = {beta};
    return ensemble_purity_tfd(n_qubits, std::span<const double>(betas), gamma, times, n_samples,
                               seed)
        .front();
}

AnnealingResult annealing_check(double beta, std::size_t d, std::size_t n_samples,
                                std::uint64_t seed) {
    if (n_samples < 2) throw ContractViolation("annealing_check: need at least 2 samples");
    if (d == 0) throw ContractViolation("annealing_check: d must be >= 1");
    std::vector<double> log_z(n_samples);
    parallel_for_blocks(n_samples, [&](std::size_t i) {
        RngStream rng(seed, i);
        const RealVector e = gue_spectrum(d, rng);
        log_z[i] = log_partition(as_span(e), beta);
    });
    RunningStats stats;
    for (double v : log_z) stats.push(v);
    const double shift = *std::max_element(log_z.begin(), log_z.end());
    double sum = 0.0;
    for (double v : log_z) sum += std::exp(v - shift);

    AnnealingResult r;
    r.mean_log_z = stats.mean;
    r.std_error_log_z = stats.stderr_of_mean();
    r.log_mean_z = shift + std::log(sum / static_cast<double>(n_samples));
    r.log_mean_z_exact = z_gue_exact(beta, d).log_value;
    r.n_samples = n_samples;
    return r;
}

double AnnealedRates::relative_gap() const noexcept {
    return std::abs(quenched.mean - annealed) / std::abs(annealed);
}

AnnealedRates annealing_rates(double beta, std::size_t d, double gamma, std::size_t n_samples,
                              std::uint64_t seed) {
    AnnealedRates r;
    r.quenched = ensemble_mean(n_samples, seed, [&](std::size_t i) {
        RngStream rng(seed, i);
        const RealVector e = gue_spectrum(d, rng);
        return 4.0 * gamma * gibbs_variance(as_span(e), beta);
    });
    r.annealed = rate_tfd_gue_exact(beta, d, gamma);
    return r;
}

}  // namespace dephase
