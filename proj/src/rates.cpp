// rates.cpp

#include "dephase/rates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "dephase/ensembles.hpp"
#include "dephase/errors.hpp"

namespace dephase {

LindbladChannel::LindbladChannel(double gamma_, HermitianOperator v_)
    : gamma(gamma_), v(std::move(v_)) {
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
        throw ContractViolation("LindbladChannel: gamma must be finite and >= 0");
    }
}

double total_gamma(std::span<const LindbladChannel> channels) noexcept {
    double g = 0.0;
    for (const auto& c : channels) g += c.gamma;
    return g;
}

double decoherence_rate(const DensityState& rho0, std::span<const LindbladChannel> channels) {
    if (channels.empty()) return 0.0;
    const double p = purity(rho0);
    if (!(p > 0.0)) throw ContractViolation("decoherence_rate: tr(rho0^2) must be positive");
    double acc = 0.0;
    for (const auto& ch : channels) {
        if (ch.v.dim() != rho0.dim()) {
            throw ContractViolation("decoherence_rate: channel dimension mismatch");
        }
        const double cov = rho0.is_pure() ? variance(rho0, ch.v)
                                          : modified_covariance(rho0, ch.v, ch.v).real();
        acc += ch.gamma * cov;
    }
    return 2.0 * acc / p;
}

double rate_gue_paper(std::size_t d, double total_gamma) {
    if (d == 0) throw DomainError("rate_gue_paper: d must be >= 1");
    const double dd = static_cast<double>(d);
    return total_gamma * dd * dd / (dd + 1.0);
}

double rate_gue_wick(std::size_t d, double total_gamma, double initial_purity) {
    if (d == 0) throw DomainError("rate_gue_wick: d must be >= 1");
    if (!(initial_purity > 0.0)) throw DomainError("rate_gue_wick: purity must be positive");
    return total_gamma * (static_cast<double>(d) - 1.0 / initial_purity);
}

EnsembleEstimate rate_gue_mc(const DensityState& rho0, double gamma, std::size_t n_samples,
                             std::uint64_t seed) {
    if (n_samples == 0) throw ContractViolation("rate_gue_mc: n_samples must be >= 1");
    const GueSpec spec{rho0.dim()};
    return ensemble_mean(n_samples, seed, [&](std::size_t i) {
        RngStream rng(seed, i);
        const LindbladChannel ch(gamma, sample_gue(spec, rng));
        return decoherence_rate(rho0, std::span(&ch, 1));
    });
}

// ---------------------------------------------------------------------------

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return std::round(c);
}

namespace {

void check_kbody(const KBodySpec& spec) {
    if (spec.n < 1 || spec.n > 24) throw DomainError("k-body operator: need 1 <= n <= 24");
    if (spec.k < 1 || spec.k > spec.n) {
        std::ostringstream os;
        os << "k-body operator: locality k = " << spec.k << " outside [1, n = " << spec.n << "]";
        throw DomainError(os.str());
    }
}

// e_k(s_1..s_n) by e_j(s_1..s_m) = e_j(s_1..s_{m-1}) + s_m e_{j-1}(s_1..s_{m-1}).
double elementary_symmetric(std::span<const double> s, int k) {
    std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
    e[0] = 1.0;
    for (double sm : s) {
        for (int j = k; j >= 1; --j) e[j] += sm * e[j - 1];
    }
    return e[k];
}

}  // namespace

RealVector build_kbody_diagonal(const KBodySpec& spec) {
    check_kbody(spec);
    const int n = spec.n;
    // e_k only depends on the number of flipped spins.
    std::vector<double> by_down(static_cast<std::size_t>(n) + 1);
    std::vector<double> spins(static_cast<std::size_t>(n));
    for (int m = 0; m <= n; ++m) {
        for (int l = 0; l < n; ++l) spins[l] = l < m ? -1.0 : 1.0;
        by_down[m] = spec.epsilon * elementary_symmetric(spins, spec.k);
    }
    const std::size_t dim = std::size_t{1} << n;
    RealVector diag(static_cast<Eigen::Index>(dim));
    for (std::size_t b = 0; b < dim; ++b) {
        diag(static_cast<Eigen::Index>(b)) = by_down[std::popcount(b)];
    }
    return diag;
}

HermitianOperator build_kbody_operator(const KBodySpec& spec) {
    if (spec.n > 12) throw DomainError("build_kbody_operator: dense form limited to n <= 12");
    return HermitianOperator::from_real_diagonal(build_kbody_diagonal(spec));
}

double pure_state_rate_diagonal(const ComplexVector& psi, const RealVector& diag,
                                double gamma) {
    if (psi.size() != diag.size()) {
        throw ContractViolation("pure_state_rate_diagonal: dimension mismatch");
    }
    const RealVector prob = psi.cwiseAbs2();
    const double norm = prob.sum();
    const double mean = prob.dot(diag) / norm;
    const double second = prob.dot(diag.cwiseAbs2()) / norm;
    return 2.0 * gamma * (second - mean * mean);
}

namespace {

// Bound divided by 2 gamma eps^2.
double kbody_bound_unit(int n, int k, KBodyBoundMode mode) {
    if (k < 1 || k > n) throw DomainError("rate_kbody_bound: need 1 <= k <= n");
    if (mode == KBodyBoundMode::exact_binomial) {
        const double c = binomial(n, k);
        return c * c;
    }
    const double kfact = std::tgamma(k + 1.0);
    return std::pow(static_cast<double>(n), 2.0 * k) / (kfact * kfact);
}

}  // namespace

double rate_kbody_bound(const KBodySpec& spec, double gamma, KBodyBoundMode mode) {
    return 2.0 * gamma * spec.epsilon * spec.epsilon * kbody_bound_unit(spec.n, spec.k, mode);
}

double calibrate_epsilon_sq(int n0, int k, double gamma, KBodyBoundMode mode) {
    if (n0 < k || k < 1) throw DomainError("calibrate_epsilon_sq: need n0 >= k >= 1");
    if (n0 > 62) throw DomainError("calibrate_epsilon_sq: n0 too large");
    const double gue = rate_gue_paper(std::size_t{1} << n0, gamma);
    return gue / (2.0 * gamma * kbody_bound_unit(n0, k, mode));
}

std::optional<int> crossover_min_n(int k, double epsilon_sq, KBodyBoundMode mode) {
    if (k < 1) throw DomainError("crossover_min_n: k must be >= 1");
    if (!(epsilon_sq > 0.0)) throw DomainError("crossover_min_n: epsilon^2 must be positive");
    // gamma cancels; compare D / gamma. Ties (the calibration point) are losses.
    auto gue_wins = [&](int n) {
        const double d = std::ldexp(1.0, n);
        const double gue = d * d / (d + 1.0);
        return gue > 2.0 * epsilon_sq * kbody_bound_unit(n, k, mode);
    };
    if (k > kCrossoverScanLimit || !gue_wins(kCrossoverScanLimit)) return std::nullopt;
    int n = kCrossoverScanLimit;
    while (n - 1 >= k && gue_wins(n - 1)) --n;
    return n;
}

// ---------------------------------------------------------------------------

ComplexMatrix pauli(char axis) {
    ComplexMatrix p(2, 2);
    switch (axis) {
        case 'x': p << 0, 1, 1, 0; break;
        case 'y': p << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case 'z': p << 1, 0, 0, -1; break;
        default: throw ContractViolation("pauli: axis must be x, y or z");
    }
    return p;
}

ComplexMatrix embed_site_operator(const ComplexMatrix& op, int site, int n) {
    if (site < 0 || site >= n) throw ContractViolation("embed_site_operator: bad site");
    const auto left = static_cast<Eigen::Index>(std::size_t{1} << site);
    const auto right = static_cast<Eigen::Index>(std::size_t{1} << (n - site - 1));
    return kron(kron(ComplexMatrix::Identity(left, left), op),
                ComplexMatrix::Identity(right, right));
}

namespace {

// Adds a two-site operator acting on sites (l, l+1) into `m` (site 0 is the
// most significant bit).
void add_two_site(ComplexMatrix& m, const ComplexMatrix& op4, int l, int n) {
    const std::size_t dim = std::size_t{1} << n;
    const int shift = n - l - 2;
    const std::size_t mask = std::size_t{3} << shift;
    for (std::size_t col = 0; col < dim; ++col) {
        const std::size_t local_in = (col & mask) >> shift;
        const std::size_t rest = col & ~mask;
        for (std::size_t local_out = 0; local_out < 4; ++local_out) {
            const Complex a = op4(static_cast<Eigen::Index>(local_out),
                                  static_cast<Eigen::Index>(local_in));
            if (a == Complex(0.0)) continue;
            const std::size_t row = rest | (local_out << shift);
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += a;
        }
    }
}

void check_tbre(int n) {
    if (n < 2 || n > 12) throw DomainError("TBRE: spin count must be in [2, 12]");
}

}  // namespace

HermitianOperator tbre_noise_operator(int n) {
    check_tbre(n);
    const ComplexMatrix s = pauli('x') + pauli('y') + pauli('z');
    const ComplexMatrix ss = kron(s, s);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    ComplexMatrix v = ComplexMatrix::Zero(dim, dim);
    for (int l = 0; l + 1 < n; ++l) add_two_site(v, ss, l, n);
    return HermitianOperator(v);
}

HermitianOperator tbre_hamiltonian(const TbreSpec& spec, RngStream& rng) {
    check_tbre(spec.n);
    const int n = spec.n;
    const char axes[3] = {'x', 'y', 'z'};
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    for (int l = 0; l + 1 < n; ++l) {
        ComplexMatrix bond = ComplexMatrix::Zero(4, 4);
        for (char a : axes) {
            for (char b : axes) {
                bond += rng.normal(spec.coupling_mean, spec.coupling_sd) *
                        kron(pauli(a), pauli(b));
            }
        }
        add_two_site(h, bond, l, n);
    }
    for (int l = 0; l < n; ++l) {
        for (char a : axes) {
            h += rng.normal(spec.field_mean, spec.field_sd) * embed_site_operator(pauli(a), l, n);
        }
    }
    return HermitianOperator(h);
}

std::pair<double, double> tbre_rate_and_bound(const TbreSpec& spec,
                                              const DensityState& rho0, double gamma) {
    check_tbre(spec.n);
    const LindbladChannel ch(gamma, tbre_noise_operator(spec.n));
    const double rate = decoherence_rate(rho0, std::span(&ch, 1));
    const double bound = 162.0 * gamma * (spec.n - 1.0) * (spec.n - 1.0);
    return {rate, bound};
}

double rate_lmg(int n, double epsilon, double beta, double gamma) {
    if (n < 2) throw DomainError("rate_lmg: n must be >= 2");
    if (beta < 0.0) throw DomainError("rate_lmg: beta must be >= 0");
    std::vector<double> energy(static_cast<std::size_t>(n) + 1);
    std::vector<double> logw(energy.size());
    for (int j = 0; j <= n; ++j) {
        const double m = n - 2.0 * j;
        energy[j] = 0.5 * epsilon * (m * m - n);
        const double log_mult = std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0);
        logw[j] = log_mult - beta * energy[j];
    }
    const double shift = *std::max_element(logw.begin(), logw.end());
    double z = 0.0, mean = 0.0;
    for (std::size_t j = 0; j < energy.size(); ++j) {
        const double w = std::exp(logw[j] - shift);
        z += w;
        mean += w * energy[j];
    }
    mean /= z;
    double var = 0.0;
    for (std::size_t j = 0; j < energy.size(); ++j) {
        const double dev = energy[j] - mean;
        var += std::exp(logw[j] - shift) * dev * dev;
    }
    return 4.0 * gamma * var / z;
}

}  // namespace dephase
