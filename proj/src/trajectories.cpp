// trajectories.cpp

#include "dephase/trajectories.hpp"

#include <cmath>
#include <sstream>

#include "dephase/errors.hpp"
#include "dephase/parallel.hpp"

namespace dephase {

namespace {

constexpr Complex kI(0.0, 1.0);

bool is_diagonal(const ComplexMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i != j && m(i, j) != Complex(0.0, 0.0)) return false;
        }
    }
    return true;
}

// One Euler-Maruyama step psi += (G dt - i sum dW_mu S_mu) psi, with
// G = -i H0 - 1/2 sum gamma V^2 and S_mu = sqrt(gamma_mu) V_mu. Diagonal
// problems (energy dephasing in the eigenbasis) take an O(d) path.
class Stepper {
public:
    Stepper(const HermitianOperator& h0, std::span<const LindbladChannel> channels, double dt)
        : dt_(dt) {
        diagonal_ = is_diagonal(h0.matrix());
        for (const auto& c : channels) diagonal_ = diagonal_ && is_diagonal(c.v.matrix());
        const auto d = static_cast<Eigen::Index>(h0.dim());
        ComplexMatrix g = -kI * h0.matrix();
        for (const auto& c : channels) {
            g -= (0.5 * c.gamma) * (c.v.matrix() * c.v.matrix());
            s_.push_back(std::sqrt(c.gamma) * c.v.matrix());
        }
        if (diagonal_) {
            g_diag_ = g.diagonal();
            for (const auto& s : s_) s_diag_.push_back(s.diagonal().real());
        } else {
            g_ = std::move(g);
        }
        tmp_.resize(d);
    }

    [[nodiscard]] std::size_t n_channels() const noexcept { return s_.size(); }

    void step(ComplexVector& psi, std::span<const double> dw) {
        if (diagonal_) {
            for (Eigen::Index j = 0; j < psi.size(); ++j) {
                double noise = 0.0;
                for (std::size_t mu = 0; mu < s_diag_.size(); ++mu) noise += dw[mu] * s_diag_[mu](j);
                psi(j) *= Complex(1.0, 0.0) + dt_ * g_diag_(j) - kI * noise;
            }
            return;
        }
        tmp_.noalias() = dt_ * (g_ * psi);
        for (std::size_t mu = 0; mu < s_.size(); ++mu) {
            tmp_.noalias() -= (kI * dw[mu]) * (s_[mu] * psi);
        }
        psi += tmp_;
    }

private:
    double dt_;
    bool diagonal_ = false;
    ComplexMatrix g_;
    std::vector<ComplexMatrix> s_;
    ComplexVector g_diag_;
    std::vector<RealVector> s_diag_;
    ComplexVector tmp_;
};

std::size_t record_count(const TrajectoryConfig& cfg) {
    // step 0, every record_every-th step, and the final step
    std::size_t n = 1 + cfg.steps / cfg.record_every;
    if (cfg.steps % cfg.record_every != 0) ++n;
    return n;
}

bool is_record_step(const TrajectoryConfig& cfg, std::size_t s) {
    return s % cfg.record_every == 0 || s == cfg.steps;
}

void check_inputs(const HermitianOperator& h0, std::span<const LindbladChannel> channels,
                  const DensityState& psi0) {
    if (!psi0.is_pure()) throw ContractViolation("trajectories: psi0 must be a pure state");
    if (h0.dim() != psi0.dim()) throw ContractViolation("trajectories: H0 dimension mismatch");
    for (const auto& c : channels) {
        if (c.v.dim() != psi0.dim()) {
            throw ContractViolation("trajectories: channel dimension mismatch");
        }
    }
}

// Runs one trajectory, handing every recorded state to `visit(record_index, psi)`.
template <class Visit>
void run_trajectory(Stepper& stepper, const DensityState& psi0, const TrajectoryConfig& cfg,
                    RngStream& rng, std::vector<double>* raw_norms, Visit&& visit) {
    ComplexVector psi = psi0.vector();
    std::vector<double> dw(stepper.n_channels());
    const double sqrt_dt = std::sqrt(cfg.dt);
    std::size_t rec = 0;
    visit(rec++, psi);
    for (std::size_t s = 1; s <= cfg.steps; ++s) {
        for (auto& w : dw) w = sqrt_dt * rng.normal();
        stepper.step(psi, dw);
        const double norm = psi.norm();
        if (raw_norms) raw_norms->push_back(norm);
        if (!(norm >= kNormCollapse) || !std::isfinite(norm)) {
            std::ostringstream msg;
            msg << "sse_trajectory: norm collapsed to " << norm << " at step " << s
                << "; reduce dt";
            throw NumericalFailure(msg.str());
        }
        if (cfg.renormalize) psi /= norm;
        if (is_record_step(cfg, s)) visit(rec++, psi);
    }
}

struct BlockSums {
    std::size_t count = 0;
    std::vector<ComplexMatrix> rho;
    std::vector<RealMatrix> sq;
};

}  // namespace

void validate_config(const TrajectoryConfig& cfg, std::span<const LindbladChannel> channels) {
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
        throw ContractViolation("TrajectoryConfig: dt must be positive");
    }
    if (cfg.n_trajectories == 0) throw ContractViolation("TrajectoryConfig: n_trajectories >= 1");
    if (cfg.record_every == 0) throw ContractViolation("TrajectoryConfig: record_every >= 1");
    double noise = 0.0;
    for (const auto& c : channels) {
        const double n = spectral_norm(c.v);
        noise += c.gamma * n * n;
    }
    if (cfg.dt * noise > kMaxSseStepScale) {
        std::ostringstream msg;
        msg << "TrajectoryConfig: dt * sum gamma ||V||^2 = " << cfg.dt * noise << " exceeds "
            << kMaxSseStepScale;
        throw ContractViolation(msg.str());
    }
}

double default_sse_dt(const HermitianOperator& h0, std::span<const LindbladChannel> channels) {
    double s = spectral_norm(h0);
    for (const auto& c : channels) {
        const double n = spectral_norm(c.v);
        s += c.gamma * n * n;
    }
    return s > 0.0 ? 1e-3 / s : 1e-3;
}

TrajectoryPath sse_trajectory(const HermitianOperator& h0,
                              std::span<const LindbladChannel> channels,
                              const DensityState& psi0, const TrajectoryConfig& cfg,
                              RngStream& stream) {
    validate_config(cfg, channels);
    check_inputs(h0, channels, psi0);
    Stepper stepper(h0, channels, cfg.dt);
    TrajectoryPath path;
    path.raw_norms.reserve(cfg.steps);
    run_trajectory(stepper, psi0, cfg, stream, &path.raw_norms,
                   [&](std::size_t, const ComplexVector& psi) { path.states.push_back(psi); });
    path.times.push_back(0.0);
    for (std::size_t s = 1; s <= cfg.steps; ++s) {
        if (is_record_step(cfg, s)) path.times.push_back(static_cast<double>(s) * cfg.dt);
    }
    return path;
}

TrajectoryAverage average_trajectories(const HermitianOperator& h0,
                                       std::span<const LindbladChannel> channels,
                                       const DensityState& psi0, const TrajectoryConfig& cfg) {
    validate_config(cfg, channels);
    check_inputs(h0, channels, psi0);
    const std::size_t n_rec = record_count(cfg);
    const auto d = static_cast<Eigen::Index>(psi0.dim());

    auto blocks = blocked_reduce<BlockSums>(
        cfg.n_trajectories, kDefaultBlockSize,
        [&] {
            BlockSums b;
            b.rho.assign(n_rec, ComplexMatrix::Zero(d, d));
            b.sq.assign(n_rec, RealMatrix::Zero(d, d));
            return b;
        },
        [&](BlockSums& acc, std::size_t i) {
            RngStream rng(cfg.master_seed, i);
            Stepper stepper(h0, channels, cfg.dt);
            run_trajectory(stepper, psi0, cfg, rng, nullptr,
                           [&](std::size_t r, const ComplexVector& psi) {
                               const ComplexMatrix outer = psi * psi.adjoint();
                               acc.rho[r] += outer;
                               acc.sq[r] += outer.cwiseAbs2();
                           });
            ++acc.count;
        });

    TrajectoryAverage out;
    const std::size_t n = cfg.n_trajectories;
    const double nd = static_cast<double>(n);
    out.n_trajectories = n;
    out.times.push_back(0.0);
    for (std::size_t s = 1; s <= cfg.steps; ++s) {
        if (is_record_step(cfg, s)) out.times.push_back(static_cast<double>(s) * cfg.dt);
    }
    for (std::size_t r = 0; r < n_rec; ++r) {
        ComplexMatrix sum = ComplexMatrix::Zero(d, d);
        RealMatrix sq = RealMatrix::Zero(d, d);
        for (const auto& b : blocks) {
            sum += b.rho[r];
            sq += b.sq[r];
        }
        const ComplexMatrix mean = sum / nd;
        RealMatrix se = RealMatrix::Zero(d, d);
        if (n > 1) {
            const RealMatrix var = ((sq / nd) - mean.cwiseAbs2()).cwiseMax(0.0) * (nd / (nd - 1.0));
            se = (var / nd).cwiseSqrt();
        }
        out.rho.push_back(mean);
        out.rho_stderr.push_back(se);
    }

    if (n == 1) {
        for (const auto& rho : out.rho) out.purity.push_back(rho.squaredNorm());
        out.purity_stderr.assign(n_rec, 0.0);
        return out;
    }

    // Purity as the U-statistic over pairs i != j of |<psi_i|psi_j>|^2. Its
    // projection h_i = <psi_i| rho_{-i} |psi_i> averages to the estimate and
    // gives the standard error 2 sd(h) / sqrt(N). The trajectories are replayed
    // from their streams, so no states are stored.
    auto second = blocked_reduce<std::vector<RunningStats>>(
        n, kDefaultBlockSize, [&] { return std::vector<RunningStats>(n_rec); },
        [&](std::vector<RunningStats>& acc, std::size_t i) {
            RngStream rng(cfg.master_seed, i);
            Stepper stepper(h0, channels, cfg.dt);
            run_trajectory(stepper, psi0, cfg, rng, nullptr,
                           [&](std::size_t r, const ComplexVector& psi) {
                               const double overlap = psi.dot(out.rho[r] * psi).real();
                               const double n2 = psi.squaredNorm();
                               acc[r].push((nd * overlap - n2 * n2) / (nd - 1.0));
                           });
        });
    for (std::size_t r = 0; r < n_rec; ++r) {
        RunningStats h;
        for (const auto& b : second) h.merge(b[r]);
        out.purity.push_back(h.mean);
        out.purity_stderr.push_back(2.0 * std::sqrt(h.sample_variance() / nd));
    }
    return out;
}

NoiseSetup tfd_two_noise_config(const SpectralData& spectral, double beta, double gamma) {
    const std::size_t d = spectral.dim();
    if (d == 0 || d * d > (std::size_t{1} << 12)) {
        throw ContractViolation("tfd_two_noise_config: need 1 <= d^2 <= 2^12");
    }
    if (!(beta >= 0.0)) throw ContractViolation("tfd_two_noise_config: beta must be >= 0");
    if (!(gamma > 0.0)) throw ContractViolation("tfd_two_noise_config: gamma must be positive");
    const auto& e = spectral.eigenvalues;
    const auto dd = static_cast<Eigen::Index>(d);
    RealVector left(dd * dd), right(dd * dd);
    for (Eigen::Index k = 0; k < dd; ++k) {
        for (Eigen::Index l = 0; l < dd; ++l) {
            left(k * dd + l) = e(k);
            right(k * dd + l) = e(l);
        }
    }
    // Gibbs weights, max-shifted
    const double e0 = e.minCoeff();
    RealVector w(dd);
    for (Eigen::Index k = 0; k < dd; ++k) w(k) = std::exp(-0.5 * beta * (e(k) - e0));
    w /= w.norm();
    ComplexVector psi = ComplexVector::Zero(dd * dd);
    for (Eigen::Index k = 0; k < dd; ++k) psi(k * dd + k) = w(k);

    auto hl = HermitianOperator::from_real_diagonal(left);
    auto hr = HermitianOperator::from_real_diagonal(right);
    NoiseSetup setup{hl + hr, {}, DensityState::pure_normalized(psi)};
    setup.channels.emplace_back(gamma, std::move(hl));
    setup.channels.emplace_back(gamma, std::move(hr));
    return setup;
}

}  // namespace dephase
