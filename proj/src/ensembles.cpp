// ensembles.cpp

#include "dephase/ensembles.hpp"

#include <cmath>

#include "dephase/errors.hpp"
#include "dephase/specfun.hpp"

namespace dephase {

namespace {

// Entrywise Welford accumulator over complex matrices.
struct MatrixStats {
    std::uint64_t count = 0;
    ComplexMatrix mean;
    Eigen::MatrixXd m2_re;
    Eigen::MatrixXd m2_im;

    explicit MatrixStats(Eigen::Index d)
        : mean(ComplexMatrix::Zero(d, d)),
          m2_re(Eigen::MatrixXd::Zero(d, d)),
          m2_im(Eigen::MatrixXd::Zero(d, d)) {}

    void push(const ComplexMatrix& x) {
        ++count;
        const ComplexMatrix delta = x - mean;
        mean += delta / static_cast<double>(count);
        const ComplexMatrix after = x - mean;
        m2_re.array() += delta.real().array() * after.real().array();
        m2_im.array() += delta.imag().array() * after.imag().array();
    }

    void merge(const MatrixStats& o) {
        if (o.count == 0) return;
        if (count == 0) {
            *this = o;
            return;
        }
        const double n1 = static_cast<double>(count);
        const double n2 = static_cast<double>(o.count);
        const double n = n1 + n2;
        const ComplexMatrix delta = o.mean - mean;
        mean += delta * (n2 / n);
        m2_re += o.m2_re + delta.real().cwiseAbs2() * (n1 * n2 / n);
        m2_im += o.m2_im + delta.imag().cwiseAbs2() * (n1 * n2 / n);
        count += o.count;
    }

    MatrixEstimate finish(std::uint64_t seed) const {
        MatrixEstimate e;
        e.mean = mean;
        const double n = static_cast<double>(count);
        const double denom = count > 1 ? (n - 1.0) * n : 1.0;
        e.std_error_real = (m2_re / denom).cwiseSqrt();
        e.std_error_imag = (m2_im / denom).cwiseSqrt();
        e.n_samples = count;
        e.master_seed = seed;
        return e;
    }
};

template <class Sample>
MatrixEstimate matrix_mean(std::size_t d, std::size_t n, std::uint64_t seed,
                           Sample&& sample) {
    if (n == 0) throw ContractViolation("Monte-Carlo mean needs at least one sample");
    const auto dim = static_cast<Eigen::Index>(d);
    auto blocks = blocked_reduce<MatrixStats>(
        n, kDefaultBlockSize, [dim] { return MatrixStats(dim); },
        [&](MatrixStats& acc, std::size_t i) {
            RngStream rng(seed, i);
            acc.push(sample(rng));
        });
    MatrixStats total(dim);
    for (const auto& b : blocks) total.merge(b);
    return total.finish(seed);
}

double z_score(double diff, double se, double floor) {
    if (se <= 0.0) return std::abs(diff) <= floor ? 0.0 : INFINITY;
    return std::abs(diff) / se;
}

}  // namespace

HermitianOperator sample_gue(const GueSpec& spec, RngStream& rng) {
    if (spec.dim == 0) throw ContractViolation("sample_gue: dim must be >= 1");
    const auto d = static_cast<Eigen::Index>(spec.dim);
    const double diag_sd = std::sqrt(0.5);
    const double off_sd = 0.5;
    ComplexMatrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        m(i, i) = rng.normal() * diag_sd;
        for (Eigen::Index j = i + 1; j < d; ++j) {
            const double re = rng.normal() * off_sd;
            const double im = rng.normal() * off_sd;
            m(i, j) = Complex(re, im);
            m(j, i) = Complex(re, -im);
        }
    }
    return HermitianOperator(m);
}

ComplexMatrix sample_haar_unitary(std::size_t d, RngStream& rng) {
    if (d == 0) throw ContractViolation("sample_haar_unitary: d must be >= 1");
    const auto n = static_cast<Eigen::Index>(d);
    const double sd = std::sqrt(0.5);
    ComplexMatrix z(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const double re = rng.normal() * sd;
            const double im = rng.normal() * sd;
            z(i, j) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix& r = qr.matrixQR();
    for (Eigen::Index j = 0; j < n; ++j) {
        const Complex rjj = r(j, j);
        const double a = std::abs(rjj);
        if (a > 0.0) q.col(j) *= rjj / a;
    }
    return q;
}

bool MatrixEstimate::within(const ComplexMatrix& target, double k,
                            double abs_floor) const {
    return max_z_score(target, abs_floor) <= k;
}

double MatrixEstimate::max_z_score(const ComplexMatrix& target, double abs_floor) const {
    if (target.rows() != mean.rows() || target.cols() != mean.cols()) {
        throw ContractViolation("MatrixEstimate: dimension mismatch");
    }
    double worst = 0.0;
    for (Eigen::Index i = 0; i < mean.rows(); ++i) {
        for (Eigen::Index j = 0; j < mean.cols(); ++j) {
            const Complex diff = mean(i, j) - target(i, j);
            worst = std::max(worst, z_score(diff.real(), std_error_real(i, j), abs_floor));
            worst = std::max(worst, z_score(diff.imag(), std_error_imag(i, j), abs_floor));
        }
    }
    return worst;
}

MatrixEstimate haar_second_moment(const HermitianOperator& x, std::size_t n_samples,
                                  std::uint64_t seed) {
    const std::size_t d = x.dim();
    return matrix_mean(d, n_samples, seed, [&](RngStream& rng) {
        const ComplexMatrix u = sample_haar_unitary(d, rng);
        return ComplexMatrix(u * x.matrix() * u.adjoint());
    });
}

MatrixEstimate haar_fourth_moment(const HermitianOperator& x1, const HermitianOperator& x2,
                                  const HermitianOperator& x3, std::size_t n_samples,
                                  std::uint64_t seed) {
    const std::size_t d = x1.dim();
    if (x2.dim() != d || x3.dim() != d) {
        throw ContractViolation("haar_fourth_moment: dimension mismatch");
    }
    return matrix_mean(d, n_samples, seed, [&](RngStream& rng) {
        const ComplexMatrix u = sample_haar_unitary(d, rng);
        const ComplexMatrix ud = u.adjoint();
        return ComplexMatrix(u * x1.matrix() * ud * x2.matrix() * u * x3.matrix() * ud);
    });
}

ComplexMatrix haar_second_moment_exact(const HermitianOperator& x) {
    const auto d = static_cast<Eigen::Index>(x.dim());
    return ComplexMatrix::Identity(d, d) * (x.matrix().trace() / static_cast<double>(d));
}

ComplexMatrix haar_fourth_moment_exact(const HermitianOperator& x1,
                                       const HermitianOperator& x2,
                                       const HermitianOperator& x3) {
    const std::size_t dim = x1.dim();
    if (x2.dim() != dim || x3.dim() != dim) {
        throw ContractViolation("haar_fourth_moment_exact: dimension mismatch");
    }
    if (dim == 1) {
        throw DomainError("haar_fourth_moment_exact: closed form undefined for d = 1");
    }
    const double d = static_cast<double>(dim);
    const Complex t1 = x1.matrix().trace();
    const Complex t3 = x3.matrix().trace();
    const Complex t13 = (x1.matrix() * x3.matrix()).trace();
    const Complex t2 = x2.matrix().trace();
    const double denom = d * (d * d - 1.0);
    const Complex c_identity = (d * t13 - t1 * t3) / denom;
    const Complex c_x2 = (d * t1 * t3 - t13) / denom;
    const auto n = static_cast<Eigen::Index>(dim);
    return c_identity * t2 * ComplexMatrix::Identity(n, n) + c_x2 * x2.matrix();
}

double gue_level_density(double v, std::size_t d) {
    if (d == 0) throw DomainError("gue_level_density: d must be >= 1");
    const double rho = hermite_phi_square_sum(static_cast<int>(d), v);
    if (!std::isfinite(rho)) throw NumericalFailure("gue_level_density: overflow");
    return rho;
}

GueTraceMoments gue_trace_moments(std::size_t d, std::size_t n_samples,
                                  std::uint64_t seed) {
    struct Acc {
        RunningStats tr_sq, tr_of_sq;
    };
    auto blocks = blocked_reduce<Acc>(
        n_samples, kDefaultBlockSize, [] { return Acc{}; },
        [&](Acc& acc, std::size_t i) {
            RngStream rng(seed, i);
            const auto v = sample_gue(GueSpec{d}, rng);
            const double tr = v.matrix().trace().real();
            acc.tr_sq.push(tr * tr);
            acc.tr_of_sq.push(v.matrix().squaredNorm());
        });
    Acc total;
    for (const auto& b : blocks) {
        total.tr_sq.merge(b.tr_sq);
        total.tr_of_sq.merge(b.tr_of_sq);
    }
    return {to_estimate(total.tr_sq, seed), to_estimate(total.tr_of_sq, seed)};
}

std::vector<double> pooled_gue_eigenvalues(std::size_t d, std::size_t n_samples,
                                           std::uint64_t seed) {
    std::vector<double> out(d * n_samples);
    parallel_for_blocks(n_samples, [&](std::size_t i) {
        RngStream rng(seed, i);
        const auto v = sample_gue(GueSpec{d}, rng);
        const auto& e = v.spectral().eigenvalues;
        for (std::size_t k = 0; k < d; ++k) out[i * d + k] = e(static_cast<Eigen::Index>(k));
    });
    return out;
}

}  // namespace dephase
