// hermitian.cpp

#include "dephase/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "dephase/errors.hpp"

namespace dephase {

struct HermitianOperator::Cache {
    std::once_flag once;
    SpectralData spectral;
};

namespace {

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void require_square(const ComplexMatrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        std::ostringstream os;
        os << what << ": expected a non-empty square matrix, got " << m.rows()
           << "x" << m.cols();
        throw ContractViolation(os.str());
    }
}

void require_hermitian(const ComplexMatrix& m, const Tolerances& tol,
                       const char* what) {
    require_square(m, what);
    if (!m.allFinite()) {
        throw ContractViolation(std::string(what) + ": non-finite entry");
    }
    const double defect = hermiticity_defect(m);
    if (defect > tol.hermiticity * std::max(1.0, max_abs(m))) {
        std::ostringstream os;
        os << what << ": matrix is not Hermitian (|X - X^H|_max = " << defect
           << ")";
        throw ContractViolation(os.str());
    }
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        std::ostringstream os;
        os << what << ": dimension mismatch (" << a << " vs " << b << ")";
        throw ContractViolation(os.str());
    }
}

}  // namespace

double hermiticity_defect(const ComplexMatrix& m) {
    return max_abs(m - m.adjoint());
}

double trace_real(const ComplexMatrix& m) { return m.trace().real(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

HermitianOperator::HermitianOperator(const ComplexMatrix& m, const Tolerances& tol)
    : cache_(std::make_shared<Cache>()) {
    require_hermitian(m, tol, "HermitianOperator");
    m_ = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::from_real_diagonal(const RealVector& diag) {
    return HermitianOperator(diag.cast<Complex>().asDiagonal().toDenseMatrix());
}

HermitianOperator HermitianOperator::identity(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    return HermitianOperator(ComplexMatrix::Identity(n, n));
}

const SpectralData& HermitianOperator::spectral() const {
    if (!cache_) throw ContractViolation("HermitianOperator: empty operator");
    std::call_once(cache_->once, [this] { cache_->spectral = eig_hermitian(m_); });
    return cache_->spectral;
}

HermitianOperator HermitianOperator::operator*(double s) const {
    return HermitianOperator(ComplexMatrix(m_ * s));
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& other) const {
    require_same_dim(dim(), other.dim(), "HermitianOperator::operator+");
    return HermitianOperator(ComplexMatrix(m_ + other.m_));
}

// ---------------------------------------------------------------------------

DensityState DensityState::pure(const ComplexVector& psi, const Tolerances& tol) {
    if (psi.size() == 0) throw ContractViolation("DensityState: empty vector");
    if (!psi.allFinite()) throw ContractViolation("DensityState: non-finite entry");
    if (std::abs(psi.squaredNorm() - 1.0) > tol.unit_norm) {
        throw ContractViolation("DensityState: pure state is not normalized");
    }
    return DensityState(psi);
}

DensityState DensityState::pure_normalized(ComplexVector psi) {
    const double n = psi.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw ContractViolation("DensityState: cannot normalize a zero vector");
    }
    psi /= n;
    return DensityState(std::move(psi));
}

DensityState DensityState::mixed(const ComplexMatrix& rho, const Tolerances& tol) {
    require_hermitian(rho, tol, "DensityState");
    if (std::abs(trace_real(rho) - 1.0) > tol.trace) {
        throw ContractViolation("DensityState: trace differs from 1");
    }
    ComplexMatrix sym = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw NumericalFailure("DensityState: eigenvalue check failed");
    }
    if (es.eigenvalues().minCoeff() < -tol.positivity) {
        throw ContractViolation("DensityState: matrix is not positive semidefinite");
    }
    return DensityState(std::move(sym));
}

DensityState DensityState::maximally_mixed(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    return DensityState(ComplexMatrix(ComplexMatrix::Identity(n, n) / double(d)));
}

DensityState DensityState::basis(std::size_t d, std::size_t index) {
    if (index >= d) throw ContractViolation("DensityState::basis: index out of range");
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return DensityState(std::move(v));
}

std::size_t DensityState::dim() const noexcept {
    return std::visit([](const auto& r) { return static_cast<std::size_t>(r.rows()); },
                      rep_);
}

const ComplexVector& DensityState::vector() const {
    if (!is_pure()) throw ContractViolation("DensityState: state is not pure");
    return std::get<ComplexVector>(rep_);
}

ComplexMatrix DensityState::matrix() const {
    if (is_pure()) {
        const auto& v = std::get<ComplexVector>(rep_);
        return v * v.adjoint();
    }
    return std::get<ComplexMatrix>(rep_);
}

// ---------------------------------------------------------------------------

SpectralData eig_hermitian(const HermitianOperator& h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix());
    if (es.info() != Eigen::Success) {
        throw NumericalFailure("eig_hermitian: eigensolver did not converge");
    }
    return SpectralData{es.eigenvalues(), es.eigenvectors()};
}

SpectralData eig_hermitian(const ComplexMatrix& h, const Tolerances& tol) {
    require_hermitian(h, tol, "eig_hermitian");
    return eig_hermitian(HermitianOperator(h, tol));
}

double purity(const DensityState& rho) {
    if (rho.is_pure()) return 1.0;
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    return rho.matrix().squaredNorm();
}

Complex modified_covariance(const DensityState& rho, const HermitianOperator& x,
                            const HermitianOperator& y) {
    require_same_dim(rho.dim(), x.dim(), "modified_covariance");
    require_same_dim(rho.dim(), y.dim(), "modified_covariance");
    if (rho.is_pure()) {
        const auto& psi = rho.vector();
        const ComplexVector xpsi = x.matrix() * psi;
        const ComplexVector ypsi = y.matrix() * psi;
        // <XY> - <X><Y>
        return xpsi.dot(ypsi) - psi.dot(xpsi) * psi.dot(ypsi);
    }
    const ComplexMatrix r = rho.matrix();
    const ComplexMatrix rx = r * x.matrix();
    const ComplexMatrix ry = r * y.matrix();
    // tr(A B) = sum_ij A_ij B_ji
    const Complex t1 = (r * rx).cwiseProduct(y.matrix().transpose()).sum();
    const Complex t2 = rx.cwiseProduct(ry.transpose()).sum();
    return t1 - t2;
}

double variance(const DensityState& rho, const HermitianOperator& x) {
    require_same_dim(rho.dim(), x.dim(), "variance");
    if (rho.is_pure()) {
        const auto& psi = rho.vector();
        const ComplexVector xpsi = x.matrix() * psi;
        const double m = psi.dot(xpsi).real();
        return xpsi.squaredNorm() - m * m;
    }
    const ComplexMatrix rx = rho.matrix() * x.matrix();
    const double m = rx.trace().real();
    const double m2 = rx.cwiseProduct(x.matrix().transpose()).sum().real();
    return m2 - m * m;
}

double spectral_norm(const HermitianOperator& x) {
    return x.spectral().eigenvalues.cwiseAbs().maxCoeff();
}

}  // namespace dephase
