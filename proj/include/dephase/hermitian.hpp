// hermitian.hpp: dense complex Hermitian operators, spectral data, density
// states and the state-dependent moments used by every rate formula.

#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <variant>

#include <Eigen/Dense>

namespace dephase {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

struct Tolerances {
    double hermiticity = 1e-12;   // relative to max(1, |X|_max)
    double trace = 1e-10;
    double positivity = 1e-10;
    double unit_norm = 1e-10;
};

inline constexpr Tolerances kDefaultTolerances{};

// Eigenvalues ascending; eigenvectors are the columns of a unitary matrix.
struct SpectralData {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(eigenvalues.size());
    }
};

// Immutable Hermitian matrix. Copies share a lazily computed spectral
// decomposition; the cache is filled at most once even under concurrent use.
class HermitianOperator {
public:
    HermitianOperator() = default;

    // Throws ContractViolation if `m` is not square, has non-finite entries,
    // or deviates from its adjoint beyond the hermiticity tolerance. The
    // stored matrix is the exactly symmetrized (m + m^H)/2.
    explicit HermitianOperator(const ComplexMatrix& m,
                               const Tolerances& tol = kDefaultTolerances);

    static HermitianOperator from_real_diagonal(const RealVector& diag);
    static HermitianOperator identity(std::size_t d);

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(m_.rows());
    }
    [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return m_; }

    // Computed on first use, then shared.
    [[nodiscard]] const SpectralData& spectral() const;

    HermitianOperator operator*(double s) const;
    HermitianOperator operator+(const HermitianOperator& other) const;

private:
    struct Cache;
    ComplexMatrix m_;
    std::shared_ptr<Cache> cache_;
};

// Pure (unit vector) or mixed (PSD, unit trace) state of dimension d.
class DensityState {
public:
    static DensityState pure(const ComplexVector& psi,
                             const Tolerances& tol = kDefaultTolerances);
    static DensityState mixed(const ComplexMatrix& rho,
                              const Tolerances& tol = kDefaultTolerances);
    static DensityState maximally_mixed(std::size_t d);
    static DensityState basis(std::size_t d, std::size_t index);

    // Normalizes `psi` before wrapping it.
    static DensityState pure_normalized(ComplexVector psi);

    [[nodiscard]] std::size_t dim() const noexcept;
    [[nodiscard]] bool is_pure() const noexcept {
        return std::holds_alternative<ComplexVector>(rep_);
    }
    [[nodiscard]] const ComplexVector& vector() const;   // pure only
    [[nodiscard]] ComplexMatrix matrix() const;           // always available

private:
    explicit DensityState(ComplexVector psi) : rep_(std::move(psi)) {}
    explicit DensityState(ComplexMatrix rho) : rep_(std::move(rho)) {}

    std::variant<ComplexVector, ComplexMatrix> rep_;
};

// Eigen-decomposition with ascending eigenvalues. Throws NumericalFailure
// if the solver does not converge.
SpectralData eig_hermitian(const HermitianOperator& h);

// Same for a raw matrix; throws ContractViolation if it is not Hermitian.
SpectralData eig_hermitian(const ComplexMatrix& h,
                           const Tolerances& tol = kDefaultTolerances);

// tr(rho^2).
double purity(const DensityState& rho);

// tr(rho^2 X Y) - tr(rho X rho Y).
Complex modified_covariance(const DensityState& rho, const HermitianOperator& x,
                            const HermitianOperator& y);

// tr(rho X^2) - tr(rho X)^2.
double variance(const DensityState& rho, const HermitianOperator& x);

// Largest |eigenvalue|.
double spectral_norm(const HermitianOperator& x);

double trace_real(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest absolute entry of m - m^H.
double hermiticity_defect(const ComplexMatrix& m);

}  // namespace dephase
