#include <doctest.h>

#include "dephase/ensembles.hpp"
#include "dephase/errors.hpp"
#include "dephase/hermitian.hpp"
#include "dephase/rates.hpp"

using namespace dephase;

namespace {

ComplexMatrix sigma_z() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

ComplexMatrix random_density(std::size_t d, RngStream& rng) {
    ComplexMatrix g(d, d);
    for (Eigen::Index j = 0; j < g.cols(); ++j)
        for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, j) = Complex(rng.normal(), rng.normal());
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

}  // namespace

TEST_SUITE("hermitian") {
TEST_CASE("known spectra") {
    const auto id = eig_hermitian(HermitianOperator::identity(3));
    CHECK(id.eigenvalues.isApprox(RealVector::Ones(3)));
    const auto z = eig_hermitian(HermitianOperator(sigma_z()));
    CHECK(z.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(z.eigenvalues(1) == doctest::Approx(1.0));
}

TEST_CASE("eigen residual and reconstruction on GUE samples") {
    for (std::size_t d : {1u, 2u, 8u, 33u}) {
        RngStream rng(11, d);
        const auto h = sample_gue({d}, rng);
        const auto& s = h.spectral();
        const double norm = spectral_norm(h);
        for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(d); ++k) {
            const double res =
                (h.matrix() * s.eigenvectors.col(k) - s.eigenvalues(k) * s.eigenvectors.col(k)).norm();
            CHECK(res <= 1e-10 * d * norm);
            if (k > 0) CHECK(s.eigenvalues(k) >= s.eigenvalues(k - 1));
        }
        const ComplexMatrix u = s.eigenvectors;
        CHECK((u.adjoint() * u - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-10);
        const ComplexMatrix rebuilt = u * s.eigenvalues.cast<Complex>().asDiagonal() * u.adjoint();
        CHECK((rebuilt - h.matrix()).cwiseAbs().maxCoeff() <= 1e-9 * norm);
    }
}

TEST_CASE("non-Hermitian input is rejected") {
    ComplexMatrix m = sigma_z();
    m(0, 1) = 0.5;
    CHECK_THROWS_AS(HermitianOperator{m}, ContractViolation);
}

TEST_CASE("purity") {
    ComplexVector psi(3);
    psi << Complex(0.6, 0), Complex(0, 0.8), 0.0;
    CHECK(purity(DensityState::pure(psi)) == doctest::Approx(1.0));
    CHECK(purity(DensityState::maximally_mixed(5)) == doctest::Approx(0.2));
    // thermal state of spectrum {0, 1, 3}: Z(2b)/Z(b)^2
    const double b = 0.7;
    const RealVector e = (RealVector(3) << 0.0, 1.0, 3.0).finished();
    const RealVector w = (-b * e).array().exp();
    const double z1 = w.sum(), z2 = (-2 * b * e).array().exp().sum();
    const ComplexMatrix rho = (w / z1).cast<Complex>().asDiagonal();
    CHECK(purity(DensityState::mixed(rho)) == doctest::Approx(z2 / (z1 * z1)).epsilon(1e-14));
}

TEST_CASE("modified covariance against elementwise traces") {
    RngStream rng(5, 0);
    const std::size_t d = 4;
    const ComplexMatrix rho = random_density(d, rng);
    const auto x = sample_gue({d}, rng), y = sample_gue({d}, rng);
    // explicit index sums
    Complex a = 0.0, b = 0.0;
    const auto& X = x.matrix();
    const auto& Y = y.matrix();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                for (std::size_t l = 0; l < d; ++l) {
                    a += rho(i, j) * rho(j, k) * X(k, l) * Y(l, i);
                    b += rho(i, j) * X(j, k) * rho(k, l) * Y(l, i);
                }
            }
    const Complex got = modified_covariance(DensityState::mixed(rho), x, y);
    CHECK(std::abs(got - (a - b)) <= 1e-12);
}

TEST_CASE("pure-state covariance is the variance") {
    RngStream rng(6, 0);
    ComplexVector psi(5);
    for (auto& c : psi) c = Complex(rng.normal(), rng.normal());
    psi.normalize();
    const auto x = sample_gue({5}, rng);
    const auto st = DensityState::pure(psi);
    const double ex = psi.dot(x.matrix() * psi).real();
    const double ex2 = (x.matrix() * psi).squaredNorm();
    CHECK(variance(st, x) == doctest::Approx(ex2 - ex * ex).epsilon(1e-12));
    const auto mixed = DensityState::mixed(psi * psi.adjoint());
    CHECK(modified_covariance(mixed, x, x).real() == doctest::Approx(ex2 - ex * ex).epsilon(1e-10));
    CHECK(modified_covariance(DensityState::maximally_mixed(2), HermitianOperator(sigma_z()),
                              HermitianOperator(sigma_z()))
              .real() == doctest::Approx(0.0));
}

TEST_CASE("variance bounded by squared norm; covariance nonnegative") {
    for (std::size_t i = 0; i < 200; ++i) {
        RngStream rng(7, i);
        const std::size_t d = 2 + i % 7;
        const ComplexMatrix rho = random_density(d, rng);
        const auto x = sample_gue({d}, rng);
        const auto st = DensityState::mixed(rho);
        const double n = spectral_norm(x);
        CHECK(variance(st, x) <= n * n + 1e-12);
        CHECK(modified_covariance(st, x, x).real() >= -1e-10);
    }
}

TEST_CASE("spectral norm of the two-body sigma^z sum") {
    const auto v = build_kbody_operator({3, 2, 1.0});
    CHECK(spectral_norm(v) == doctest::Approx(3.0));
    CHECK(spectral_norm(HermitianOperator::identity(4)) == doctest::Approx(1.0));
}

TEST_CASE("state validation") {
    ComplexVector psi = ComplexVector::Ones(2);
    CHECK_THROWS_AS(DensityState::pure(psi), ContractViolation);
    ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
    bad(0, 0) = 1.5;
    bad(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityState::mixed(bad), ContractViolation);
}
}
