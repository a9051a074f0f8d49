#include <doctest.h>

#include <cmath>
#include <vector>

#include "dephase/errors.hpp"
#include "dephase/master_equation.hpp"

using namespace dephase;

namespace {

ComplexVector plus() { return ComplexVector::Constant(2, Complex(1.0 / std::sqrt(2.0), 0.0)); }

}  // namespace

TEST_SUITE("master_equation") {
TEST_CASE("generator against the explicit double commutator") {
    RngStream r(3, 0);
    const std::size_t d = 4;
    auto herm = [&] {
        ComplexMatrix g(d, d);
        for (Eigen::Index j = 0; j < g.cols(); ++j)
            for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, j) = Complex(r.normal(), r.normal());
        return ComplexMatrix(0.5 * (g + g.adjoint()));
    };
    const ComplexMatrix h = herm(), v = herm(), rho = herm();
    const Complex i(0, 1);
    const ComplexMatrix expect =
        -i * (h * rho - rho * h) - 0.6 * (v * (v * rho - rho * v) - (v * rho - rho * v) * v);
    std::vector<LindbladChannel> ch{{1.2, HermitianOperator(v)}};
    const ComplexMatrix got = lindblad_generator(HermitianOperator(h), ch, rho);
    CHECK((got - expect).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(got.trace()) < 1e-12);
}

TEST_CASE("qubit dephasing coherence decays as exp(-2 gamma t)") {
    const double gamma = 0.8;
    std::vector<LindbladChannel> ch{{gamma, HermitianOperator(pauli('z'))}};
    const HermitianOperator h0(ComplexMatrix::Zero(2, 2));
    const double dt = 1e-3;
    const auto path =
        master_equation_rk4(h0, ch, DensityState::pure(plus()), dt, 2000, 100);
    REQUIRE(path.times.size() == 21);
    for (std::size_t j = 0; j < path.times.size(); ++j) {
        const auto& rho = path.states[j];
        CHECK(std::abs(rho(0, 1)) == doctest::Approx(0.5 * std::exp(-2 * gamma * path.times[j])).epsilon(1e-10));
        CHECK(rho(0, 0).real() == doctest::Approx(0.5));
        CHECK(std::abs(rho.trace() - 1.0) < 1e-13);
        CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    }
    CHECK(path.times.back() == doctest::Approx(2.0));
}

TEST_CASE("step-size guard and record schedule") {
    std::vector<LindbladChannel> ch{{1.0, HermitianOperator(pauli('z'))}};
    const HermitianOperator h0(pauli('x'));
    CHECK(generator_scale(h0, ch) == doctest::Approx(2.0));
    CHECK_THROWS_AS(master_equation_rk4(h0, ch, DensityState::pure(plus()), 0.1, 10),
                    ContractViolation);
    const auto p = master_equation_rk4(h0, ch, DensityState::pure(plus()), 0.01, 25, 10);
    REQUIRE(p.times.size() == 4);
    CHECK(p.times[3] == doctest::Approx(0.25));
}

TEST_CASE("maximally mixed state is stationary; pure purity decreases") {
    std::vector<LindbladChannel> ch{{0.5, HermitianOperator(embed_site_operator(pauli('z'), 0, 2))},
                                    {0.3, HermitianOperator(embed_site_operator(pauli('x'), 1, 2))}};
    const HermitianOperator h0(embed_site_operator(pauli('y'), 0, 2));
    const ComplexMatrix m = evolve_master(h0, ch, DensityState::maximally_mixed(4), 1.0);
    CHECK((m - ComplexMatrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() < 1e-13);
    const ComplexMatrix p = evolve_master(h0, ch, DensityState::basis(4, 1), 1.0);
    CHECK((p * p).trace().real() < 1.0);
}
}
