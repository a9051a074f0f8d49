#include <doctest.h>

#include <cmath>
#include <vector>

#include "dephase/errors.hpp"
#include "dephase/parallel.hpp"
#include "dephase/tfd.hpp"
#include "dephase/trajectories.hpp"

using namespace dephase;

namespace {

DensityState plus() {
    return DensityState::pure(ComplexVector::Constant(2, Complex(1.0 / std::sqrt(2.0), 0.0)));
}

}  // namespace

TEST_SUITE("trajectories") {
TEST_CASE("without noise the path is the unitary evolution") {
    const HermitianOperator h0(pauli('x'));
    TrajectoryConfig cfg{1e-4, 10000, 1, 5, true, 1000};
    RngStream s(5, 0);
    const auto path = sse_trajectory(h0, {}, DensityState::basis(2, 0), cfg, s);
    REQUIRE(path.states.size() == 11);
    const double t = path.times.back();
    CHECK(t == doctest::Approx(1.0));
    // e^{-i t sx}|0> = cos t |0> - i sin t |1>
    CHECK(std::abs(path.states.back()(0) - std::cos(t)) < 1e-3);
    CHECK(std::abs(path.states.back()(1) - Complex(0, -std::sin(t))) < 1e-3);
}

TEST_CASE("sigma^z noise keeps an equator state on the equator") {
    std::vector<LindbladChannel> ch{{1.0, HermitianOperator(pauli('z'))}};
    const HermitianOperator h0(ComplexMatrix::Zero(2, 2));
    TrajectoryConfig cfg{1e-3, 500, 1, 9, true, 50};
    RngStream s(9, 0);
    const auto path = sse_trajectory(h0, ch, plus(), cfg, s);
    for (const auto& psi : path.states) {
        CHECK(std::norm(psi(0)) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
    // raw norm drift per step is O(dt)
    for (double n : path.raw_norms) CHECK(std::abs(n - 1.0) < 0.05);
}

TEST_CASE("average reproduces the dephasing decay and is thread independent") {
    std::vector<LindbladChannel> ch{{1.0, HermitianOperator(pauli('z'))}};
    const HermitianOperator h0(ComplexMatrix::Zero(2, 2));
    TrajectoryConfig cfg{1e-3, 500, 2000, 10, true, 100};
    set_thread_count(1);
    const auto a = average_trajectories(h0, ch, plus(), cfg);
    set_thread_count(4);
    const auto b = average_trajectories(h0, ch, plus(), cfg);
    set_thread_count(1);
    REQUIRE(a.times.size() == 6);
    for (std::size_t j = 0; j < a.times.size(); ++j) {
        CHECK(a.rho[j] == b.rho[j]);
        CHECK(a.purity[j] == b.purity[j]);
        const double expect = 0.5 * std::exp(-2.0 * a.times[j]);
        CHECK(std::abs(a.rho[j](0, 1).real() - expect) <= 4 * a.rho_stderr[j](0, 1) + 1e-12);
        const double p_exact = 0.5 + 2 * expect * expect;
        CHECK(std::abs(a.purity[j] - p_exact) <= 4 * a.purity_stderr[j] + 1e-12);
    }
    CHECK(a.purity[0] == doctest::Approx(1.0));
    TrajectoryConfig one = cfg;
    one.n_trajectories = 1;
    const auto single = average_trajectories(h0, ch, plus(), one);
    CHECK(single.purity.back() == doctest::Approx(1.0));
    CHECK(single.purity_stderr.back() == 0.0);
}

TEST_CASE("configuration checks") {
    std::vector<LindbladChannel> ch{{1.0, HermitianOperator(pauli('z'))}};
    const HermitianOperator h0(pauli('x'));
    CHECK_THROWS_AS(validate_config({0.1, 10, 1, 0, true, 1}, ch), ContractViolation);
    CHECK_THROWS_AS(validate_config({1e-3, 10, 0, 0, true, 1}, ch), ContractViolation);
    CHECK_NOTHROW(validate_config({1e-3, 10, 1, 0, true, 1}, ch));
    CHECK(default_sse_dt(h0, ch) == doctest::Approx(5e-4));
}

TEST_CASE("two-noise thermofield setup") {
    RealVector e(3);
    e << -0.3, 0.1, 0.8;
    const auto sys = build_tfd_from_energies(e, 0.6, 1.0);
    const auto cfg = tfd_two_noise_config(sys.spectral, 0.6, 1.0);
    REQUIRE(cfg.h0.dim() == 9);
    CHECK(cfg.channels.size() == 2);
    CHECK(purity(cfg.psi0) == doctest::Approx(1.0));
    const ComplexMatrix rho0 = tfd_density_matrix(sys, evolve_tfd(sys, 0.0));
    CHECK((cfg.psi0.matrix() - rho0).cwiseAbs().maxCoeff() < 1e-14);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
            CHECK(cfg.h0.matrix()(k * 3 + l, k * 3 + l).real() == doctest::Approx(e(k) + e(l)));
}
}
