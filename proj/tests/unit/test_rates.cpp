#include <doctest.h>

#include <cmath>
#include <vector>

#include "dephase/ensembles.hpp"
#include "dephase/errors.hpp"
#include "dephase/rates.hpp"

using namespace dephase;

namespace {

ComplexVector plus_state(std::size_t d) {
    return ComplexVector::Constant(d, Complex(1.0 / std::sqrt(double(d)), 0.0));
}

// 2 sum gamma [tr(rho^2 V^2) - tr(rho V rho V)] / tr rho^2 by plain matrix products
double rate_oracle(const ComplexMatrix& rho, const std::vector<LindbladChannel>& ch) {
    double s = 0.0;
    for (const auto& c : ch) {
        const ComplexMatrix& v = c.v.matrix();
        s += 2 * c.gamma * (rho * rho * v * v - rho * v * rho * v).trace().real();
    }
    return s / (rho * rho).trace().real();
}

}  // namespace

TEST_SUITE("rates") {
TEST_CASE("decoherence rate examples") {
    const HermitianOperator sz(pauli('z'));
    std::vector<LindbladChannel> ch{{0.7, sz}};
    CHECK(decoherence_rate(DensityState::pure(plus_state(2)), ch) == doctest::Approx(1.4));
    CHECK(decoherence_rate(DensityState::basis(2, 1), ch) == doctest::Approx(0.0));
    CHECK(decoherence_rate(DensityState::maximally_mixed(2), ch) == doctest::Approx(0.0));
    CHECK(decoherence_rate(DensityState::pure(plus_state(2)), {}) == 0.0);
}

TEST_CASE("rate matches the trace oracle and scales correctly") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        RngStream r(31, s);
        const std::size_t d = 2 + s % 5;
        ComplexMatrix g(d, d);
        for (Eigen::Index j = 0; j < g.cols(); ++j)
            for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, j) = Complex(r.normal(), r.normal());
        ComplexMatrix rho = g * g.adjoint();
        rho /= rho.trace().real();
        rho = 0.5 * (rho + rho.adjoint());
        std::vector<LindbladChannel> ch{{0.3, sample_gue({d}, r)}, {1.1, sample_gue({d}, r)}};
        const auto st = DensityState::mixed(rho);
        const double got = decoherence_rate(st, ch);
        CHECK(got == doctest::Approx(rate_oracle(rho, ch)).epsilon(1e-10));
        // variance-norm bound for each channel
        double bound = 0.0;
        for (const auto& c : ch) bound += 2 * c.gamma * std::pow(spectral_norm(c.v), 2);
        CHECK(got <= bound * (1 + 1e-12));
        std::vector<LindbladChannel> scaled{{0.6, ch[0].v},
                                            {1.1, HermitianOperator(ComplexMatrix(3.0 * ch[1].v.matrix()))}};
        const double expect = 2.0 * decoherence_rate(st, std::span(ch).first(1)) +
                              9.0 * decoherence_rate(st, std::span(ch).last(1));
        CHECK(decoherence_rate(st, scaled) == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("GUE rate formulas") {
    CHECK(rate_gue_paper(2, 1.0) == doctest::Approx(4.0 / 3.0));
    CHECK(rate_gue_paper(1, 3.0) == doctest::Approx(1.5));
    CHECK(rate_gue_paper(1u << 20, 1.0) / std::ldexp(1.0, 20) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(rate_gue_wick(8, 2.0) == doctest::Approx(14.0));
    CHECK(rate_gue_wick(8, 2.0, 1.0 / 8.0) == doctest::Approx(0.0));
    const auto mixed = rate_gue_mc(DensityState::maximally_mixed(4), 1.0, 200, 7);
    CHECK(std::abs(mixed.mean) < 1e-12);
    const auto pure = rate_gue_mc(DensityState::basis(3, 0), 1.0, 20000, 8);
    CHECK(std::abs(pure.mean - 2.0) < 3.5 * pure.std_error);
}

TEST_CASE("k-body operators by enumeration") {
    const auto zz = build_kbody_diagonal({2, 2, 1.0});
    CHECK(zz(0) == 1.0);
    CHECK(zz(1) == -1.0);
    CHECK(zz(2) == -1.0);
    CHECK(zz(3) == 1.0);
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto diag = build_kbody_diagonal({n, k, 0.5});
            for (unsigned b = 0; b < (1u << n); ++b) {
                // sum over k-subsets of the product of spins
                double e = 0.0;
                for (unsigned mask = 0; mask < (1u << n); ++mask) {
                    if (__builtin_popcount(mask) != k) continue;
                    e += (__builtin_popcount(mask & b) % 2) ? -1.0 : 1.0;
                }
                CHECK(diag(b) == doctest::Approx(0.5 * e));
            }
        }
    CHECK(build_kbody_diagonal({4, 2, 1.0})(0) == 6.0);
    CHECK_THROWS_AS(build_kbody_diagonal({2, 3, 1.0}), DomainError);
    const auto zz3 = build_kbody_operator({3, 2, 1.0});
    CHECK(spectral_norm(zz3) == doctest::Approx(3.0));
}

TEST_CASE("k-body bounds, calibration and crossover") {
    CHECK(rate_kbody_bound({4, 2, 1.0}, 1.0, KBodyBoundMode::approx) == doctest::Approx(128.0));
    CHECK(rate_kbody_bound({4, 2, 1.0}, 1.0, KBodyBoundMode::exact_binomial) == doctest::Approx(72.0));
    CHECK(binomial(10, 3) == 120.0);
    CHECK(calibrate_epsilon_sq(1, 1, 1.0) == doctest::Approx(2.0 / 3.0));
    CHECK(calibrate_epsilon_sq(2, 2, 1.0, KBodyBoundMode::exact_binomial) == doctest::Approx(1.6));
    // pure-state rate of the k-body operator never exceeds the bound
    const KBodySpec spec{5, 2, 1.0};
    const auto diag = build_kbody_diagonal(spec);
    const double r = pure_state_rate_diagonal(plus_state(32), diag, 1.0);
    CHECK(r <= rate_kbody_bound(spec, 1.0, KBodyBoundMode::exact_binomial));
    // |+>^n: every k-subset product is independent +-1 with mean 0 -> var = C(n,k) eps^2
    CHECK(r == doctest::Approx(2.0 * binomial(5, 2)));
    const int approx[] = {6, 14, 23, 31, 40};
    const int exact[] = {6, 13, 22, 30, 39};
    for (int k = 1; k <= 5; ++k) {
        CHECK(crossover_min_n(k, 2.0 / 3.0, KBodyBoundMode::approx).value() == approx[k - 1]);
        CHECK(crossover_min_n(k, 2.0 / 3.0, KBodyBoundMode::exact_binomial).value() == exact[k - 1]);
    }
    CHECK_FALSE(crossover_min_n(30, 2.0 / 3.0, KBodyBoundMode::approx).has_value());
}

TEST_CASE("LMG rate by brute-force enumeration") {
    for (int n = 2; n <= 10; ++n)
        for (double eps : {1.0, 0.3})
            for (double beta : {0.0, 0.2}) {
                std::vector<double> e;
                for (unsigned b = 0; b < (1u << n); ++b) {
                    double m = 0.0;
                    for (int l = 0; l < n; ++l) m += ((b >> l) & 1u) ? -1.0 : 1.0;
                    e.push_back(eps * (m * m - n) / 2.0);
                }
                double z = 0, m1 = 0, m2 = 0;
                for (double x : e) {
                    const double w = std::exp(-beta * x);
                    z += w, m1 += w * x, m2 += w * x * x;
                }
                const double var = m2 / z - (m1 / z) * (m1 / z);
                CHECK(rate_lmg(n, eps, beta, 1.3) == doctest::Approx(4 * 1.3 * var).epsilon(1e-11));
                if (beta == 0.0)
                    CHECK(rate_lmg(n, eps, 0.0, 1.0) == doctest::Approx(2 * eps * eps * n * (n - 1)));
            }
    CHECK(rate_lmg(6, 1.0, 200.0, 1.0) < 1e-60);
}

TEST_CASE("two-body random ensemble") {
    // (sx+sy+sz) has norm sqrt(3) on each site
    CHECK(spectral_norm(tbre_noise_operator(2)) == doctest::Approx(3.0).epsilon(1e-12));
    RngStream r(41, 0);
    for (int n : {2, 3}) {
        const auto v = tbre_noise_operator(n);
        const double nv = spectral_norm(v);
        for (int i = 0; i < 10; ++i) {
            const std::size_t d = std::size_t{1} << n;
            ComplexVector psi(d);
            for (auto& c : psi) c = Complex(r.normal(), r.normal());
            psi.normalize();
            const auto [rate, bound] = tbre_rate_and_bound({n}, DensityState::pure(psi), 1.0);
            CHECK(bound == doctest::Approx(162.0 * (n - 1) * (n - 1)));
            CHECK(rate <= 2 * nv * nv + 1e-9);
            CHECK(rate <= bound);
        }
    }
    CHECK(tbre_rate_and_bound({2}, DensityState::maximally_mixed(4), 1.0).first ==
          doctest::Approx(0.0).scale(1.0));
    const auto h = tbre_hamiltonian({3}, r);
    CHECK(h.dim() == 8);
}

TEST_CASE("Pauli embedding") {
    const ComplexMatrix z1 = embed_site_operator(pauli('z'), 1, 2);
    CHECK((z1 * z1 - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs(z1.trace()) < 1e-15);
    const ComplexMatrix xy = pauli('x') * pauli('y');
    CHECK(std::abs(xy(0, 0) - Complex(0, 1)) < 1e-15);
}
}
