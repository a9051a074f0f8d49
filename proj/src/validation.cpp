// validation.cpp

#include "dephase/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dephase/ensembles.hpp"
#include "dephase/errors.hpp"
#include "dephase/master_equation.hpp"
#include "dephase/rates.hpp"
#include "dephase/specfun.hpp"
#include "dephase/tfd.hpp"
#include "dephase/trajectories.hpp"

namespace dephase {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok) { pass = pass && ok; }
};

// ---------------------------------------------------------------------------

void c1_gue_adjudication(const ValidationOptions& o, Check& c) {
    const std::size_t n = o.quick ? 2000 : 20000;
    const double k = 3.0 * o.tolerance_scale;
    const auto t0 = Clock::now();
    for (std::size_t d : {2u, 4u, 8u, 16u, 32u, 64u}) {
        const auto est = rate_gue_mc(DensityState::basis(d, 0), 1.0, n, mix_seed(o.seed, 1));
        const double paper = rate_gue_paper(d, 1.0);
        const double wick = rate_gue_wick(d, 1.0);
        const bool in_paper = est.within(paper, k);
        const bool in_wick = est.within(wick, k);
        c.require(in_paper != in_wick);
        const char* verdict = in_paper && in_wick ? "both"
                              : in_paper          ? "d^2/(d+1)"
                              : in_wick           ? "d-1"
                                                  : "neither";
        c.detail << "d=" << d << " mean=" << fmt("%.4f", est.mean) << "+-"
                 << fmt("%.4f", est.std_error) << " [" << verdict << "] ";
    }
    const auto tm = gue_trace_moments(8, n, mix_seed(o.seed, 101));
    c.detail << "<(trV)^2>_d=8=" << fmt("%.3f", tm.trace_squared.mean) << "+-"
             << fmt("%.3f", tm.trace_squared.std_error) << " (d/2=4) ";
    const double secs = seconds_since(t0);
    c.require(secs <= 300.0);
    c.detail << fmt("%.1fs", secs);
}

void c2_state_independence(const ValidationOptions& o, Check& c) {
    const std::size_t d = 16, n = o.quick ? 4000 : 20000;
    ComplexVector plus = ComplexVector::Constant(d, Complex(1.0 / std::sqrt(double(d)), 0.0));
    const auto a = rate_gue_mc(DensityState::basis(d, 0), 1.0, n, mix_seed(o.seed, 2));
    const auto b = rate_gue_mc(DensityState::pure(plus), 1.0, n, mix_seed(o.seed, 3));
    const double se = std::hypot(a.std_error, b.std_error);
    const double gap = std::abs(a.mean - b.mean);
    c.require(gap <= 3.0 * o.tolerance_scale * se);
    c.detail << "|1>: " << fmt("%.4f", a.mean) << " |+>: " << fmt("%.4f", b.mean)
             << " gap/se=" << fmt("%.2f", gap / se);
}

void c3_mixed_fixed_point(const ValidationOptions& o, Check& c) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 100; ++i) {
        RngStream rng(mix_seed(o.seed, 4), i);
        const std::size_t d = 2 + rng() % 15;
        const std::size_t nch = 1 + rng() % 3;
        std::vector<LindbladChannel> ch;
        for (std::size_t m = 0; m < nch; ++m) ch.emplace_back(rng.uniform(), sample_gue({d}, rng));
        worst = std::max(worst, std::abs(decoherence_rate(DensityState::maximally_mixed(d), ch)));
    }
    c.require(worst <= 1e-12 * o.tolerance_scale);
    c.detail << "max |D| = " << fmt("%.2e", worst);
}

void c4_fig1(const ValidationOptions& o, Check& c) {
    const auto t0 = Clock::now();
    const double eps2 = calibrate_epsilon_sq(1, 1, 1.0);
    c.require(std::abs(eps2 - 2.0 / 3.0) <= 1e-15 * o.tolerance_scale);
    c.detail << "eps^2=" << fmt("%.15g", eps2) << "; ";

    // The k = 2 curves must actually cross: k-body ahead somewhere, GUE ahead later.
    bool kbody_ahead = false, gue_ahead_after = false;
    for (int n = 2; n <= kCrossoverScanLimit; ++n) {
        const double gue = rate_gue_paper(std::size_t{1} << std::min(n, 62), 1.0);
        const double kb = rate_kbody_bound({n, 2, std::sqrt(eps2)}, 1.0, KBodyBoundMode::approx);
        if (kb > gue) kbody_ahead = true;
        if (kbody_ahead && gue > kb) gue_ahead_after = true;
    }
    c.require(kbody_ahead && gue_ahead_after);

    for (auto mode : {KBodyBoundMode::approx, KBodyBoundMode::exact_binomial}) {
        const char* name = mode == KBodyBoundMode::approx ? "approx" : "exact-binomial";
        const auto k2 = crossover_min_n(2, eps2, mode);
        c.require(k2.has_value() && *k2 >= 10);
        c.detail << name << " n_min(k=1..5)=";
        int prev = 0;
        for (int k = 1; k <= 5; ++k) {
            const auto v = crossover_min_n(k, eps2, mode);
            const int val = v ? *v : kCrossoverScanLimit + 1;  // absent counts as beyond the scan
            c.require(val >= prev);
            prev = val;
            c.detail << (v ? std::to_string(*v) : std::string("none")) << (k < 5 ? "," : "; ");
        }
    }
    const double secs = seconds_since(t0);
    c.require(secs < 1.0);
    c.detail << fmt("%.3fs", secs);
}

void c5_kbody_oracle(const ValidationOptions& o, Check& c) {
    double worst = 0.0;
    bool bounded = true;
    for (int n = 1; n <= 5; ++n) {
        const std::size_t d = std::size_t{1} << n;
        const ComplexVector plus = ComplexVector::Constant(
            static_cast<Eigen::Index>(d), Complex(1.0 / std::sqrt(double(d)), 0.0));
        const auto psi = DensityState::pure(plus);
        for (int k = 1; k <= n; ++k) {
            for (double eps : {1.0, 0.7}) {
                const KBodySpec spec{n, k, eps};
                const LindbladChannel ch(1.0, build_kbody_operator(spec));
                const double rate = decoherence_rate(psi, std::span(&ch, 1));
                const double expect = 2.0 * eps * eps * binomial(n, k);
                worst = std::max(worst, std::abs(rate - expect));
                bounded = bounded &&
                          rate <= rate_kbody_bound(spec, 1.0, KBodyBoundMode::exact_binomial) + 1e-12 &&
                          rate <= rate_kbody_bound(spec, 1.0, KBodyBoundMode::approx) + 1e-12;
            }
        }
    }
    c.require(worst <= 1e-10 * o.tolerance_scale && bounded);
    c.detail << "max |D - 2 eps^2 C(n,k)| = " << fmt("%.2e", worst)
             << (bounded ? ", within both bounds" : ", BOUND VIOLATED");
}

void c6_tfd_master(const ValidationOptions& o, Check& c) {
    RngStream rng(mix_seed(o.seed, 6), 0);
    const auto h = sample_gue({4}, rng);
    const double beta = 0.5, gamma = 1.0;
    const auto sys = build_tfd(eig_hermitian(h), beta, gamma);

    const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
    const HermitianOperator hl(kron(h.matrix(), id)), hr(kron(id, h.matrix()));
    const std::vector<LindbladChannel> ch{{gamma, hl}, {gamma, hr}};
    ComplexVector psi = ComplexVector::Zero(16);
    for (Eigen::Index k = 0; k < 4; ++k) {
        const ComplexVector v = sys.spectral.eigenvectors.col(k);
        psi += sys.weights(k) * kron(v, v);
    }
    const auto rho0 = DensityState::pure_normalized(psi);

    const double t_end = 2.0 / gamma;
    const double scale = generator_scale(hl + hr, ch);
    const std::size_t steps = static_cast<std::size_t>(std::ceil(t_end * scale / 0.01));
    const double dt = t_end / static_cast<double>(steps);
    const auto path = master_equation_rk4(hl + hr, ch, rho0, dt, steps, steps / 20);
    double worst = 0.0;
    for (std::size_t i = 0; i < path.times.size(); ++i) {
        const ComplexMatrix exact = tfd_density_matrix(sys, evolve_tfd(sys, path.times[i]));
        worst = std::max(worst, (path.states[i] - exact).cwiseAbs().maxCoeff());
    }
    c.require(worst <= 1e-6 * o.tolerance_scale);
    c.detail << "max entry deviation over gamma t in [0,2]: " << fmt("%.2e", worst) << " ("
             << steps << " RK4 steps)";
}

void c7_purity_identities(const ValidationOptions& o, Check& c) {
    const double s = o.tolerance_scale;
    RngStream rng(mix_seed(o.seed, 7), 0);
    const std::size_t d = 8;
    const auto spec = eig_hermitian(sample_gue({d}, rng));
    const double betas[] = {0.0, 0.25, 0.5, 1.0, 2.0};
    const double gts[] = {0.01, 0.1, 0.3, 1.0, 3.0};
    double p0_err = 0.0, mono = 0.0, inf_err = 0.0, hs_err = 0.0, plateau_err = 0.0;
    for (double beta : betas) {
        const auto sys = build_tfd(spec, beta, 1.0);
        p0_err = std::max(p0_err, std::abs(evolve_tfd(sys, 0.0).purity() - 1.0));
        double prev = purity_tfd(sys, 0.0);
        for (int i = 0; i <= 200; ++i) {
            const double p = purity_tfd(sys, std::pow(10.0, -4.0 + 0.04 * i));
            mono = std::max(mono, p - prev);
            prev = p;
        }
        inf_err = std::max(inf_err, std::abs(purity_tfd(sys, 1e3) - purity_tfd_limit(sys)));
        if (beta == 0.0) {
            plateau_err = std::max(std::abs(purity_tfd(sys, 1e3) - 1.0 / d),
                                   std::abs(purity_tfd_limit(sys) - 1.0 / d));
        }
        for (double gt : gts) {
            const double ds = purity_tfd(sys, gt);
            const double hs = purity_tfd_hs(sys, gt, recommended_hs_nodes(sys, gt));
            hs_err = std::max(hs_err, std::abs(hs - ds));
        }
    }
    c.require(p0_err <= 1e-12 * s);
    c.require(mono <= 1e-14 * s);
    c.require(inf_err <= 1e-6 * s);
    c.require(plateau_err <= 1e-6 * s);
    c.require(hs_err <= 1e-8 * s);
    c.detail << "|P0-1|=" << fmt("%.1e", p0_err) << " max rise=" << fmt("%.1e", mono)
             << " |P(1e3)-Pinf|=" << fmt("%.1e", inf_err) << " |plateau-1/d|="
             << fmt("%.1e", plateau_err) << " |HS-sum|=" << fmt("%.1e", hs_err);
}

void c8_fig2a(const ValidationOptions& o, Check& c) {
    const auto t0 = Clock::now();
    const std::size_t n = o.quick ? 200 : 1000;
    const std::vector<double> betas{0.0, 0.1, 1.0};
    const auto grid = default_gamma_t_grid();
    const auto curves = ensemble_purity_tfd(5, betas, 1.0, grid, n, mix_seed(o.seed, 8));
    int disorder = 0;
    for (std::size_t j = 1; j < grid.size(); ++j) {
        for (std::size_t b = 0; b + 1 < betas.size(); ++b) {
            if (curves[b][j].mean > curves[b + 1][j].mean + 1e-12) ++disorder;
        }
    }
    c.require(disorder == 0);
    const auto& last = curves[0].back();
    const double gap = std::abs(last.mean - 1.0 / 32.0);
    c.require(gap <= 3.0 * o.tolerance_scale * last.std_error + 1e-15);
    const double secs = seconds_since(t0);
    c.require(secs <= 600.0);
    c.detail << "order violations=" << disorder << "; beta=0 at gamma t=" << grid.back()
             << ": " << fmt("%.8f", last.mean) << "+-" << fmt("%.1e", last.std_error)
             << " (1/32=0.03125); beta=1 there: " << fmt("%.5f", curves[2].back().mean) << "; "
             << fmt("%.1fs", secs);
}

void c9_asymptotics(const ValidationOptions& o, Check& c) {
    const double s = o.tolerance_scale;
    for (int logd : {10, 50}) {
        const double d = std::ldexp(1.0, logd);
        const double bc = tfd_crossover_beta(d);
        const double hi = rate_tfd_gue_semicircle(bc / 100.0, d, 1.0) / (2.0 * d) - 1.0;
        const double b = 100.0 * bc;
        const double lo = rate_tfd_gue_semicircle(b, d, 1.0) * b * b / 6.0 - 1.0;
        c.require(std::abs(hi) <= 1e-3 * s && std::abs(lo) <= 1e-2 * s);
        c.detail << "log2 d=" << logd << ": high-T dev " << fmt("%.2e", hi) << ", low-T dev "
                 << fmt("%.2e", lo) << "; ";
    }
}

void c10_exact_vs_semicircle(const ValidationOptions& o, Check& c) {
    double worst = 0.0, prev = 1e300;
    bool shrinking = true;
    for (std::size_t d = 4; d <= 256; ++d) {
        const double e = rate_tfd_gue_exact(0.01, d, 1.0);
        const double sc = rate_tfd_gue_semicircle(0.01, double(d), 1.0);
        worst = std::max(worst, std::abs(e - sc) / e);
        const double e1 = rate_tfd_gue_exact(1.0, d, 1.0);
        const double g1 = std::abs(e1 - rate_tfd_gue_semicircle(1.0, double(d), 1.0)) / e1;
        shrinking = shrinking && g1 < prev;
        prev = g1;
    }
    c.require(worst <= 1e-2 * o.tolerance_scale && shrinking);
    c.detail << "max rel gap at beta=0.01: " << fmt("%.2e", worst)
             << "; beta=1 gap at d=256: " << fmt("%.2e", prev)
             << (shrinking ? " (monotone)" : " (NOT monotone)");
}

void c11_annealing(const ValidationOptions& o, Check& c) {
    const std::size_t n = o.quick ? 400 : 2000;
    int jensen_bad = 0, runs = 0;
    for (double beta : {0.25, 0.5, 1.0}) {
        for (std::size_t d : {1u, 8u, 40u}) {
            const auto r = annealing_check(beta, d, n, mix_seed(o.seed, 110 + runs));
            ++runs;
            if (r.mean_log_z > r.log_mean_z) ++jensen_bad;
            if (r.mean_log_z > r.log_mean_z_exact + 3.0 * r.std_error_log_z) ++jensen_bad;
        }
    }
    c.require(jensen_bad == 0);
    c.detail << "Jensen violations " << jensen_bad << "/" << runs << "; d=40 rate gaps:";
    for (double beta : {0.25, 0.5, 0.75, 1.0}) {
        const auto r = annealing_rates(beta, 40, 1.0, n, mix_seed(o.seed, 11));
        c.require(r.relative_gap() < 0.02 * o.tolerance_scale);
        c.detail << " b=" << beta << ":" << fmt("%.2f%%", 100.0 * r.relative_gap());
    }
}

void c12_haar(const ValidationOptions& o, Check& c) {
    const std::size_t n = o.quick ? 20000 : 100000;
    RngStream rng(mix_seed(o.seed, 12), 0);
    const auto x1 = sample_gue({3}, rng), x2 = sample_gue({3}, rng), x3 = sample_gue({3}, rng);
    const auto m2 = haar_second_moment(x1, n, mix_seed(o.seed, 121));
    const auto m4 = haar_fourth_moment(x1, x2, x3, n, mix_seed(o.seed, 122));
    const double z2 = m2.max_z_score(haar_second_moment_exact(x1));
    const double z4 = m4.max_z_score(haar_fourth_moment_exact(x1, x2, x3));
    c.require(z2 <= 4.0 * o.tolerance_scale && z4 <= 4.0 * o.tolerance_scale);
    c.detail << "max z: second " << fmt("%.2f", z2) << ", fourth " << fmt("%.2f", z4);
}

void c13_trajectories(const ValidationOptions& o, Check& c) {
    const auto t0 = Clock::now();
    const double gamma = 1.0;
    {
        const std::size_t n = o.quick ? 1000 : 4000;
        const std::vector<LindbladChannel> ch{{gamma, HermitianOperator(pauli('z'))}};
        const auto h0 = HermitianOperator(ComplexMatrix::Zero(2, 2));
        ComplexVector plus(2);
        plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
        TrajectoryConfig cfg{1e-3, 2000, n, mix_seed(o.seed, 13), true, 100};
        const auto avg = average_trajectories(h0, ch, DensityState::pure(plus), cfg);
        double worst = 0.0;
        for (std::size_t i = 0; i < avg.times.size(); ++i) {
            const double exact = std::exp(-2.0 * gamma * avg.times[i]);
            worst = std::max(worst, std::abs(2.0 * std::abs(avg.rho[i](0, 1)) - exact));
        }
        const double tol = 3.0 / std::sqrt(double(n));
        c.require(worst <= tol * o.tolerance_scale);
        c.detail << "sigma^z: max |2|rho01| - e^{-2 gamma t}| = " << fmt("%.2e", worst)
                 << " (3/sqrt N = " << fmt("%.2e", tol) << "); ";
    }
    {
        const std::size_t n = o.quick ? 300 : 1000;
        RngStream rng(mix_seed(o.seed, 131), 0);
        const auto sys = build_tfd(eig_hermitian(sample_gue({4}, rng)), 0.0, gamma);
        const auto setup = tfd_two_noise_config(sys.spectral, 0.0, gamma);
        TrajectoryConfig cfg{1e-4, 10000, n, mix_seed(o.seed, 132), true, 1000};
        const auto avg = average_trajectories(setup.h0, setup.channels, setup.psi0, cfg);
        double worst_z = 0.0;
        bool ok = true;
        for (std::size_t i = 0; i < avg.times.size(); ++i) {
            const double exact = purity_tfd(sys, avg.times[i]);
            const double dev = std::abs(avg.purity[i] - exact);
            ok = ok && dev <= 3.0 * o.tolerance_scale * avg.purity_stderr[i] + 1e-12;
            if (avg.purity_stderr[i] > 0.0) worst_z = std::max(worst_z, dev / avg.purity_stderr[i]);
        }
        c.require(ok);
        c.detail << "TFD two-noise (d=4 per copy, N=" << n << "): max |P-P_exact|/se = "
                 << fmt("%.2f", worst_z) << "; ";
    }
    const double secs = seconds_since(t0);
    c.require(secs <= 120.0);
    c.detail << fmt("%.1fs", secs);
}

void c14_short_time(const ValidationOptions& o, Check& c) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 20; ++i) {
        RngStream rng(mix_seed(o.seed, 14), i);
        const std::size_t d = 2 + rng() % 7;
        const auto h0 = sample_gue({d}, rng) * 0.5;
        const std::size_t nch = 1 + rng() % 3;
        std::vector<LindbladChannel> ch;
        for (std::size_t m = 0; m < nch; ++m) {
            ch.emplace_back(0.2 + rng.uniform(), sample_gue({d}, rng));
        }
        // Channels are random; the initial states are fixed per dimension.
        RealVector diag = RealVector::LinSpaced(static_cast<Eigen::Index>(d), 1.0, double(d));
        diag /= diag.sum();
        const ComplexVector plus = ComplexVector::Constant(
            static_cast<Eigen::Index>(d), Complex(1.0 / std::sqrt(double(d)), 0.0));
        const auto rho0 = i % 2 == 0
                              ? DensityState::pure(plus)
                              : DensityState::mixed(diag.cast<Complex>().asDiagonal().toDenseMatrix());
        const double rate = decoherence_rate(rho0, ch);
        const double delta = 1e-3 / rate;
        const double p0 = purity(rho0);
        const ComplexMatrix rho = evolve_master(h0, ch, rho0, delta);
        const double pd = rho.squaredNorm();
        const double slope = (p0 - pd) / (p0 * delta);
        worst = std::max(worst, std::abs(slope / rate - 1.0));
    }
    c.require(worst <= 0.05 * o.tolerance_scale);
    c.detail << "max relative slope error over 20 configs: " << fmt("%.2e", worst);
}

void c15_lmg_tbre(const ValidationOptions& o, Check& c) {
    double worst_formula = 0.0, worst_brute = 0.0;
    for (int n = 2; n <= 12; ++n) {
        const double sector = rate_lmg(n, 1.0, 0.0, 1.0);
        const double formula = 2.0 * n * (n - 1.0);
        RunningStats e;
        for (std::uint32_t b = 0; b < (1u << n); ++b) {
            double m = 0.0;
            for (int l = 0; l < n; ++l) m += (b >> l) & 1u ? -1.0 : 1.0;
            e.push(0.5 * (m * m - n));
        }
        const double brute = 4.0 * e.m2 / static_cast<double>(e.count);
        worst_formula = std::max(worst_formula, std::abs(sector - formula) / formula);
        worst_brute = std::max(worst_brute, std::abs(sector - brute) / brute);
    }
    c.require(worst_formula <= 1e-10 * o.tolerance_scale && worst_brute <= 1e-10 * o.tolerance_scale);
    double worst_ratio = 0.0;
    for (int n = 2; n <= 6; ++n) {
        const TbreSpec spec{n};
        for (std::size_t i = 0; i < 100; ++i) {
            RngStream rng(mix_seed(o.seed, 150 + n), i);
            const auto h0 = tbre_hamiltonian(spec, rng);
            const ComplexVector ground = h0.spectral().eigenvectors.col(0);
            const auto [rate, bound] =
                tbre_rate_and_bound(spec, DensityState::pure_normalized(ground), 1.0);
            worst_ratio = std::max(worst_ratio, rate / bound);
        }
    }
    c.require(worst_ratio <= 1.0);
    c.detail << "LMG rel err vs 2n(n-1): " << fmt("%.1e", worst_formula) << ", vs enumeration: "
             << fmt("%.1e", worst_brute) << "; TBRE max rate/bound: " << fmt("%.3f", worst_ratio);
}

void c16_determinism(const ValidationOptions& o, Check& c) {
    const unsigned saved = thread_count();
    RateGueConfig cfg;
    cfg.dims = {2, 8, 32};
    cfg.n_samples = o.quick ? 1000 : 4000;
    cfg.seed = o.seed;
    std::ostringstream one, eight;
    set_thread_count(1);
    cmd_rate_gue(cfg, one);
    set_thread_count(8);
    cmd_rate_gue(cfg, eight);
    set_thread_count(saved);
    c.require(one.str() == eight.str());
    c.detail << (one.str() == eight.str() ? "identical" : "DIFFERENT") << " ("
             << one.str().size() << " bytes)";
}

using Runner = void (*)(const ValidationOptions&, Check&);

struct Entry {
    const char* name;
    Runner run;
};

constexpr Entry kEntries[kCriterionCount] = {
    {"GUE rate adjudication", c1_gue_adjudication},
    {"state independence", c2_state_independence},
    {"maximally mixed fixed point", c3_mixed_fixed_point},
    {"k-body crossover", c4_fig1},
    {"k-body exact rate", c5_kbody_oracle},
    {"TFD master equation vs exact", c6_tfd_master},
    {"purity identities", c7_purity_identities},
    {"TFD ensemble purity curves", c8_fig2a},
    {"semicircle rate asymptotics", c9_asymptotics},
    {"finite-d vs semicircle rate", c10_exact_vs_semicircle},
    {"annealing and Jensen", c11_annealing},
    {"Haar moment identities", c12_haar},
    {"trajectories vs master equation", c13_trajectories},
    {"short-time purity slope", c14_short_time},
    {"LMG and TBRE", c15_lmg_tbre},
    {"thread-count determinism", c16_determinism},
};

}  // namespace

std::string criterion_name(int id) {
    if (id < 1 || id > kCriterionCount) throw ContractViolation("criterion id out of range");
    return kEntries[id - 1].name;
}

CriterionResult run_criterion(int id, const ValidationOptions& opts) {
    CriterionResult r;
    r.id = id;
    r.name = criterion_name(id);
    const auto t0 = Clock::now();
    Check c;
    try {
        kEntries[id - 1].run(opts, c);
        r.pass = c.pass;
        r.detail = c.detail.str();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = c.detail.str() + "exception: " + e.what();
    }
    r.seconds = seconds_since(t0);
    return r;
}

std::vector<CriterionResult> run_validation(
    const ValidationOptions& opts, const std::function<void(const CriterionResult&)>& progress) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) {
        out.push_back(run_criterion(id, opts));
        if (progress) progress(out.back());
    }
    return out;
}

}  // namespace dephase
