// experiments.cpp

#include "dephase/experiments.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "dephase/csv.hpp"
#include "dephase/errors.hpp"
#include "dephase/specfun.hpp"
#include "dephase/tfd.hpp"

namespace dephase {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void require(bool ok, const char* what) {
    if (!ok) throw ContractViolation(what);
}

const char* mode_name(KBodyBoundMode m) {
    return m == KBodyBoundMode::approx ? "paper" : "exact-binomial";
}

std::string join(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += format_double(v[i]);
    }
    return s;
}

}  // namespace

void cmd_rate_gue(const RateGueConfig& cfg, std::ostream& os) {
    require(!cfg.dims.empty(), "rate-gue: empty dimension list");
    for (auto d : cfg.dims) require(d >= 1 && d <= 1024, "rate-gue: need 1 <= d <= 1024");
    require(cfg.gamma > 0.0 && std::isfinite(cfg.gamma), "rate-gue: gamma must be positive");
    require(cfg.n_samples >= 2, "rate-gue: need at least 2 samples");

    CsvTable t({"d", "gamma", "rate_paper", "rate_wick", "rate_mc_mean", "rate_mc_stderr",
                "n_samples", "seed"});
    t.add_comment("command: rate-gue");
    t.add_comment("initial_state: basis |1>");
    for (auto d : cfg.dims) {
        const auto rho0 = DensityState::basis(d, 0);
        const auto est = rate_gue_mc(rho0, cfg.gamma, cfg.n_samples, cfg.seed);
        t.add_row({static_cast<std::uint64_t>(d), cfg.gamma, rate_gue_paper(d, cfg.gamma),
                   rate_gue_wick(d, cfg.gamma), est.mean, est.std_error,
                   static_cast<std::uint64_t>(cfg.n_samples), cfg.seed});
    }
    os << kSchemaLine << '\n';
    t.write(os);
}

void cmd_fig1(const Fig1Config& cfg, std::ostream& os) {
    require(!cfg.ks.empty(), "fig1: empty k list");
    require(cfg.n0 >= 1 && cfg.n0 <= kCrossoverScanLimit, "fig1: need 1 <= n0 <= 64");
    require(cfg.n_max >= 1 && cfg.n_max <= kCrossoverScanLimit, "fig1: need 1 <= n-max <= 64");
    require(cfg.gamma > 0.0 && std::isfinite(cfg.gamma), "fig1: gamma must be positive");
    for (int k : cfg.ks) require(k >= 1 && k <= cfg.n_max, "fig1: need 1 <= k <= n-max");

    const double eps2 = calibrate_epsilon_sq(cfg.n0, 1, cfg.gamma, cfg.mode);
    const double eps = std::sqrt(eps2);

    std::vector<std::string> cols{"n", "D_gue", "D_gue_wick"};
    for (int k : cfg.ks) cols.push_back("D_kbody_k" + std::to_string(k));
    CsvTable main(cols);
    main.add_comment("command: fig1");
    main.add_comment("mode: " + std::string(mode_name(cfg.mode)));
    main.add_comment("n0: " + std::to_string(cfg.n0));
    main.add_comment("epsilon_sq: " + format_double(eps2));
    main.add_comment("gamma: " + format_double(cfg.gamma));
    main.add_comment("seed: " + std::to_string(cfg.seed));
    for (int n = 1; n <= cfg.n_max; ++n) {
        const double d = std::ldexp(1.0, n);
        const double gue = cfg.gamma * d * d / (d + 1.0);
        std::vector<CsvCell> row{static_cast<std::int64_t>(n), gue, cfg.gamma * (d - 1.0)};
        for (int k : cfg.ks) {
            row.emplace_back(n >= k ? rate_kbody_bound({n, k, eps}, cfg.gamma, cfg.mode) : kNan);
        }
        main.add_row(std::move(row));
    }

    CsvTable inset({"k", "n_min"});
    for (int k : cfg.ks) {
        const auto n_min = crossover_min_n(k, eps2, cfg.mode);
        inset.add_row({static_cast<std::int64_t>(k),
                       n_min ? CsvCell{static_cast<std::int64_t>(*n_min)}
                             : CsvCell{std::string("none")}});
    }
    os << kSchemaLine << '\n';
    main.write(os);
    os << "# inset\n";
    inset.write(os);
}

std::vector<double> default_gamma_t_grid() {
    std::vector<double> g{0.0};
    for (int i = 0; i <= 70; ++i) g.push_back(std::pow(10.0, -3.0 + 0.1 * i));
    return g;
}

void cmd_tfd(const TfdConfig& cfg, std::ostream& os) {
    require(cfg.n_qubits >= 1, "tfd: n must be >= 1");
    require(cfg.formula_only ? cfg.n_qubits <= 60 : cfg.n_qubits <= 10,
            "tfd: n must be <= 10 when sampling (<= 60 with --formula-only)");
    require(!cfg.betas.empty(), "tfd: empty beta list");
    for (double b : cfg.betas) require(b >= 0.0 && std::isfinite(b), "tfd: beta must be >= 0");
    require(cfg.gamma > 0.0 && std::isfinite(cfg.gamma), "tfd: gamma must be positive");
    const auto grid = cfg.gamma_t.empty() ? default_gamma_t_grid() : cfg.gamma_t;
    for (double g : grid) require(g >= 0.0 && std::isfinite(g), "tfd: gamma_t must be >= 0");
    if (!cfg.formula_only) require(cfg.n_samples >= 2, "tfd: need at least 2 samples");

    const double d = std::ldexp(1.0, cfg.n_qubits);
    const bool exact_ok = d <= kExactFormulaMaxDim;

    CsvTable t({"beta", "gamma_t", "purity_mean", "purity_stderr", "purity_inf", "rate_exact_E4",
                "rate_semicircle_F3", "rate_highT", "rate_lowT"});
    t.add_comment("command: tfd");
    t.add_comment("n_qubits: " + std::to_string(cfg.n_qubits));
    t.add_comment("gamma: " + format_double(cfg.gamma));
    t.add_comment("betas: " + join(cfg.betas));
    t.add_comment(cfg.formula_only ? std::string("mode: formula-only")
                                   : "samples: " + std::to_string(cfg.n_samples) +
                                         ", seed: " + std::to_string(cfg.seed));
    t.add_comment("beta_c: " + format_double(tfd_crossover_beta(d)));

    auto rates = [&](double beta) {
        const double exact =
            exact_ok ? rate_tfd_gue_exact(beta, static_cast<std::size_t>(d), cfg.gamma) : kNan;
        const double semi = rate_tfd_gue_semicircle(beta, d, cfg.gamma);
        const double high = 2.0 * cfg.gamma * d;
        const double low = beta > 0.0 ? 6.0 * cfg.gamma / (beta * beta)
                                      : std::numeric_limits<double>::infinity();
        return std::array<double, 4>{exact, semi, high, low};
    };

    if (cfg.formula_only) {
        for (double beta : cfg.betas) {
            double log_ratio;
            if (exact_ok) {
                const auto dd = static_cast<std::size_t>(d);
                log_ratio = z_gue_exact(2.0 * beta, dd).log_value -
                            2.0 * z_gue_exact(beta, dd).log_value;
            } else {
                log_ratio = z_gue_semicircle(2.0 * beta, d).log_value -
                            2.0 * z_gue_semicircle(beta, d).log_value;
            }
            const auto r = rates(beta);
            t.add_row({beta, kNan, kNan, kNan, std::exp(log_ratio), r[0], r[1], r[2], r[3]});
        }
    } else {
        std::vector<double> times;
        for (double g : grid) times.push_back(g / cfg.gamma);
        times.push_back(std::numeric_limits<double>::infinity());
        const auto curves =
            ensemble_purity_tfd(cfg.n_qubits, cfg.betas, cfg.gamma, times, cfg.n_samples, cfg.seed);
        for (std::size_t b = 0; b < cfg.betas.size(); ++b) {
            const auto r = rates(cfg.betas[b]);
            const double p_inf = curves[b].back().mean;
            for (std::size_t j = 0; j < grid.size(); ++j) {
                t.add_row({cfg.betas[b], grid[j], curves[b][j].mean, curves[b][j].std_error, p_inf,
                           r[0], r[1], r[2], r[3]});
            }
        }
    }
    os << kSchemaLine << '\n';
    t.write(os);
}

}  // namespace dephase
