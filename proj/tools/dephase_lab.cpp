// dephase-lab: figure data and the acceptance suite from the command line.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "dephase/errors.hpp"
#include "dephase/experiments.hpp"
#include "dephase/parallel.hpp"
#include "dephase/validation.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Common {
    std::uint64_t seed = dephase::kDefaultSeed;
    unsigned threads = 1;
    std::string output;
};

void add_common(CLI::App* sub, Common& c, bool with_output = true) {
    sub->add_option("--seed", c.seed, "Master seed")->capture_default_str();
    sub->add_option("--threads", c.threads, "Worker threads (results do not depend on it)")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    if (with_output) sub->add_option("-o,--output", c.output, "Output file (default stdout)");
}

template <class Fn>
int emit(const Common& c, Fn&& fn) {
    if (c.output.empty()) {
        fn(std::cout);
        std::cout.flush();
        return 0;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << c.output << " for writing\n";
        return kExitConfig;
    }
    fn(f);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dephase-lab: decoherence rates of dephasing channels"};
    app.require_subcommand(1);

    Common common;

    dephase::RateGueConfig rate_cfg;
    auto* rate = app.add_subcommand("rate-gue", "GUE channel rate: closed forms and Monte Carlo");
    add_common(rate, common);
    rate->add_option("--d", rate_cfg.dims, "Dimensions")->delimiter(',')->capture_default_str();
    rate->add_option("--gamma", rate_cfg.gamma, "Total noise strength")->capture_default_str();
    rate->add_option("--samples", rate_cfg.n_samples, "GUE samples per d")->capture_default_str();

    dephase::Fig1Config fig_cfg;
    std::string mode = "paper";
    auto* fig = app.add_subcommand("fig1", "GUE versus k-body rate bounds and crossover");
    add_common(fig, common);
    fig->add_option("--k", fig_cfg.ks, "Body orders")->delimiter(',')->capture_default_str();
    fig->add_option("--n-max", fig_cfg.n_max, "Largest particle number")->capture_default_str();
    fig->add_option("--n0", fig_cfg.n0, "Calibration point")->capture_default_str();
    fig->add_option("--gamma", fig_cfg.gamma, "Noise strength")->capture_default_str();
    fig->add_option("--mode", mode, "Bound: paper (n^2k/(k!)^2) or exact-binomial")
        ->check(CLI::IsMember({"paper", "exact-binomial"}))
        ->capture_default_str();

    dephase::TfdConfig tfd_cfg;
    auto* tfd = app.add_subcommand("tfd", "Thermofield-double purity decay and rates");
    add_common(tfd, common);
    tfd->add_option("--n", tfd_cfg.n_qubits, "Qubits (d = 2^n)")->capture_default_str();
    tfd->add_option("--beta", tfd_cfg.betas, "Inverse temperatures")->delimiter(',')->capture_default_str();
    tfd->add_option("--gamma", tfd_cfg.gamma, "Noise strength")->capture_default_str();
    tfd->add_option("--gamma-t", tfd_cfg.gamma_t, "gamma*t grid (default: 0 and 1e-3..1e4)")
        ->delimiter(',');
    tfd->add_option("--samples", tfd_cfg.n_samples, "GUE realizations")->capture_default_str();
    tfd->add_flag("--formula-only", tfd_cfg.formula_only, "Closed forms only (no sampling)");

    dephase::ValidationOptions val_opts;
    auto* val = app.add_subcommand("validate", "Run the acceptance suite");
    add_common(val, common, false);
    val->add_flag("--quick", val_opts.quick, "Reduced sample counts");
    val->add_option("--tolerance-scale", val_opts.tolerance_scale, "Multiply every tolerance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    std::vector<int> only;
    val->add_option("--only", only, "Criterion ids to run")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    dephase::set_thread_count(common.threads);
    try {
        if (*rate) {
            rate_cfg.seed = common.seed;
            return emit(common, [&](std::ostream& os) { dephase::cmd_rate_gue(rate_cfg, os); });
        }
        if (*fig) {
            fig_cfg.seed = common.seed;
            fig_cfg.mode = mode == "paper" ? dephase::KBodyBoundMode::approx
                                           : dephase::KBodyBoundMode::exact_binomial;
            return emit(common, [&](std::ostream& os) { dephase::cmd_fig1(fig_cfg, os); });
        }
        if (*tfd) {
            tfd_cfg.seed = common.seed;
            return emit(common, [&](std::ostream& os) { dephase::cmd_tfd(tfd_cfg, os); });
        }
        if (*val) {
            val_opts.seed = common.seed;
            if (only.empty()) {
                for (int i = 1; i <= dephase::kCriterionCount; ++i) only.push_back(i);
            }
            for (int id : only) {
                if (id < 1 || id > dephase::kCriterionCount) {
                    std::cerr << "error: criterion id " << id << " out of range\n";
                    return kExitConfig;
                }
            }
            int failed = 0;
            for (int id : only) {
                const auto r = dephase::run_criterion(id, val_opts);
                std::printf("%-4s %2d  %-32s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                            r.name.c_str(), r.seconds, r.detail.c_str());
                std::fflush(stdout);
                failed += r.pass ? 0 : 1;
            }
            std::printf("%d/%zu criteria passed\n", static_cast<int>(only.size()) - failed,
                        only.size());
            return failed == 0 ? 0 : kExitNumerical;
        }
    } catch (const dephase::ContractViolation& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const dephase::DomainError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const dephase::NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}
