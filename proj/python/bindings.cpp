// Python bindings for the main operations.

#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dephase/ensembles.hpp"
#include "dephase/errors.hpp"
#include "dephase/experiments.hpp"
#include "dephase/parallel.hpp"
#include "dephase/rates.hpp"
#include "dephase/specfun.hpp"
#include "dephase/tfd.hpp"
#include "dephase/validation.hpp"

namespace py = pybind11;
using namespace dephase;

namespace {

py::dict estimate_dict(const EnsembleEstimate& e) {
    py::dict d;
    d["mean"] = e.mean;
    d["std_error"] = e.std_error;
    d["n_samples"] = e.n_samples;
    d["seed"] = e.master_seed;
    return d;
}

// A 1-D array is a pure state, a 2-D array a density matrix.
DensityState to_state(const py::array& a) {
    if (a.ndim() == 1) return DensityState::pure(a.cast<ComplexVector>());
    return DensityState::mixed(a.cast<ComplexMatrix>());
}

KBodyBoundMode to_mode(const std::string& m) {
    if (m == "paper" || m == "approx") return KBodyBoundMode::approx;
    if (m == "exact-binomial") return KBodyBoundMode::exact_binomial;
    throw ContractViolation("mode must be 'paper' or 'exact-binomial'");
}

TfdSystem tfd_from(const std::vector<double>& energies, double beta, double gamma) {
    return build_tfd_from_energies(Eigen::Map<const RealVector>(energies.data(), energies.size()),
                                   beta, gamma);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "dephase-lab core";
    py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericalFailure>(m, "NumericalFailure", PyExc_ArithmeticError);

    m.attr("DEFAULT_SEED") = kDefaultSeed;
    m.def("set_thread_count", &set_thread_count, py::arg("n"));

    m.def(
        "sample_gue",
        [](std::size_t d, std::uint64_t seed, std::uint64_t index) {
            RngStream rng(seed, index);
            return ComplexMatrix(sample_gue({d}, rng).matrix());
        },
        py::arg("d"), py::arg("seed") = kDefaultSeed, py::arg("index") = 0);
    m.def(
        "sample_haar_unitary",
        [](std::size_t d, std::uint64_t seed, std::uint64_t index) {
            RngStream rng(seed, index);
            return sample_haar_unitary(d, rng);
        },
        py::arg("d"), py::arg("seed") = kDefaultSeed, py::arg("index") = 0);
    m.def("gue_level_density", &gue_level_density, py::arg("v"), py::arg("d"));

    m.def(
        "decoherence_rate",
        [](const py::array& state, const std::vector<std::pair<double, ComplexMatrix>>& channels) {
            std::vector<LindbladChannel> ch;
            for (const auto& [g, v] : channels) ch.emplace_back(g, HermitianOperator(v));
            return decoherence_rate(to_state(state), ch);
        },
        py::arg("state"), py::arg("channels"),
        "state: 1-D pure vector or 2-D density matrix; channels: [(gamma, V), ...]");

    m.def("rate_gue_paper", &rate_gue_paper, py::arg("d"), py::arg("total_gamma"));
    m.def("rate_gue_wick", &rate_gue_wick, py::arg("d"), py::arg("total_gamma"),
          py::arg("initial_purity") = 1.0);
    m.def(
        "rate_gue_mc",
        [](std::size_t d, double gamma, std::size_t n, std::uint64_t seed) {
            return estimate_dict(rate_gue_mc(DensityState::basis(d, 0), gamma, n, seed));
        },
        py::arg("d"), py::arg("gamma") = 1.0, py::arg("n_samples") = 20000,
        py::arg("seed") = kDefaultSeed);

    m.def(
        "rate_kbody_bound",
        [](int n, int k, double eps, double gamma, const std::string& mode) {
            return rate_kbody_bound({n, k, eps}, gamma, to_mode(mode));
        },
        py::arg("n"), py::arg("k"), py::arg("epsilon"), py::arg("gamma") = 1.0,
        py::arg("mode") = "paper");
    m.def(
        "calibrate_epsilon_sq",
        [](int n0, int k, double gamma, const std::string& mode) {
            return calibrate_epsilon_sq(n0, k, gamma, to_mode(mode));
        },
        py::arg("n0") = 1, py::arg("k") = 1, py::arg("gamma") = 1.0, py::arg("mode") = "paper");
    m.def(
        "crossover_min_n",
        [](int k, double eps2, const std::string& mode) {
            return crossover_min_n(k, eps2, to_mode(mode));
        },
        py::arg("k"), py::arg("epsilon_sq"), py::arg("mode") = "paper",
        "None when no crossover occurs up to n = 64");
    m.def("rate_lmg", &rate_lmg, py::arg("n"), py::arg("epsilon"), py::arg("beta"),
          py::arg("gamma"));

    m.def(
        "purity_tfd",
        [](const std::vector<double>& e, double beta, double gamma, double t) {
            return purity_tfd(tfd_from(e, beta, gamma), t);
        },
        py::arg("energies"), py::arg("beta"), py::arg("gamma"), py::arg("t"));
    m.def(
        "purity_tfd_hs",
        [](const std::vector<double>& e, double beta, double gamma, double t, std::size_t nodes) {
            const auto sys = tfd_from(e, beta, gamma);
            return purity_tfd_hs(sys, t, nodes ? nodes : recommended_hs_nodes(sys, t));
        },
        py::arg("energies"), py::arg("beta"), py::arg("gamma"), py::arg("t"),
        py::arg("nodes") = 0);
    m.def(
        "rate_tfd",
        [](const std::vector<double>& e, double beta, double gamma) {
            return rate_tfd(tfd_from(e, beta, gamma));
        },
        py::arg("energies"), py::arg("beta"), py::arg("gamma") = 1.0);
    m.def("rate_tfd_gue_exact", &rate_tfd_gue_exact, py::arg("beta"), py::arg("d"),
          py::arg("gamma") = 1.0);
    m.def("rate_tfd_gue_semicircle", &rate_tfd_gue_semicircle, py::arg("beta"), py::arg("d"),
          py::arg("gamma") = 1.0);
    m.def("tfd_crossover_beta", &tfd_crossover_beta, py::arg("d"));
    m.def(
        "z_gue_exact", [](double beta, std::size_t d) { return z_gue_exact(beta, d).log_value; },
        py::arg("beta"), py::arg("d"), "ln <Z(beta)> over GUE(d)");
    m.def(
        "annealing_check",
        [](double beta, std::size_t d, std::size_t n, std::uint64_t seed) {
            const auto r = annealing_check(beta, d, n, seed);
            py::dict out;
            out["mean_log_z"] = r.mean_log_z;
            out["log_mean_z"] = r.log_mean_z;
            out["std_error_log_z"] = r.std_error_log_z;
            out["log_mean_z_exact"] = r.log_mean_z_exact;
            return out;
        },
        py::arg("beta"), py::arg("d"), py::arg("n_samples") = 2000, py::arg("seed") = kDefaultSeed);

    m.def(
        "cmd_rate_gue",
        [](std::vector<std::size_t> dims, double gamma, std::size_t n, std::uint64_t seed) {
            std::ostringstream os;
            cmd_rate_gue({std::move(dims), gamma, n, seed}, os);
            return os.str();
        },
        py::arg("dims") = RateGueConfig{}.dims, py::arg("gamma") = 1.0,
        py::arg("n_samples") = 20000, py::arg("seed") = kDefaultSeed);
    m.def(
        "cmd_fig1",
        [](std::vector<int> ks, int n_max, int n0, const std::string& mode) {
            std::ostringstream os;
            Fig1Config cfg;
            cfg.ks = std::move(ks);
            cfg.n_max = n_max;
            cfg.n0 = n0;
            cfg.mode = to_mode(mode);
            cmd_fig1(cfg, os);
            return os.str();
        },
        py::arg("ks") = Fig1Config{}.ks, py::arg("n_max") = 40, py::arg("n0") = 1,
        py::arg("mode") = "paper");
    m.def(
        "cmd_tfd",
        [](int n, std::vector<double> betas, double gamma, std::vector<double> gamma_t,
           std::size_t samples, std::uint64_t seed, bool formula_only) {
            std::ostringstream os;
            TfdConfig cfg{n, std::move(betas), gamma, std::move(gamma_t), samples, seed,
                          formula_only};
            cmd_tfd(cfg, os);
            return os.str();
        },
        py::arg("n_qubits") = 5, py::arg("betas") = TfdConfig{}.betas, py::arg("gamma") = 1.0,
        py::arg("gamma_t") = std::vector<double>{}, py::arg("n_samples") = 1000,
        py::arg("seed") = kDefaultSeed, py::arg("formula_only") = false);

    m.def(
        "run_criterion",
        [](int id, bool quick, std::uint64_t seed) {
            ValidationOptions o;
            o.quick = quick;
            o.seed = seed;
            const auto r = run_criterion(id, o);
            py::dict out;
            out["id"] = r.id;
            out["name"] = r.name;
            out["pass"] = r.pass;
            out["detail"] = r.detail;
            return out;
        },
        py::arg("id"), py::arg("quick") = true, py::arg("seed") = kDefaultSeed);
}
