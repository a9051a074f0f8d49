#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "dephase/csv.hpp"
#include "dephase/errors.hpp"
#include "dephase/experiments.hpp"

using namespace dephase;

namespace {

struct Parsed {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

// first table only (stops at a blank line or a second comment block)
Parsed parse(const std::string& text) {
    Parsed p;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) break;
        if (line[0] == '#') {
            if (!p.header.empty()) break;
            p.comments.push_back(line);
        } else if (p.header.empty()) {
            p.header = split(line);
        } else {
            p.rows.push_back(split(line));
        }
    }
    return p;
}

}  // namespace

TEST_SUITE("experiments") {
TEST_CASE("rate-gue table") {
    RateGueConfig cfg;
    cfg.dims = {2, 5};
    cfg.n_samples = 400;
    std::ostringstream os;
    cmd_rate_gue(cfg, os);
    const auto p = parse(os.str());
    REQUIRE(!p.comments.empty());
    CHECK(p.comments[0] == kSchemaLine);
    CHECK(p.header == std::vector<std::string>{"d", "gamma", "rate_paper", "rate_wick",
                                               "rate_mc_mean", "rate_mc_stderr", "n_samples",
                                               "seed"});
    REQUIRE(p.rows.size() == 2);
    CHECK(std::stod(p.rows[1][2]) == doctest::Approx(25.0 / 6.0));
    CHECK(std::stod(p.rows[1][3]) == doctest::Approx(4.0));
    CHECK(p.rows[0][6] == "400");
    std::ostringstream again;
    cmd_rate_gue(cfg, again);
    CHECK(again.str() == os.str());
    cfg.n_samples = 1;
    std::ostringstream bad;
    CHECK_THROWS_AS(cmd_rate_gue(cfg, bad), ContractViolation);
}

TEST_CASE("fig1 table and inset") {
    Fig1Config cfg;
    cfg.n_max = 12;
    std::ostringstream os;
    cmd_fig1(cfg, os);
    const std::string text = os.str();
    const auto p = parse(text);
    REQUIRE(p.rows.size() == 12);
    CHECK(p.header[0] == "n");
    CHECK(p.header.back() == "D_kbody_k5");
    // calibration: equal curves at n0 = 1
    CHECK(std::stod(p.rows[0][1]) == doctest::Approx(std::stod(p.rows[0][3])));
    const auto inset = text.find("# inset");
    REQUIRE(inset != std::string::npos);
    CHECK(text.find("k,n_min", inset) != std::string::npos);
    CHECK(text.find("\n1,6\n", inset) != std::string::npos);
}

TEST_CASE("tfd tables") {
    TfdConfig cfg;
    cfg.n_qubits = 2;
    cfg.betas = {0.0, 1.0};
    cfg.gamma_t = {0.0, 0.5, 1e6};
    cfg.n_samples = 20;
    std::ostringstream os;
    cmd_tfd(cfg, os);
    const auto p = parse(os.str());
    REQUIRE(p.rows.size() == 6);
    CHECK(p.rows[0][2] == "1");
    CHECK(std::stod(p.rows[2][2]) == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(p.rows[0][8] == "inf");

    TfdConfig f;
    f.n_qubits = 50;
    f.betas = {1e-3};
    f.formula_only = true;
    std::ostringstream fs;
    cmd_tfd(f, fs);
    const auto q = parse(fs.str());
    REQUIRE(q.rows.size() == 1);
    CHECK(q.rows[0][1] == "nan");
    CHECK(q.rows[0][5] == "nan");
    CHECK(std::stod(q.rows[0][6]) == doctest::Approx(6e6).epsilon(1e-3));
    CHECK(default_gamma_t_grid().size() == 72);
    f.n_qubits = 11;
    f.formula_only = false;
    std::ostringstream big;
    CHECK_THROWS_AS(cmd_tfd(f, big), ContractViolation);
}
}
