// validation.hpp: the acceptance suite, one check per published claim.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dephase/experiments.hpp"

namespace dephase {

struct ValidationOptions {
    std::uint64_t seed = kDefaultSeed;
    bool quick = false;            // reduced sample counts, whole suite well under a minute
    double tolerance_scale = 1.0;  // multiplies every tolerance; < 1 tightens
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int kCriterionCount = 16;

std::string criterion_name(int id);

// Runs a single criterion (1..16). Exceptions from the library are caught and
// reported as failures.
CriterionResult run_criterion(int id, const ValidationOptions& opts);

// Runs every criterion in order; `progress` (optional) sees each result.
std::vector<CriterionResult> run_validation(
    const ValidationOptions& opts,
    const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace dephase
