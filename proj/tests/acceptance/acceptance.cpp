// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [--quick] [--seed N] [--threads N]

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "dephase/parallel.hpp"
#include "dephase/validation.hpp"

int main(int argc, char** argv) {
    dephase::ValidationOptions opts;
    unsigned threads = 4;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            opts.quick = true;
        } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            opts.seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
            threads = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
        } else {
            std::fprintf(stderr, "unknown argument: %s\n", argv[i]);
            return 2;
        }
    }
    dephase::set_thread_count(threads);
    int failed = 0;
    dephase::run_validation(opts, [&](const dephase::CriterionResult& r) {
        std::printf("%s criterion %d (%s) [%.2fs]: %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
        failed += r.pass ? 0 : 1;
    });
    std::printf("%d/%d criteria passed\n", dephase::kCriterionCount - failed,
                dephase::kCriterionCount);
    return failed == 0 ? 0 : 1;
}
