#include <doctest.h>

#include <cmath>

#include "dephase/parallel.hpp"
#include "dephase/rng.hpp"

using namespace dephase;

TEST_SUITE("rng") {
TEST_CASE("Philox4x32-10 known-answer vectors") {
    // Random123 kat_vectors
    const auto zero = philox4x32_10({0, 0, 0, 0}, {0, 0});
    CHECK(zero == PhiloxCounter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    const auto ones = philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                    {0xffffffffu, 0xffffffffu});
    CHECK(ones == PhiloxCounter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    const auto pi = philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                                  {0xa4093822u, 0x299f31d0u});
    CHECK(pi == PhiloxCounter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("streams are reproducible and distinct") {
    RngStream a(42, 7), b(42, 7), c(42, 8), e(43, 7);
    bool differs_index = false, differs_seed = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a();
        CHECK(x == b());
        differs_index |= x != c();
        differs_seed |= x != e();
    }
    CHECK(differs_index);
    CHECK(differs_seed);
}

TEST_CASE("uniform and normal moments") {
    RngStream r(1, 0);
    RunningStats u, n, n4;
    for (int i = 0; i < 200000; ++i) {
        const double x = r.uniform();
        CHECK((x > 0.0 && x < 1.0));
        u.push(x);
        const double g = r.normal();
        n.push(g);
        n4.push(g * g * g * g);
    }
    CHECK(std::abs(u.mean - 0.5) < 4 * u.stderr_of_mean());
    CHECK(std::abs(n.mean) < 4 * n.stderr_of_mean());
    CHECK(std::abs(n.sample_variance() - 1.0) < 0.02);
    CHECK(std::abs(n4.mean - 3.0) < 4 * n4.stderr_of_mean());
}
}
