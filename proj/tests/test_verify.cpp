#include <catch2/catch_amalgamated.hpp>

#include "hypermin/verify.hpp"

using namespace hypermin;

TEST_CASE("all check families pass on a healthy build") {
    for (const auto& result : verify::run_all()) {
        INFO(result.family << (result.samples.empty() ? "" : ": " + result.samples.front()));
        CHECK(result.checks > 0);
        CHECK(result.violations == 0);
    }
}

TEST_CASE("a corrupted bound constant is detected and named") {
    // Mutation smoke test: shrinking the upper prefactor must trip the
    // tail-sandwich family, and the offender string names the operation.
    const auto broken_upper = verify::check_chernoff(1.0, 0.25);
    CHECK(broken_upper.violations > 0);
    REQUIRE_FALSE(broken_upper.samples.empty());
    CHECK(broken_upper.samples.front().find("chernoff") != std::string::npos);

    const auto broken_lower = verify::check_chernoff(4.0, 1.0);
    CHECK(broken_lower.violations > 0);

    const auto healthy = verify::check_chernoff();
    CHECK(healthy.violations == 0);
}
