#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hypermin/expectation.hpp"
#include "hypermin/regime.hpp"

using namespace hypermin;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("derived parameters") {
    // n=60, p=1/2, m=2^30: alpha = 1/2, i* = 30.
    const auto d = DerivedParams::from_m(60, 0.5, LogReal::from_log(30 * num::kLn2));
    CHECK_THAT(d.alpha, WithinRel(0.5, 1e-12));
    CHECK_THAT(d.i_star, WithinRel(30.0, 1e-12));

    // m -> alpha -> m round trip within 1e-9 relative.
    for (double p : {0.2, 0.5, 0.8})
        for (double a : {0.1, 0.5, 0.99, 1.3}) {
            const auto da = DerivedParams::from_alpha(40, p, a);
            const auto back = DerivedParams::from_m(40, p, da.m);
            CHECK_THAT(back.alpha, WithinRel(a, 1e-9));
            CHECK_THAT(back.m.log(), WithinAbs(da.m.log(), 1e-9 * std::max(1.0, da.m.log())));
        }

    CHECK_THROWS_AS(DerivedParams::from_m(10, 0.0, LogReal::one()), std::domain_error);
    CHECK_THROWS_AS(DerivedParams::from_m(10, 0.5, LogReal::from_double(0.5)),
                    std::domain_error);
}

TEST_CASE("regime classification") {
    const RegimeMargins margins{0.05, 0.05};

    // alpha = 0.25 <= 1-p: linear with magnitude m.
    const auto lin = regime_classify(DerivedParams::from_m(40, 0.5, LogReal::from_log(10 * num::kLn2)),
                                     margins);
    CHECK(lin.regime == Regime::linear);
    REQUIRE(lin.magnitude.has_value());
    CHECK_THAT(lin.magnitude->log(), WithinRel(10 * num::kLn2, 1e-12));

    // Far beyond the collapse cut at n=50, p=1/2.
    const double collapse_log2m = 50 + 10 * std::log2(50.0) + 1;
    const auto col = regime_classify(
        DerivedParams::from_m(50, 0.5, LogReal::from_log(collapse_log2m * num::kLn2)), margins);
    CHECK(col.regime == Regime::collapsed);
    CHECK(col.magnitude->to_double() == 1.0);

    // Mid information-theoretic regime.
    const auto info = regime_classify(DerivedParams::from_alpha(30, 0.6, 0.7), margins);
    CHECK(info.regime == Regime::info_theoretic);
    REQUIRE(info.magnitude.has_value());
    const double want = info_exponent(0.7, 0.6) * 30 * num::kLn2 - 0.5 * std::log(30.0);
    CHECK_THAT(info.magnitude->log(), WithinRel(want, 1e-12));

    // Near both transitions: no magnitude is asserted.
    for (double a : {0.45, 0.52, 0.96, 1.01, 1.2}) {
        const auto nt = regime_classify(DerivedParams::from_alpha(64, 0.5, a), margins);
        INFO("alpha=" << a);
        CHECK(nt.regime == Regime::near_transition);
        CHECK_FALSE(nt.magnitude.has_value());
    }

    CHECK_THROWS_AS(regime_classify(DerivedParams::from_alpha(10, 0.5, 0.2), {0.0, 0.05}),
                    std::domain_error);
}

TEST_CASE("regime label round trip") {
    for (Regime r : {Regime::linear, Regime::near_transition, Regime::info_theoretic,
                     Regime::collapsed})
        CHECK(regime_from_string(to_string(r)) == r);
    CHECK_THROWS_AS(regime_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("argmax of the expected minimization size") {
    SECTION("formula") {
        const auto [m_star, value] = argmax_m(200, 0.6);
        CHECK_THAT(m_star.log(), WithinRel(200.0 / 1.6 * -std::log1p(-0.6), 1e-12));
        CHECK_THAT(value.log(), WithinRel(200 * std::log1p(0.6) - 0.5 * std::log(200.0), 1e-12));
        const auto alpha = DerivedParams::from_m(200, 0.6, m_star).alpha;
        CHECK_THAT(alpha, WithinRel(1.0 / 1.6, 1e-12));
    }
    SECTION("degenerate p") {
        CHECK(argmax_m(10, 0.0).second.to_double() == 1.0);
        CHECK(argmax_m(10, 1.0).second.to_double() == 1.0);
    }
    SECTION("agrees with a grid search of the exact expectation") {
        // Coarse version of the acceptance sweep: n=60, p=0.6.
        const std::uint32_t n = 60;
        const double p = 0.6;
        double best_alpha = 0.0;
        LogReal best = LogReal::zero();
        for (int i = 1; i <= 120; ++i) {
            const double a = double(i) / 120.0;
            const auto e = expected_min_exact(n, p, DerivedParams::from_alpha(n, p, a).m);
            if (e > best) {
                best = e;
                best_alpha = a;
            }
        }
        CHECK_THAT(best_alpha, WithinAbs(1.0 / 1.6, 0.05));
    }
}
