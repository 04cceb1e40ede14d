#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hypermin/oracle.hpp"

using namespace hypermin;
using oracle::BigRational;
using oracle::RationalProb;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("outcome enumeration") {
    CHECK(oracle::enumerate_expected_min_rational(2, 2, {1, 2}) == BigRational(18, 16));
    CHECK(oracle::enumerate_expected_min_rational(3, 3, {1, 4}) == BigRational(76471, 65536));
    CHECK(oracle::enumerate_expected_min_rational(3, 3, {3, 4}) == BigRational(89431, 65536));
    CHECK_THAT(oracle::enumerate_expected_min(1, 3, 0.3), WithinAbs(1.0, 1e-14));

    // Double and rational paths agree.
    for (std::uint32_t n = 1; n <= 3; ++n)
        for (std::uint32_t m = 1; m <= 3; ++m) {
            const double d = oracle::enumerate_expected_min(n, m, 0.25);
            const auto r = oracle::enumerate_expected_min_rational(n, m, {1, 4});
            CHECK_THAT(d, WithinAbs(r.convert_to<double>(), 1e-12));
        }

    CHECK_THROWS_AS(oracle::enumerate_expected_min(24, 1, 0.5), ResourceError);
    CHECK_THROWS_AS(oracle::enumerate_expected_min(4, 6, 0.5), ResourceError);
    CHECK_THROWS_AS(oracle::enumerate_expected_min_rational(2, 2, {3, 2}), std::domain_error);
}

TEST_CASE("exact binomial tail") {
    CHECK(oracle::exact_binomial_tail(50, 0.3, 50, Tail::lower).to_double() == 1.0);
    CHECK_THAT(oracle::exact_binomial_tail(10, 0.5, 3, Tail::lower).to_double(),
               WithinRel(176.0 / 1024.0, 1e-13));
    CHECK(oracle::binomial_tail_rational(10, {1, 2}, 3, Tail::lower) ==
          BigRational(176, 1024));

    // Degenerate probabilities.
    CHECK(oracle::exact_binomial_tail(5, 0.0, 2, Tail::lower).to_double() == 1.0);
    CHECK(oracle::exact_binomial_tail(5, 0.0, 2, Tail::upper).is_zero());
    CHECK(oracle::exact_binomial_tail(5, 1.0, 5, Tail::upper).to_double() == 1.0);

    // Monotone in k for the lower tail.
    LogReal prev = LogReal::zero();
    for (std::uint64_t k = 0; k <= 30; ++k) {
        const auto t = oracle::exact_binomial_tail(30, 0.4, k, Tail::lower);
        CHECK(prev <= t);
        prev = t;
    }

    // Lower and upper tails overlap in exactly P[Y = k].
    const auto lo = oracle::exact_binomial_tail(40, 0.7, 25, Tail::lower);
    const auto hi = oracle::exact_binomial_tail(40, 0.7, 25, Tail::upper);
    CHECK_THAT((lo + hi).to_double(),
               WithinRel(1.0 + std::exp(num::lchoose(40, 25) + 25 * std::log(0.7) +
                                        15 * std::log(0.3)),
                         1e-12));

    CHECK_THROWS_AS(oracle::exact_binomial_tail(10, 0.5, 11, Tail::lower), std::domain_error);
}

TEST_CASE("log-domain and rational tails agree at n=2000") {
    const auto log_path = oracle::exact_binomial_tail(2000, 0.7, 1200, Tail::lower);
    const auto rational = oracle::binomial_tail_rational(2000, {7, 10}, 1200, Tail::lower);
    const auto exact = oracle::log_real_of(rational);
    CHECK_THAT(log_path.log(), WithinAbs(exact.log(), 1e-10));
}

TEST_CASE("big integer helpers") {
    CHECK(oracle::binomial_coefficient_exact(10, 5) == 252);
    CHECK(oracle::binomial_coefficient_exact(100, 30) ==
          oracle::BigInt("29372339821610944823963760"));
    CHECK_THAT(oracle::log_big(oracle::big_pow(oracle::BigInt(10), 400)),
               WithinRel(400.0 * std::log(10.0), 1e-13));
    CHECK_THAT(oracle::log_real_of(BigRational(-3, 4)).to_double(), WithinRel(-0.75, 1e-13));
}

TEST_CASE("conditional survival") {
    SECTION("m = 1 makes both sides 1") {
        const auto [lhs, rhs] = oracle::conditional_survival(0.2, 0.3, 1);
        CHECK_THAT(lhs, WithinRel(1.0, 1e-12));
        CHECK(rhs == 1.0);
    }
    SECTION("pA = 0 makes both sides 1") {
        const auto [lhs, rhs] = oracle::conditional_survival(0.0, 0.4, 7);
        CHECK_THAT(lhs, WithinRel(1.0, 1e-12));
        CHECK(rhs == 1.0);
    }
    SECTION("spot case and inequality") {
        const auto [lhs, rhs] = oracle::conditional_survival(0.2, 0.3, 4);
        CHECK(lhs <= rhs);
        const auto [rl, rr] = oracle::conditional_survival_rational({2, 10}, {3, 10}, 4);
        CHECK(rl <= rr);
        CHECK_THAT(lhs, WithinRel(rl.convert_to<double>(), 1e-12));
        CHECK_THAT(rhs, WithinRel(rr.convert_to<double>(), 1e-12));
    }
    SECTION("inequality on a small exact grid") {
        for (std::uint64_t a = 0; a <= 10; ++a)
            for (std::uint64_t b = 1; a + b <= 10; ++b)
                for (std::uint32_t m : {1u, 2u, 5u, 9u}) {
                    const auto [lhs, rhs] =
                        oracle::conditional_survival_rational({a, 10}, {b, 10}, m);
                    CHECK(lhs <= rhs);
                }
    }
    SECTION("domain errors") {
        CHECK_THROWS_AS(oracle::conditional_survival(0.2, 0.0, 3), std::domain_error);
        CHECK_THROWS_AS(oracle::conditional_survival(0.8, 0.3, 3), std::domain_error);
    }
}
