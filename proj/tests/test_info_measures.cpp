#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hypermin/info_measures.hpp"

using namespace hypermin;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    for (double x = 0.01; x < 1.0; x += 0.01) {
        CHECK(binary_entropy(x) >= 0.0);
        CHECK(binary_entropy(x) <= 1.0);
        CHECK_THAT(binary_entropy(x), WithinAbs(binary_entropy(1.0 - x), 1e-14));
    }
    CHECK_THROWS_AS(binary_entropy(-0.1), std::domain_error);
    CHECK_THROWS_AS(binary_entropy(1.1), std::domain_error);
}

TEST_CASE("kl divergence") {
    for (double p = 0.05; p < 1.0; p += 0.05) CHECK(kl_divergence_bits(p, p) == 0.0);

    // 2^{-D(0||p) n} = (1-p)^n holds exactly.
    for (double p : {0.2, 0.5, 0.9}) {
        const int n = 37;
        CHECK_THAT(std::exp2(-kl_divergence_bits(0.0, p) * n),
                   WithinRel(std::pow(1.0 - p, n), 1e-12));
    }

    // Natural and binary variants differ by ln 2.
    for (double x = 0.05; x < 1.0; x += 0.07)
        for (double y = 0.05; y < 1.0; y += 0.07)
            CHECK_THAT(kl_divergence_nat(x, y), WithinAbs(num::kLn2 * kl_divergence_bits(x, y), 1e-13));

    // Complement symmetry.
    for (double x = 0.0; x <= 1.0; x += 0.125)
        for (double y = 0.1; y < 1.0; y += 0.1)
            CHECK_THAT(kl_divergence_bits(x, y),
                       WithinAbs(kl_divergence_bits(1.0 - x, 1.0 - y), 1e-13));

    CHECK(std::isinf(kl_divergence_bits(0.3, 0.0)));
    CHECK(std::isinf(kl_divergence_bits(0.3, 1.0)));
    CHECK(kl_divergence_bits(0.0, 0.0) == 0.0);
    CHECK(kl_divergence_bits(1.0, 1.0) == 0.0);
    CHECK(kl_divergence_bits(0.3, 0.7) > 0.0);
    CHECK_THROWS_AS(kl_divergence_bits(-0.1, 0.5), std::domain_error);
}

TEST_CASE("2^-D(x||p) is non-decreasing in x below p") {
    for (double p : {0.3, 0.6, 0.9}) {
        double prev = -1.0;
        for (double x = 0.0; x <= p + 1e-12; x += p / 64) {
            const double v = std::exp2(-kl_divergence_bits(x, p));
            CHECK(v >= prev - 1e-12);
            prev = v;
        }
    }
}

TEST_CASE("info exponent peaks at alpha = 1/(1+p) with value log2(1+p)") {
    for (double p : {0.2, 0.5, 0.6, 0.8}) {
        const double a_star = 1.0 / (1.0 + p);
        CHECK_THAT(info_exponent(a_star, p), WithinRel(std::log2(1.0 + p), 1e-12));
        for (double a = 0.02; a < 1.0; a += 0.02)
            CHECK(info_exponent(a, p) <= info_exponent(a_star, p) + 1e-12);
    }
}
