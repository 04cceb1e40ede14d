#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypermin/errors.hpp"
#include "hypermin/log_real.hpp"
#include "hypermin/minimize.hpp"
#include "hypermin/tail_bounds.hpp"

namespace hypermin::oracle {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact probability p = num/den for the rational oracle paths.
struct RationalProb {
    std::uint64_t num;
    std::uint64_t den;

    void validate() const {
        if (den == 0 || num > den)
            throw std::domain_error("rational probability: need 0 <= num/den <= 1");
    }
    double to_double() const { return double(num) / double(den); }
};

inline BigInt big_pow(BigInt base, std::uint64_t e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline BigInt binomial_coefficient_exact(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        r *= BigInt(n - i);
        r /= BigInt(i + 1);
    }
    return r;
}

/// Natural log of a positive big integer; shifts to a 64-bit window first so
/// the conversion to double never overflows.
inline double log_big(const BigInt& v) {
    if (v <= 0) throw std::domain_error("log_big: argument must be positive");
    const std::size_t bits = boost::multiprecision::msb(v);
    if (bits <= 900) return std::log(v.convert_to<double>());
    const BigInt shifted = v >> (bits - 64);
    return std::log(shifted.convert_to<double>()) +
           static_cast<double>(bits - 64) * num::kLn2;
}

inline LogReal log_real_of(const BigRational& r) {
    if (r == 0) return LogReal::zero();
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    const int sign = num < 0 ? -1 : +1;
    return LogReal::from_log(log_big(sign < 0 ? BigInt(-num) : num) - log_big(den), sign);
}

// --- outcome enumeration -------------------------------------------------

/// Guard for the (2^n)^m = 2^{nm} outcome tuples: at most 1e7 of them.
inline void check_enumeration_cap(std::uint32_t n, std::uint32_t m) {
    if (n < 1 || m < 1)
        throw std::domain_error("enumeration: n and m must be >= 1");
    if (std::uint64_t(n) * m > 23)
        throw ResourceError("enumeration: (2^" + std::to_string(n) + ")^" +
                            std::to_string(m) + " outcome tuples exceed the 1e7 cap");
}

namespace detail {

inline std::vector<EdgeSet> all_edges(std::uint32_t n) {
    std::vector<EdgeSet> table;
    table.reserve(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        EdgeSet e(n);
        for (std::uint32_t v = 0; v < n; ++v)
            if (mask & (1u << v)) e.add(v + 1);
        table.push_back(std::move(e));
    }
    return table;
}

// Walks all (2^n)^m tuples with a mixed-radix counter and hands each one to
// the visitor as a hypergraph together with the product of per-edge weights.
template <typename Weight, typename Visitor>
void for_each_outcome(std::uint32_t n, std::uint32_t m,
                      const std::vector<Weight>& edge_weight, Visitor&& visit) {
    const auto table = all_edges(n);
    const std::uint32_t radix = 1u << n;
    std::vector<std::uint32_t> digits(m, 0);
    for (;;) {
        MultiHypergraph h(n);
        Weight w = edge_weight[digits[0]];
        h.add(table[digits[0]]);
        for (std::uint32_t j = 1; j < m; ++j) {
            h.add(table[digits[j]]);
            w *= edge_weight[digits[j]];
        }
        visit(h, w);
        std::uint32_t pos = 0;
        while (pos < m && ++digits[pos] == radix) digits[pos++] = 0;
        if (pos == m) break;
    }
}

}  // namespace detail

/// E[|min(B_{n,m,p})|] by full enumeration of all outcome tuples, weighting
/// each tuple by its probability. |min| is computed with the minimize
/// module's naive path, so the oracle exercises minimization too.
inline double enumerate_expected_min(std::uint32_t n, std::uint32_t m, double p) {
    check_enumeration_cap(n, m);
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("enumeration: p must lie in [0,1]");
    std::vector<double> edge_weight;
    edge_weight.reserve(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int c = std::popcount(mask);
        edge_weight.push_back(std::pow(p, c) * std::pow(1.0 - p, int(n) - c));
    }
    double acc = 0.0;
    detail::for_each_outcome<double>(n, m, edge_weight, [&](const MultiHypergraph& h, double w) {
        acc += w * static_cast<double>(minimize_naive(h).size());
    });
    return acc;
}

/// Exact-rational variant: weights are integers num^c (den-num)^{n-c} over
/// the common denominator den^{nm}, so the whole sum is one big-integer
/// accumulation followed by a single division.
inline BigRational enumerate_expected_min_rational(std::uint32_t n, std::uint32_t m,
                                                   RationalProb p) {
    check_enumeration_cap(n, m);
    p.validate();
    std::vector<BigInt> edge_weight;
    edge_weight.reserve(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const std::uint32_t c = std::popcount(mask);
        edge_weight.push_back(big_pow(BigInt(p.num), c) *
                              big_pow(BigInt(p.den - p.num), n - c));
    }
    BigInt acc = 0;
    detail::for_each_outcome<BigInt>(n, m, edge_weight, [&](const MultiHypergraph& h, BigInt w) {
        acc += w * BigInt(minimize_naive(h).size());
    });
    return BigRational(acc, big_pow(BigInt(p.den), std::uint64_t(n) * m));
}

// --- binomial tails ------------------------------------------------------

/// Exact binomial tail P[Y <= k] (or P[Y >= k]) for Y ~ Bin(n,p), summed
/// term by term in the log domain. Independent of the bounds module: no
/// divergence rewrite, just PMF terms.
inline LogReal exact_binomial_tail(std::uint64_t n, double p, std::uint64_t k, Tail direction) {
    if (k > n) throw std::domain_error("exact_binomial_tail: k must lie in [0,n]");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("exact_binomial_tail: p must lie in [0,1]");
    if (p == 0.0) return direction == Tail::lower || k == 0 ? LogReal::one() : LogReal::zero();
    if (p == 1.0) return direction == Tail::upper || k == n ? LogReal::one() : LogReal::zero();
    if ((direction == Tail::lower && k == n) || (direction == Tail::upper && k == 0))
        return LogReal::one();  // full support
    const double log_p = std::log(p), log_1mp = std::log1p(-p);
    const std::uint64_t lo = direction == Tail::lower ? 0 : k;
    const std::uint64_t hi = direction == Tail::lower ? k : n;
    std::vector<double> terms;
    terms.reserve(hi - lo + 1);
    for (std::uint64_t j = lo; j <= hi; ++j)
        terms.push_back(num::lchoose(n, j) + double(j) * log_p + double(n - j) * log_1mp);
    return LogReal::from_log(num::log_sum_exp(terms));
}

/// Exact-rational tail: sum C(n,j) num^j (den-num)^{n-j} / den^n.
inline BigRational binomial_tail_rational(std::uint64_t n, RationalProb p, std::uint64_t k,
                                          Tail direction) {
    if (k > n) throw std::domain_error("binomial_tail_rational: k must lie in [0,n]");
    p.validate();
    const std::uint64_t lo = direction == Tail::lower ? 0 : k;
    const std::uint64_t hi = direction == Tail::lower ? k : n;
    BigInt acc = 0;
    for (std::uint64_t j = lo; j <= hi; ++j)
        acc += binomial_coefficient_exact(n, j) * big_pow(BigInt(p.num), j) *
               big_pow(BigInt(p.den - p.num), n - j);
    return BigRational(acc, big_pow(BigInt(p.den), n));
}

// --- conditional survival (three-outcome experiment) ----------------------

/// For m i.i.d. trials with outcomes A, B, C the two conditional survival
/// probabilities have closed forms:
///   lhs = P[no A | some B] = ((1-pA)^m - (1-pA-pB)^m) / (1 - (1-pB)^m)
///   rhs = P[no A | B in trial m] = (1-pA)^{m-1}
/// and lhs <= rhs always holds.
struct ConditionalSurvival {
    double lhs;
    double rhs;
};

inline ConditionalSurvival conditional_survival(double p_a, double p_b, std::uint32_t m) {
    if (!(p_a >= 0.0 && p_b >= 0.0 && p_a + p_b <= 1.0))
        throw std::domain_error("conditional_survival: need pA, pB >= 0 and pA+pB <= 1");
    if (!(p_b > 0.0)) throw std::domain_error("conditional_survival: need pB > 0");
    if (m < 1) throw std::domain_error("conditional_survival: need m >= 1");
    const double no_a = std::pow(1.0 - p_a, m);
    const double no_ab = std::pow(1.0 - p_a - p_b, m);
    const double some_b = -std::expm1(double(m) * std::log1p(-p_b));
    return {(no_a - no_ab) / some_b, std::pow(1.0 - p_a, int(m) - 1)};
}

inline std::pair<BigRational, BigRational> conditional_survival_rational(RationalProb p_a,
                                                                         RationalProb p_b,
                                                                         std::uint32_t m) {
    p_a.validate();
    p_b.validate();
    if (p_b.num == 0) throw std::domain_error("conditional_survival: need pB > 0");
    if (m < 1) throw std::domain_error("conditional_survival: need m >= 1");
    const BigRational a(p_a.num, p_a.den), b(p_b.num, p_b.den);
    if (a + b > 1) throw std::domain_error("conditional_survival: need pA+pB <= 1");
    auto rpow = [](const BigRational& r, std::uint32_t e) {
        BigRational out = 1;
        for (std::uint32_t i = 0; i < e; ++i) out *= r;
        return out;
    };
    const BigRational lhs =
        (rpow(1 - a, m) - rpow(1 - a - b, m)) / (1 - rpow(1 - b, m));
    const BigRational rhs = rpow(1 - a, m - 1);
    return {lhs, rhs};
}

}  // namespace hypermin::oracle
