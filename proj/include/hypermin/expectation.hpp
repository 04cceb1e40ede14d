#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hypermin/info_measures.hpp"
#include "hypermin/log_real.hpp"

namespace hypermin {

namespace detail {

// Per-cardinality building blocks for the expectation formulas, all as
// natural logs. For a fixed set S with |S| = i and one maximum-entropy trial
// X over [n] with vertex probability p:
//   q_i = P[X = S]          = p^i (1-p)^{n-i}
//   s_i = P[X proper subset of S] = (1-p)^{n-i} (1 - p^i)
//   1 - s_i = (1 - (1-p)^{n-i}) + q_i            (cancellation-free split)
struct CardinalityTerms {
    double log_q;
    double log_s;
    double log_one_minus_s;
};

inline CardinalityTerms cardinality_terms(std::uint32_t n, double p, std::uint32_t i) {
    const double log_p = std::log(p);
    const double log_1mp = std::log1p(-p);
    const double away = static_cast<double>(n - i);
    const double log_q = static_cast<double>(i) * log_p + away * log_1mp;
    if (i == 0) return {log_q, -num::kInf, 0.0};
    // log(1 - p^i) = log(-expm1(i log p))
    const double log_s = away * log_1mp + std::log(-std::expm1(static_cast<double>(i) * log_p));
    // 1 - s = (1 - (1-p)^{n-i}) + q; the first part is 0 when i = n.
    const double log_not_subset =
        i == n ? -num::kInf : std::log(-std::expm1(away * log_1mp));
    const double log_one_minus_s = std::min(0.0, num::log_add_exp(log_not_subset, log_q));
    return {log_q, log_s, log_one_minus_s};
}

inline void check_model(double p, const LogReal& m, const char* op) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error(std::string(op) + ": p must lie in [0,1]");
    if (m < LogReal::one())
        throw std::domain_error(std::string(op) + ": m must be >= 1");
}

// (1 - s)^m picking whichever representation of the base is exact: log(s)
// for s <= 1/2, the cancellation-free log(1-s) otherwise.
inline LogReal survival_power(const CardinalityTerms& t, const LogReal& m) {
    if (t.log_s <= -num::kLn2) return pow_one_minus_exp(t.log_s, m);
    return pow_exp(t.log_one_minus_s, m);
}

}  // namespace detail

/// Survival probability w_{n,p}(i,m) = (1 - (1-p)^{n-i} (1 - p^i))^m: the
/// chance that none of m maximum-entropy trials produces a proper subset of
/// a fixed i-element set. Non-increasing in i and in m; w(0,m) = 1 and
/// w(n,m) = p^{nm}.
inline LogReal weighting_factor(std::uint32_t n, double p, std::uint32_t i, const LogReal& m) {
    if (i > n) throw std::domain_error("weighting_factor: i must lie in [0,n]");
    detail::check_model(p, m, "weighting_factor");
    if (i == 0) return LogReal::one();
    if (p == 0.0) return LogReal::zero();  // every trial is the empty set
    if (p == 1.0) return LogReal::one();   // every trial is [n], never proper
    return detail::survival_power(detail::cardinality_terms(n, p, i), m);
}

/// Lower and upper estimates of E[|min(B_{n,m,p})|]:
///   lower         = sum_i C(n,i) (1 - (1 - q_i)^m) w(i, m)
///   upper_shifted = sum_i C(n,i) (1 - (1 - q_i)^m) w(i, m-1)
///   upper_scaled  = 1 + (1/p) * lower-sum
/// The expectation lies in [lower, min(upper_shifted, upper_scaled)].
struct ExpectedMinSandwich {
    LogReal lower;
    LogReal upper_shifted;
    LogReal upper_scaled;

    LogReal upper() const {
        return upper_shifted < upper_scaled ? upper_shifted : upper_scaled;
    }
};

inline ExpectedMinSandwich expected_min_sandwich(std::uint32_t n, double p, const LogReal& m) {
    detail::check_model(p, m, "expected_min_sandwich");
    if (p == 0.0 || p == 1.0) {
        // Deterministic model: all m trials produce the same edge.
        return {LogReal::one(), LogReal::one(), LogReal::one()};
    }
    const LogReal m_minus_1 = m - LogReal::one();
    std::vector<double> lower_terms, shifted_terms;
    lower_terms.reserve(n + 1);
    shifted_terms.reserve(n + 1);
    for (std::uint32_t i = 0; i <= n; ++i) {
        const auto t = detail::cardinality_terms(n, p, i);
        const double lc = num::lchoose(n, i);
        const LogReal sampled = one_minus_pow_one_minus_exp(t.log_q, m);
        const LogReal w_m = detail::survival_power(t, m);
        const LogReal w_m1 = detail::survival_power(t, m_minus_1);
        lower_terms.push_back(lc + sampled.log() + w_m.log());
        shifted_terms.push_back(lc + sampled.log() + w_m1.log());
    }
    const LogReal lower_sum = LogReal::from_log(num::log_sum_exp(lower_terms));
    ExpectedMinSandwich out;
    out.lower = lower_sum;
    out.upper_shifted = LogReal::from_log(num::log_sum_exp(shifted_terms));
    out.upper_scaled = LogReal::one() + lower_sum / LogReal::from_double(p);
    return out;
}

/// Exact expectation E[|min(B_{n,m,p})|]. A fixed i-set is minimal iff no
/// trial yields a proper subset (probability w(i,m)) and, on top of that,
/// some trial yields the set itself; by independence the second factor is
/// 1 - (1 - q_i / (1 - s_i))^m. Summing over all sets:
///   E = sum_i C(n,i) * w(i,m) * (1 - (1 - q_i/(1-s_i))^m)
///     = sum_i C(n,i) * (w(i,m) - (1 - (1-p)^{n-i})^m).
/// The first form is used here because it subtracts nothing.
inline LogReal expected_min_exact(std::uint32_t n, double p, const LogReal& m) {
    detail::check_model(p, m, "expected_min_exact");
    if (p == 0.0 || p == 1.0) return LogReal::one();
    std::vector<double> terms;
    terms.reserve(n + 1);
    for (std::uint32_t i = 0; i <= n; ++i) {
        const auto t = detail::cardinality_terms(n, p, i);
        const LogReal w = detail::survival_power(t, m);
        const double log_r = std::min(t.log_q - t.log_one_minus_s, 0.0);
        const LogReal sampled_if_free = one_minus_pow_one_minus_exp(log_r, m);
        terms.push_back(num::lchoose(n, i) + w.log() + sampled_if_free.log());
    }
    return LogReal::from_log(num::log_sum_exp(terms));
}

/// Expected number of distinct edges with cardinality in [lo, hi], exactly
///   sum_{i=lo}^{hi} C(n,i) (1 - (1 - q_i)^m),
/// sandwiched by binomial tails:
///   m/(1 + m pmax) * P[lo <= Y <= hi]  <=  exact  <=  m * P[lo <= Y <= hi]
/// with pmax the largest single-edge probability in the range.
struct DistinctRange {
    LogReal exact;
    LogReal lower;
    LogReal upper;
};

inline DistinctRange expected_distinct_range(std::uint32_t n, double p, const LogReal& m,
                                             std::uint32_t lo, std::uint32_t hi) {
    if (!(lo <= hi && hi <= n))
        throw std::domain_error("expected_distinct_range: needs 0 <= lo <= hi <= n");
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("expected_distinct_range: p must lie in (0,1)");
    detail::check_model(p, m, "expected_distinct_range");
    std::vector<double> exact_terms, pmf_terms;
    exact_terms.reserve(hi - lo + 1);
    pmf_terms.reserve(hi - lo + 1);
    for (std::uint32_t i = lo; i <= hi; ++i) {
        const auto t = detail::cardinality_terms(n, p, i);
        const double lc = num::lchoose(n, i);
        exact_terms.push_back(lc + one_minus_pow_one_minus_exp(t.log_q, m).log());
        pmf_terms.push_back(lc + t.log_q);
    }
    // pmax: the single-edge probability is monotone in i with direction given
    // by the odds p/(1-p).
    double log_pmax;
    if (p < 0.5)
        log_pmax = detail::cardinality_terms(n, p, lo).log_q;
    else if (p == 0.5)
        log_pmax = -static_cast<double>(n) * num::kLn2;
    else
        log_pmax = detail::cardinality_terms(n, p, hi).log_q;

    const LogReal mass = LogReal::from_log(num::log_sum_exp(pmf_terms));
    DistinctRange out;
    out.exact = LogReal::from_log(num::log_sum_exp(exact_terms));
    out.upper = m * mass;
    out.lower = m * mass / (LogReal::one() + m * LogReal::from_log(log_pmax));
    return out;
}

}  // namespace hypermin
