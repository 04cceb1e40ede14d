#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "hypermin/expectation.hpp"
#include "hypermin/minimize.hpp"
#include "hypermin/oracle.hpp"
#include "hypermin/regime.hpp"
#include "hypermin/sampler.hpp"
#include "hypermin/tail_bounds.hpp"

namespace hypermin::verify {

/// Relative slack used when comparing sandwich sides: the analytic
/// inequalities are strict, the tolerance only absorbs float noise.
inline constexpr double kRelSlack = 1e-9;

/// a <= b up to relative slack, compared on the log scale.
inline bool le_rel(const LogReal& a, const LogReal& b, double rel = kRelSlack) {
    if (a.is_zero() || a.sign() < 0) return true;
    if (b.is_zero()) return false;
    return a.log() <= b.log() + rel;
}

struct CheckResult {
    std::string family;
    std::size_t checks = 0;
    std::size_t violations = 0;
    std::vector<std::string> samples;  // first few offending tuples

    bool ok() const { return violations == 0; }
    void count(bool passed, const std::string& tuple) {
        ++checks;
        if (!passed) {
            ++violations;
            if (samples.size() < 5) samples.push_back(tuple);
        }
    }
};

inline CheckResult check_trust_anchor() {
    CheckResult res{"trust_anchor(enumeration vs closed form)"};
    for (std::uint32_t n = 1; n <= 3; ++n)
        for (std::uint32_t m = 1; m <= 3; ++m)
            for (std::uint64_t num : {1, 2, 3}) {
                const auto brute = oracle::enumerate_expected_min_rational(n, m, {num, 4});
                const double formula =
                    expected_min_exact(n, double(num) / 4.0, LogReal::from_double(m))
                        .to_double();
                std::ostringstream t;
                t << "(n=" << n << ", m=" << m << ", p=" << num << "/4)";
                res.count(std::abs(formula - brute.convert_to<double>()) <= 1e-12, t.str());
            }
    return res;
}

inline CheckResult check_expectation_sandwich() {
    CheckResult res{"expectation_sandwich(Lemma on minimal-edge counts)"};
    for (std::uint32_t n : {4u, 8u, 12u})
        for (double p : {0.25, 0.5, 0.75})
            for (int log2m = 0; log2m <= 16; log2m += 2) {
                const auto m = LogReal::from_log(log2m * num::kLn2);
                const auto exact = expected_min_exact(n, p, m);
                const auto s = expected_min_sandwich(n, p, m);
                std::ostringstream t;
                t << "(n=" << n << ", p=" << p << ", m=2^" << log2m << ")";
                res.count(le_rel(s.lower, exact) && le_rel(exact, s.upper_shifted) &&
                              le_rel(exact, s.upper_scaled),
                          t.str());
            }
    return res;
}

/// The two scale hooks deliberately corrupt the produced pair; they exist so
/// the detection machinery itself can be tested (a scaled bound must fail).
inline CheckResult check_chernoff(double lower_scale = 1.0, double upper_scale = 1.0) {
    CheckResult res{"chernoff_sharp/chernoff_integral(tail sandwich)"};
    const LogReal lo_scale = LogReal::from_double(lower_scale);
    const LogReal hi_scale = LogReal::from_double(upper_scale);
    for (std::uint64_t n : {10ull, 50ull, 200ull})
        for (double p : {0.2, 0.5, 0.8})
            for (int i = 1; i <= 10; ++i) {
                for (Tail tail : {Tail::lower, Tail::upper}) {
                    const double lo_edge = tail == Tail::lower ? 1.0 / double(n) : p;
                    const double hi_edge = tail == Tail::lower ? p : 1.0 - 1.0 / double(n);
                    const double x = lo_edge + (hi_edge - lo_edge) * double(i) / 11.0;
                    const std::uint64_t k = tail == Tail::lower
                                                ? std::uint64_t(std::floor(x * double(n)))
                                                : std::uint64_t(std::ceil(x * double(n)));
                    const auto exact = oracle::exact_binomial_tail(n, p, k, tail);
                    const auto pair = chernoff_sharp(n, p, x, tail);
                    std::ostringstream t;
                    t << "chernoff_sharp(n=" << n << ", p=" << p << ", x=" << x << ", "
                      << (tail == Tail::lower ? "lower" : "upper") << ")";
                    res.count(le_rel(pair.lower * lo_scale, exact) &&
                                  le_rel(exact, pair.upper * hi_scale),
                              t.str());
                    // Integral-case constants at the snapped point.
                    const double xi = double(k) / double(n);
                    const bool in_window = tail == Tail::lower ? (xi > 0.0 && xi < p)
                                                               : (xi > p && xi < 1.0);
                    if (!in_window) continue;
                    const auto ipair = chernoff_integral(n, p, xi, tail);
                    std::ostringstream ti;
                    ti << "chernoff_integral(n=" << n << ", p=" << p << ", x=" << xi << ", "
                       << (tail == Tail::lower ? "lower" : "upper") << ")";
                    res.count(le_rel(ipair.lower * lo_scale, exact) &&
                                  le_rel(exact, ipair.upper * hi_scale),
                              ti.str());
                }
            }
    return res;
}

inline CheckResult check_klar() {
    CheckResult res{"klar_ratio(CDF/PMF bound)"};
    for (std::uint64_t n = 1; n <= 100; n += 3)
        for (double p : {0.3, 0.5, 0.7})
            for (std::uint64_t k = 0; double(k) <= p * double(n); ++k) {
                const auto [lo, hi] = klar_ratio_bound(n, p, k);
                const auto cdf = oracle::exact_binomial_tail(n, p, k, Tail::lower);
                const double pmf = std::exp(num::lchoose(n, k) + double(k) * std::log(p) +
                                            double(n - k) * std::log1p(-p));
                const double ratio = cdf.to_double() / pmf;
                std::ostringstream t;
                t << "(n=" << n << ", p=" << p << ", k=" << k << ")";
                res.count(ratio >= lo - kRelSlack && ratio <= hi * (1.0 + kRelSlack),
                          t.str());
            }
    return res;
}

inline CheckResult check_weighting() {
    CheckResult res{"weighting_factor(threshold sandwich, monotonicity)"};
    for (std::uint32_t n : {16u, 30u})
        for (double p : {0.3, 0.5, 0.8})
            for (double log2m : {0.0, 8.0, 15.0, 40.0}) {
                const auto m = LogReal::from_log(log2m * num::kLn2);
                LogReal prev = LogReal::one();
                for (std::uint32_t i = 0; i <= n; ++i) {
                    const auto w = weighting_factor(n, p, i, m);
                    std::ostringstream t;
                    t << "(n=" << n << ", p=" << p << ", i=" << i << ", m=2^" << log2m << ")";
                    bool ok = le_rel(w, prev, 1e-12);
                    if (i == 0) ok = ok && w.to_double() == 1.0;
                    if (i > 0 && i < n) {
                        // Corollary sandwich around the threshold.
                        const double away = double(n - i);
                        const double mn = m.to_double();
                        const double log_hi = -mn * std::pow(1 - p, away + 1);
                        ok = ok && le_rel(w, LogReal::from_log(log_hi));
                        const double corr = 1.0 - mn * std::pow(1 - p, 2 * away);
                        if (corr > 0) {
                            const double log_lo = -mn * std::pow(1 - p, away) + std::log(corr);
                            ok = ok && le_rel(LogReal::from_log(log_lo), w);
                        }
                    }
                    if (i == n)
                        ok = ok && std::abs(w.log() - double(n) * m.to_double() * std::log(p)) <=
                                       1e-9 * std::abs(w.log());
                    res.count(ok, t.str());
                    prev = w;
                }
            }
    return res;
}

inline CheckResult check_binom_coeff() {
    CheckResult res{"binom_coeff_bounds(entropy sandwich)"};
    for (std::uint64_t n : {4ull, 10ull, 64ull, 100ull, 250ull})
        for (std::uint64_t k = 1; k < n; k += (n > 16 ? n / 16 : 1)) {
            const auto [lo, hi] = binom_coeff_bounds(n, double(k) / double(n));
            const auto exact =
                oracle::log_real_of(oracle::BigRational(oracle::binomial_coefficient_exact(n, k)));
            std::ostringstream t;
            t << "(n=" << n << ", k=" << k << ")";
            res.count(le_rel(lo, exact) && le_rel(exact, hi), t.str());
        }
    return res;
}

inline CheckResult check_poly_prob() {
    CheckResult res{"poly_prob_bounds(powers of probabilities)"};
    for (std::uint64_t n : {0ull, 1ull, 3ull, 10ull, 50ull, 200ull})
        for (int i = 0; i <= 20; ++i) {
            const double x = double(i) / 20.0;
            const auto b = poly_prob_bounds(n, x);
            const double exact = std::pow(1.0 - x, double(n));
            std::ostringstream t;
            t << "(n=" << n << ", x=" << x << ")";
            res.count(b.poly_lower <= exact + 1e-12 && exact <= b.poly_upper + 1e-12 &&
                          b.badkobeh_lower <= 1.0 - exact + 1e-12 &&
                          1.0 - exact <= b.badkobeh_upper + 1e-12,
                      t.str());
        }
    return res;
}

inline CheckResult check_distinct_range() {
    CheckResult res{"expected_distinct_range(binomial mass sandwich)"};
    for (std::uint32_t n : {6u, 12u, 24u})
        for (double p : {0.3, 0.5, 0.7})
            for (double log2m : {0.0, 4.0, 12.0, 30.0}) {
                const auto m = LogReal::from_log(log2m * num::kLn2);
                const auto full = expected_distinct_range(n, p, m, 0, n);
                const auto part = expected_distinct_range(n, p, m, n / 3, 2 * n / 3);
                std::ostringstream t;
                t << "(n=" << n << ", p=" << p << ", m=2^" << log2m << ")";
                res.count(le_rel(full.lower, full.exact) && le_rel(full.exact, full.upper) &&
                              le_rel(part.lower, part.exact) && le_rel(part.exact, part.upper) &&
                              le_rel(full.exact, m) &&
                              le_rel(expected_min_exact(n, p, m), full.exact),
                          t.str());
            }
    return res;
}

inline CheckResult check_conditional_survival() {
    CheckResult res{"conditional_survival(exact three-outcome inequality)"};
    for (std::uint64_t a = 0; a <= 20; ++a)
        for (std::uint64_t b = 1; a + b <= 20; ++b)
            for (std::uint32_t m = 1; m <= 12; ++m) {
                const auto [lhs, rhs] = oracle::conditional_survival_rational({a, 20}, {b, 20}, m);
                std::ostringstream t;
                t << "(pA=" << a << "/20, pB=" << b << "/20, m=" << m << ")";
                res.count(lhs <= rhs, t.str());
            }
    return res;
}

inline CheckResult check_minimize_equivalence(std::size_t instances = 200) {
    CheckResult res{"minimize(naive vs sorted vs streaming)"};
    for (std::uint64_t seed = 0; seed < instances; ++seed) {
        auto s = rng::stream(seed, 424242);
        const std::uint32_t n = 1 + s.next() % 64;
        const std::uint64_t m = 1 + s.next() % 200;
        const double p = 0.1 * double(1 + s.next() % 9);
        const auto h = sample_hypergraph({n, m, p, s.next()});
        const auto a = minimize_naive(h);
        const auto b = minimize_sorted(h);
        const auto c = minimize_stream(h);
        std::ostringstream t;
        t << "(seed=" << seed << ", n=" << n << ", m=" << m << ", p=" << p << ")";
        bool ok = a == b && a == c && a.size() >= 1 && a.size() <= h.count_distinct();
        // Re-validate the antichain property through the checking constructor.
        try {
            Antichain::from_members(h.universe_size(), a.members());
        } catch (const std::invalid_argument&) {
            ok = false;
        }
        res.count(ok, t.str());
    }
    return res;
}

inline std::vector<CheckResult> run_all() {
    return {check_trust_anchor(),    check_expectation_sandwich(),
            check_chernoff(),        check_klar(),
            check_weighting(),       check_binom_coeff(),
            check_poly_prob(),       check_distinct_range(),
            check_conditional_survival(), check_minimize_equivalence()};
}

}  // namespace hypermin::verify
