#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "hypermin/info_measures.hpp"
#include "hypermin/log_real.hpp"

namespace hypermin {

enum class Tail { lower, upper };

/// Two-sided estimate of a binomial tail probability. Both sides share the
/// factor 2^{-D(x||p) n} / sqrt(n); the prefactors are recorded so callers
/// can inspect the constants actually used.
struct TailBoundPair {
    LogReal lower;
    LogReal upper;
    double lower_prefactor = 0.0;
    double upper_prefactor = 0.0;
};

/// round(x*n) if x*n is integral up to 1e-9 * n, otherwise nothing.
inline std::optional<std::uint64_t> snap_integral(double x, std::uint64_t n) {
    const double xn = x * static_cast<double>(n);
    const double k = std::round(xn);
    if (std::abs(xn - k) <= 1e-9 * static_cast<double>(n) && k >= 0.0)
        return static_cast<std::uint64_t>(k);
    return std::nullopt;
}

namespace detail {

inline TailBoundPair make_tail_pair(std::uint64_t n, double p, double x, double lo_const,
                                    double hi_const) {
    const double nd = static_cast<double>(n);
    const double log_core = -kl_divergence_nat(x, p) * nd - 0.5 * std::log(nd);
    TailBoundPair pair;
    pair.lower_prefactor = lo_const;
    pair.upper_prefactor = hi_const;
    pair.lower = LogReal::from_log(std::log(lo_const) + log_core);
    pair.upper = LogReal::from_log(std::log(hi_const) + log_core);
    return pair;
}

}  // namespace detail

/// Sharp two-sided tail bound for Y ~ Bin(n,p), valid for all real x in the
/// stated window:
///   lower tail (P[Y <= xn]):  1/n <= x < p
///   upper tail (P[Y >= xn]):  p < x <= 1 - 1/n
/// Both tails are Theta(2^{-D(x||p) n} / sqrt(n)) with the explicit constants
/// below; the sqrt(n) refinement provably cannot reach x = 0 or x = p.
inline TailBoundPair chernoff_sharp(std::uint64_t n, double p, double x, Tail tail) {
    if (n < 1) throw std::domain_error("chernoff_sharp: n must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("chernoff_sharp: p must lie in (0,1)");
    detail::check_probability(x, "chernoff_sharp: x");
    const double nd = static_cast<double>(n);
    const double e = std::exp(1.0);
    if (tail == Tail::lower) {
        if (!(x >= 1.0 / nd))
            throw std::domain_error("chernoff_sharp: lower tail needs x >= 1/n");
        if (!(x < p)) throw std::domain_error("chernoff_sharp: lower tail needs x < p");
        const double lo = (1.0 - p) * std::sqrt(x) / (2.0 * e * std::sqrt(2.0 * (1.0 - x)));
        const double hi = std::sqrt(1.0 - x) / ((p - x) * std::sqrt(M_PI * x));
        return detail::make_tail_pair(n, p, x, lo, hi);
    }
    if (!(x > p)) throw std::domain_error("chernoff_sharp: upper tail needs x > p");
    if (!(x <= 1.0 - 1.0 / nd))
        throw std::domain_error("chernoff_sharp: upper tail needs x <= 1 - 1/n");
    const double lo = p * std::sqrt(1.0 - x) / (2.0 * e * std::sqrt(2.0 * x));
    const double hi = std::sqrt(x) / ((x - p) * std::sqrt(M_PI * (1.0 - x)));
    return detail::make_tail_pair(n, p, x, lo, hi);
}

/// Tighter constants available when xn is an integer (tolerance 1e-9 * n,
/// then snapped). Windows: 0 < x < p for the lower tail, p < x < 1 for the
/// upper one.
inline TailBoundPair chernoff_integral(std::uint64_t n, double p, double x, Tail tail) {
    if (n < 1) throw std::domain_error("chernoff_integral: n must be >= 1");
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("chernoff_integral: p must lie in (0,1)");
    detail::check_probability(x, "chernoff_integral: x");
    const auto k = snap_integral(x, n);
    if (!k) throw std::domain_error("chernoff_integral: x*n must be an integer");
    const double xs = static_cast<double>(*k) / static_cast<double>(n);
    if (tail == Tail::lower) {
        if (!(xs > 0.0 && xs < p))
            throw std::domain_error("chernoff_integral: lower tail needs 0 < x < p");
        const double lo = 1.0 / std::sqrt(8.0 * xs * (1.0 - xs));
        const double hi = p * std::sqrt(1.0 - xs) / ((p - xs) * std::sqrt(M_PI * xs));
        return detail::make_tail_pair(n, p, xs, lo, hi);
    }
    if (!(xs > p && xs < 1.0))
        throw std::domain_error("chernoff_integral: upper tail needs p < x < 1");
    const double lo = 1.0 / std::sqrt(8.0 * xs * (1.0 - xs));
    const double hi = (1.0 - p) * std::sqrt(xs) / ((xs - p) * std::sqrt(M_PI * (1.0 - xs)));
    return detail::make_tail_pair(n, p, xs, lo, hi);
}

/// Entropy sandwich on the binomial coefficient C(n, xn) for integral xn:
///   2^{Hb(x) n} / sqrt(8 n x (1-x))  <=  C(n, xn)  <=  2^{Hb(x) n} / sqrt(pi n x (1-x)).
inline std::pair<LogReal, LogReal> binom_coeff_bounds(std::uint64_t n, double x) {
    if (n < 1) throw std::domain_error("binom_coeff_bounds: n must be >= 1");
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("binom_coeff_bounds: x must lie in (0,1)");
    const auto k = snap_integral(x, n);
    if (!k) throw std::domain_error("binom_coeff_bounds: x*n must be an integer");
    const double xs = static_cast<double>(*k) / static_cast<double>(n);
    const double nd = static_cast<double>(n);
    const double log_top = binary_entropy(xs) * nd * num::kLn2;
    const double spread = nd * xs * (1.0 - xs);
    return {LogReal::from_log(log_top - 0.5 * std::log(8.0 * spread)),
            LogReal::from_log(log_top - 0.5 * std::log(M_PI * spread))};
}

/// Elementary bounds on powers of probabilities:
///   e^{-nx} (1 - n x^2)  <=  (1-x)^n      <=  e^{-nx}
///   nx / (1 + nx)        <=  1 - (1-x)^n  <=  nx
struct PolyProbBounds {
    double poly_lower;
    double poly_upper;
    double badkobeh_lower;
    double badkobeh_upper;
};

inline PolyProbBounds poly_prob_bounds(std::uint64_t n, double x) {
    detail::check_probability(x, "poly_prob_bounds: x");
    const double nd = static_cast<double>(n);
    const double e_nx = std::exp(-nd * x);
    return {e_nx * (1.0 - nd * x * x), e_nx, nd * x / (1.0 + nd * x), nd * x};
}

/// CDF/PMF ratio bound for Y ~ Bin(n,p) at k <= pn:
///   1 <= P[Y <= k] / P[Y = k] <= p (n+1-k) / (p (n+1) - k).
/// The denominator is the algebraically identical positive form of
/// n+1-k-(n+1)(1-p); it is positive whenever k <= pn.
inline std::pair<double, double> klar_ratio_bound(std::uint64_t n, double p, std::uint64_t k) {
    detail::check_probability(p, "klar_ratio_bound: p");
    const double nd = static_cast<double>(n), kd = static_cast<double>(k);
    if (kd > p * nd + 1e-9 * nd)
        throw std::domain_error("klar_ratio_bound: needs k <= p*n");
    const double denom = p * (nd + 1.0) - kd;
    if (!(denom > 0.0))
        throw std::domain_error("klar_ratio_bound: nonpositive denominator");
    return {1.0, p * (nd + 1.0 - kd) / denom};
}

/// Large-deviation rate approximation for P[sum of n Bernoulli(p) >= xn]:
///   (1/n) ln P = -D_e(x||p) - (ln n)/(2n) + O(1/n).
inline double cramer_rate(std::uint64_t n, double p, double x) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("cramer_rate: p must lie in (0,1)");
    if (!(x > p && x < 1.0)) throw std::domain_error("cramer_rate: needs p < x < 1");
    const double nd = static_cast<double>(n);
    if (!(nd >= 1.0 / (1.0 - x))) throw std::domain_error("cramer_rate: needs n >= 1/(1-x)");
    return -kl_divergence_nat(x, p) - 0.5 * std::log(nd) / nd;
}

}  // namespace hypermin
