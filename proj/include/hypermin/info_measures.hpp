#pragma once

#include <cmath>
#include <stdexcept>

#include "hypermin/log_real.hpp"

namespace hypermin {

namespace detail {
inline void check_probability(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error(std::string(name) + " must be a probability in [0,1]");
}
}  // namespace detail

/// Binary entropy Hb(x) = -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0.
inline double binary_entropy(double x) {
    detail::check_probability(x, "binary_entropy: x");
    auto xlog2x = [](double a) { return a == 0.0 ? 0.0 : a * std::log2(a); };
    return -(xlog2x(x) + xlog2x(1.0 - x));
}

enum class LogBase { two, e };

/// Kullback-Leibler divergence between Bernoulli(x) and Bernoulli(y).
/// Returns +inf when absolute continuity fails (x > 0 with y = 0, or
/// x < 1 with y = 1).
inline double kl_divergence(double x, double y, LogBase base = LogBase::two) {
    detail::check_probability(x, "kl_divergence: x");
    detail::check_probability(y, "kl_divergence: y");
    auto term = [base](double a, double b) {
        if (a == 0.0) return 0.0;  // 0 log(0/b) = 0, also for b = 0
        return base == LogBase::two ? a * std::log2(a / b) : a * std::log(a / b);
    };
    return term(x, y) + term(1.0 - x, 1.0 - y);
}

inline double kl_divergence_bits(double x, double y) {
    return kl_divergence(x, y, LogBase::two);
}

inline double kl_divergence_nat(double x, double y) {
    return kl_divergence(x, y, LogBase::e);
}

/// Exponent Hb(alpha) + (1-alpha) log2 p governing the information-theoretic
/// regime; the expectation there is of order 2^{exponent * n} / sqrt(n).
inline double info_exponent(double alpha, double p) {
    detail::check_probability(alpha, "info_exponent: alpha");
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("info_exponent: p must lie in (0,1)");
    return binary_entropy(alpha) + (1.0 - alpha) * std::log2(p);
}

}  // namespace hypermin
