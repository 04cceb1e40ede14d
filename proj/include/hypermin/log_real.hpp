#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace hypermin {

namespace num {

inline constexpr double kLn2 = 0.6931471805599453094;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// log(e^a + e^b)
inline double log_add_exp(double a, double b) {
    if (a == -kInf) return b;
    if (b == -kInf) return a;
    const double hi = a > b ? a : b;
    const double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

/// log(1 - e^t) for t <= 0
inline double log1mexp(double t) {
    if (t > 0.0) throw std::domain_error("log1mexp: argument must be <= 0");
    if (t > -kLn2) return std::log(-std::expm1(t));
    return std::log1p(-std::exp(t));
}

/// log(e^a - e^b) for a >= b
inline double log_sub_exp(double a, double b) {
    if (b == -kInf) return a;
    if (a < b) throw std::domain_error("log_sub_exp: needs a >= b");
    if (a == b) return -kInf;
    return a + log1mexp(b - a);
}

/// log(-log(1 - e^t)) for t < 0. Stable at both ends: for t near 0 the inner
/// complement is computed with expm1, for very negative t the identity
/// -log(1-y) = y + O(y^2) avoids the underflow of the inner log1p.
inline double log_neg_log1mexp(double t) {
    if (t >= 0.0) throw std::domain_error("log_neg_log1mexp: argument must be < 0");
    if (t <= -690.0) return t;
    if (t <= -kLn2) return std::log(-std::log1p(-std::exp(t)));
    return std::log(-std::log(-std::expm1(t)));
}

/// log C(n, k) via lgamma.
inline double lchoose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return -kInf;
    if (k == 0 || k == n) return 0.0;
    return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
           std::lgamma(double(n - k) + 1.0);
}

/// Stable logsumexp of a span of log-terms (compensated accumulation after
/// rescaling by the maximum).
inline double log_sum_exp(std::span<const double> logs) {
    double hi = -kInf;
    for (double v : logs) {
        if (v == kInf) return kInf;
        if (v > hi) hi = v;
    }
    if (hi == -kInf) return -kInf;
    double sum = 0.0, comp = 0.0;
    for (double v : logs) {
        const double term = std::exp(v - hi);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return hi + std::log(sum);
}

}  // namespace num

/// Signed scalar held as (sign, natural log of magnitude). Covers quantities
/// like m = 1/(1-p)^n or w_{n,p}(i,m) whose magnitudes leave the double
/// range long before the analysis becomes uninteresting.
class LogReal {
public:
    constexpr LogReal() = default;  // zero

    static LogReal zero() { return LogReal(); }
    static LogReal one() { return from_log(0.0); }

    static LogReal from_log(double log_magnitude, int sign = +1) {
        LogReal r;
        if (log_magnitude == -num::kInf || sign == 0) return r;
        if (std::isnan(log_magnitude))
            throw std::domain_error("LogReal: NaN log magnitude");
        r.sign_ = sign > 0 ? +1 : -1;
        r.log_ = log_magnitude;
        return r;
    }

    static LogReal from_double(double v) {
        if (v == 0.0) return zero();
        if (std::isnan(v)) throw std::domain_error("LogReal: NaN value");
        return from_log(std::log(std::abs(v)), v > 0 ? +1 : -1);
    }

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }

    /// Natural log of the magnitude; -inf for zero.
    double log() const { return log_; }
    double log10() const { return log_ / 2.302585092994045684; }
    double log2() const { return log_ / num::kLn2; }

    double to_double() const { return sign_ * std::exp(log_); }

    LogReal abs() const { return sign_ == 0 ? zero() : from_log(log_, +1); }

    LogReal operator-() const {
        LogReal r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    LogReal operator*(const LogReal& o) const {
        if (sign_ == 0 || o.sign_ == 0) return zero();
        return from_log(log_ + o.log_, sign_ * o.sign_);
    }

    LogReal operator/(const LogReal& o) const {
        if (o.sign_ == 0) throw std::domain_error("LogReal: division by zero");
        if (sign_ == 0) return zero();
        return from_log(log_ - o.log_, sign_ * o.sign_);
    }

    LogReal operator+(const LogReal& o) const {
        if (sign_ == 0) return o;
        if (o.sign_ == 0) return *this;
        if (sign_ == o.sign_) return from_log(num::log_add_exp(log_, o.log_), sign_);
        if (log_ == o.log_) return zero();
        return log_ > o.log_ ? from_log(num::log_sub_exp(log_, o.log_), sign_)
                             : from_log(num::log_sub_exp(o.log_, log_), o.sign_);
    }

    LogReal operator-(const LogReal& o) const { return *this + (-o); }

    /// Magnitude power; defined for non-negative values only.
    LogReal pow(double exponent) const {
        if (sign_ < 0) throw std::domain_error("LogReal::pow: negative base");
        if (sign_ == 0) {
            if (exponent > 0) return zero();
            if (exponent == 0) return one();
            throw std::domain_error("LogReal::pow: 0 to a negative power");
        }
        return from_log(log_ * exponent);
    }

    bool operator==(const LogReal& o) const {
        return sign_ == o.sign_ && (sign_ == 0 || log_ == o.log_);
    }
    bool operator!=(const LogReal& o) const { return !(*this == o); }
    bool operator<(const LogReal& o) const {
        if (sign_ != o.sign_) return sign_ < o.sign_;
        if (sign_ == 0) return false;
        return sign_ > 0 ? log_ < o.log_ : log_ > o.log_;
    }
    bool operator>(const LogReal& o) const { return o < *this; }
    bool operator<=(const LogReal& o) const { return !(o < *this); }
    bool operator>=(const LogReal& o) const { return !(*this < o); }

private:
    int sign_ = 0;
    double log_ = -num::kInf;
};

/// 1 - x for x in [0, 1], without leaving the log domain.
inline LogReal one_minus(const LogReal& x) {
    if (x.sign() < 0 || x.log() > 0.0)
        throw std::domain_error("one_minus: argument outside [0,1]");
    if (x.is_zero()) return LogReal::one();
    return LogReal::from_log(num::log1mexp(x.log()));
}

/// (1 - e^{log_s})^m for log_s <= 0 and m >= 0. This is the survival-style
/// power behind the weighting factors; exact at both extremes (s = 0 gives 1,
/// s = 1 gives 0) and stable when m * s is far outside the double range.
inline LogReal pow_one_minus_exp(double log_s, const LogReal& m) {
    if (log_s > 0.0) throw std::domain_error("pow_one_minus_exp: log_s must be <= 0");
    if (m.sign() < 0) throw std::domain_error("pow_one_minus_exp: negative exponent");
    if (log_s == -num::kInf || m.is_zero()) return LogReal::one();
    if (log_s == 0.0) return LogReal::zero();
    // log result = -m * (-log(1 - s)), composed in the log domain.
    const double lz = m.log() + num::log_neg_log1mexp(log_s);
    if (lz > 709.0) return LogReal::zero();
    return LogReal::from_log(-std::exp(lz));
}

/// (e^{log_b})^m for log_b <= 0 and m >= 0. Use this instead of
/// pow_one_minus_exp when the base is available as a stable complement
/// (log(1-s) rather than log(s)).
inline LogReal pow_exp(double log_b, const LogReal& m) {
    if (log_b > 0.0) throw std::domain_error("pow_exp: log_b must be <= 0");
    if (m.sign() < 0) throw std::domain_error("pow_exp: negative exponent");
    if (log_b == 0.0 || m.is_zero()) return LogReal::one();
    if (log_b == -num::kInf) return LogReal::zero();
    const double lz = m.log() + std::log(-log_b);
    if (lz > 709.0) return LogReal::zero();
    return LogReal::from_log(-std::exp(lz));
}

/// 1 - (1 - e^{log_r})^m, the probability that an event of per-trial
/// probability r happens at least once in m trials.
inline LogReal one_minus_pow_one_minus_exp(double log_r, const LogReal& m) {
    if (log_r > 0.0) throw std::domain_error("one_minus_pow_one_minus_exp: log_r must be <= 0");
    if (log_r == -num::kInf || m.is_zero()) return LogReal::zero();
    if (log_r == 0.0) return LogReal::one();
    const double lz = m.log() + num::log_neg_log1mexp(log_r);
    if (lz <= -700.0) return LogReal::from_log(lz);  // 1 - e^{-z} = z + O(z^2)
    if (lz > 709.0) return LogReal::one();
    return LogReal::from_log(num::log1mexp(-std::exp(lz)));
}

}  // namespace hypermin
