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

/// Scale parameters derived from (n, p, m):
///   alpha  = -(log_{1-p} m) / n, so that m = 1/(1-p)^{alpha n};
///   i_star = n + log_{1-p} m = (1 - alpha) n, the cardinality at which the
///            survival probability w_{n,p}(i, m) drops from ~1 to ~0.
/// m is kept as a LogReal: the interesting range extends to 1/(1-p)^n and
/// beyond, far outside both integer and double range.
struct DerivedParams {
    std::uint32_t n = 1;
    double p = 0.5;
    LogReal m = LogReal::one();
    double alpha = 0.0;
    double i_star = 0.0;

    static DerivedParams from_m(std::uint32_t n, double p, const LogReal& m) {
        check(n, p);
        if (m < LogReal::one()) throw std::domain_error("derived params: m must be >= 1");
        DerivedParams d;
        d.n = n;
        d.p = p;
        d.m = m;
        d.alpha = m.log() / (static_cast<double>(n) * -std::log1p(-p));
        d.i_star = (1.0 - d.alpha) * static_cast<double>(n);
        return d;
    }

    static DerivedParams from_alpha(std::uint32_t n, double p, double alpha) {
        check(n, p);
        if (!(alpha >= 0.0)) throw std::domain_error("derived params: alpha must be >= 0");
        DerivedParams d;
        d.n = n;
        d.p = p;
        d.alpha = alpha;
        d.m = LogReal::from_log(alpha * static_cast<double>(n) * -std::log1p(-p));
        d.i_star = (1.0 - alpha) * static_cast<double>(n);
        return d;
    }

private:
    static void check(std::uint32_t n, double p) {
        if (n < 1) throw std::domain_error("derived params: n must be >= 1");
        if (!(p > 0.0 && p < 1.0))
            throw std::domain_error("derived params: p must lie in (0,1)");
    }
};

enum class Regime { linear, near_transition, info_theoretic, collapsed };

inline const char* to_string(Regime r) {
    switch (r) {
        case Regime::linear: return "linear";
        case Regime::near_transition: return "near-transition";
        case Regime::info_theoretic: return "info-theoretic";
        case Regime::collapsed: return "collapsed";
    }
    return "?";
}

inline Regime regime_from_string(const std::string& s) {
    if (s == "linear") return Regime::linear;
    if (s == "near-transition") return Regime::near_transition;
    if (s == "info-theoretic") return Regime::info_theoretic;
    if (s == "collapsed") return Regime::collapsed;
    throw std::invalid_argument("unknown regime label '" + s + "'");
}

/// Margins around the two transition points alpha = 1-p and alpha = 1 inside
/// which no magnitude is asserted.
struct RegimeMargins {
    double eps = 0.05;
    double epsp = 0.05;
};

struct RegimeClassification {
    Regime regime;
    RegimeMargins margins;
    /// Asserted magnitude of E[|min|]: m in the linear regime, the entropy
    /// formula 2^{(Hb(a)+(1-a) log2 p) n}/sqrt(n) in the information-theoretic
    /// one, 1 when collapsed; absent near a transition.
    std::optional<LogReal> magnitude;
};

/// Classifies (n, p, m) into the regimes of the phase transition. The
/// collapse test uses the finite-n proxy alpha*n >= n + 10 log2(n) for the
/// asymptotic condition m = 1/(1-p)^{n + omega(log n)}; it is a heuristic
/// cut and is reported as such. Exactly at the transitions the behavior is
/// an open question, so points within the margins get the near-transition
/// label and no magnitude.
inline RegimeClassification regime_classify(const DerivedParams& d,
                                            RegimeMargins margins = {}) {
    if (!(margins.eps > 0.0 && margins.epsp > 0.0))
        throw std::domain_error("regime_classify: margins must be positive");
    const double nd = static_cast<double>(d.n);
    RegimeClassification out;
    out.margins = margins;
    if (d.alpha * nd >= nd + 10.0 * std::log2(nd)) {
        out.regime = Regime::collapsed;
        out.magnitude = LogReal::one();
        return out;
    }
    if (std::abs(d.alpha - (1.0 - d.p)) < margins.eps || d.alpha >= 1.0 - margins.epsp) {
        out.regime = Regime::near_transition;
        return out;
    }
    if (d.alpha < 1.0 - d.p) {
        out.regime = Regime::linear;
        out.magnitude = d.m;
        return out;
    }
    out.regime = Regime::info_theoretic;
    out.magnitude = LogReal::from_log(info_exponent(d.alpha, d.p) * nd * num::kLn2 -
                                      0.5 * std::log(nd));
    return out;
}

/// The number of trials maximizing E[|min(B_{n,m,p})|] and the order of the
/// maximum: m* = 1/(1-p)^{n/(1+p)} (i.e. alpha* = 1/(1+p)), value
/// (1+p)^n / sqrt(n). Degenerate p gives a minimization of size 1 for all m.
inline std::pair<LogReal, LogReal> argmax_m(std::uint32_t n, double p) {
    detail::check_probability(p, "argmax_m: p");
    if (n < 1) throw std::domain_error("argmax_m: n must be >= 1");
    if (p == 0.0 || p == 1.0) return {LogReal::one(), LogReal::one()};
    const double nd = static_cast<double>(n);
    const LogReal m_star = LogReal::from_log(nd / (1.0 + p) * -std::log1p(-p));
    const LogReal value =
        LogReal::from_log(nd * std::log1p(p) - 0.5 * std::log(nd));
    return {m_star, value};
}

}  // namespace hypermin
