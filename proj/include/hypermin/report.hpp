#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>

#include "hypermin/expectation.hpp"
#include "hypermin/log_real.hpp"
#include "hypermin/regime.hpp"

namespace hypermin {

/// Magnitudes are serialized as {sign, log10}; log10 is null for exact zero.
inline nlohmann::json log_real_json(const LogReal& v) {
    nlohmann::json j;
    j["sign"] = v.sign();
    if (v.is_zero())
        j["log10"] = nullptr;
    else
        j["log10"] = v.log10();
    return j;
}

/// Analytic summary of one (n, p, m) point: scale parameters, regime, the
/// expectation sandwich with the exact value, the distinct-edge count, and
/// the location/size of the maximum over all m.
struct BoundsReport {
    DerivedParams params;
    RegimeClassification regime;
    ExpectedMinSandwich sandwich;
    LogReal exact;
    LogReal distinct_exact;
    LogReal m_star;
    LogReal max_value_estimate;
};

inline BoundsReport make_bounds_report(std::uint32_t n, double p, const LogReal& m,
                                       RegimeMargins margins = {}) {
    BoundsReport r;
    r.params = DerivedParams::from_m(n, p, m);
    r.regime = regime_classify(r.params, margins);
    r.sandwich = expected_min_sandwich(n, p, m);
    r.exact = expected_min_exact(n, p, m);
    r.distinct_exact = expected_distinct_range(n, p, m, 0, n).exact;
    const auto [m_star, value] = argmax_m(n, p);
    r.m_star = m_star;
    r.max_value_estimate = value;
    return r;
}

inline nlohmann::json to_json(const BoundsReport& r) {
    nlohmann::json j;
    j["n"] = r.params.n;
    j["p"] = r.params.p;
    j["m"] = log_real_json(r.params.m);
    j["alpha"] = r.params.alpha;
    j["i_star"] = r.params.i_star;
    j["regime"] = to_string(r.regime.regime);
    j["margins"] = {{"eps", r.regime.margins.eps}, {"epsp", r.regime.margins.epsp}};
    j["regime_magnitude"] =
        r.regime.magnitude ? log_real_json(*r.regime.magnitude) : nlohmann::json(nullptr);
    // The collapse cut is a finite-n stand-in for an asymptotic condition.
    j["collapse_rule"] = "heuristic: alpha*n >= n + 10*log2(n)";
    j["sandwich"] = {{"lower", log_real_json(r.sandwich.lower)},
                     {"upper_shifted", log_real_json(r.sandwich.upper_shifted)},
                     {"upper_scaled", log_real_json(r.sandwich.upper_scaled)}};
    j["exact"] = log_real_json(r.exact);
    j["distinct_exact"] = log_real_json(r.distinct_exact);
    j["m_star"] = log_real_json(r.m_star);
    j["max_value_estimate"] = log_real_json(r.max_value_estimate);
    return j;
}

}  // namespace hypermin
