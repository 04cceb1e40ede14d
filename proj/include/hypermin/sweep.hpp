#pragma once

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hypermin/expectation.hpp"
#include "hypermin/minimize.hpp"
#include "hypermin/regime.hpp"
#include "hypermin/report.hpp"
#include "hypermin/sampler.hpp"

namespace hypermin {

enum class GridKind { alpha, m };

/// One Monte Carlo/analytic sweep over a grid of m (log-spaced) or alpha
/// (linear). All randomness is derived per (seed, grid index, replicate
/// index), so records are identical for any thread count.
struct SweepConfig {
    std::uint32_t n = 10;
    double p = 0.5;
    GridKind grid = GridKind::alpha;
    double grid_min = 0.05;
    double grid_max = 0.99;
    std::size_t grid_points = 20;
    std::uint64_t replicates = 100;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    RegimeMargins margins;

    void validate() const {
        if (n < 1) throw std::invalid_argument("sweep: n must be >= 1");
        if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("sweep: p must lie in (0,1)");
        if (replicates < 1) throw std::invalid_argument("sweep: replicates must be >= 1");
        if (grid_points < 1) throw std::invalid_argument("sweep: grid needs at least 1 point");
        if (!(grid_min > 0.0) || !(grid_max >= grid_min))
            throw std::invalid_argument("sweep: need 0 < grid_min <= grid_max");
        if (threads < 1) throw std::invalid_argument("sweep: threads must be >= 1");
    }
};

struct SweepRecord {
    std::uint32_t n;
    double p;
    double alpha;
    LogReal m;
    std::uint64_t seed;
    std::uint64_t replicates;
    bool sampled;  // false: m infeasible for sampling, analytic columns only
    double empirical_mean;
    double empirical_stderr;
    LogReal analytic_lower;
    LogReal analytic_exact;
    LogReal analytic_upper;
    Regime regime;
    bool band_violation;
    double wall_time_ms;
};

namespace detail {

inline constexpr std::uint64_t kSweepSalt = 0x5b93f27c44e1a96dull;

inline DerivedParams grid_point(const SweepConfig& cfg, std::size_t index) {
    const double t = cfg.grid_points == 1
                         ? 0.0
                         : double(index) / double(cfg.grid_points - 1);
    if (cfg.grid == GridKind::alpha) {
        const double alpha = cfg.grid_min + t * (cfg.grid_max - cfg.grid_min);
        return DerivedParams::from_alpha(cfg.n, cfg.p, alpha);
    }
    // Log-spaced m grid.
    const double log_m = std::log(cfg.grid_min) + t * (std::log(cfg.grid_max) - std::log(cfg.grid_min));
    return DerivedParams::from_m(cfg.n, cfg.p, LogReal::from_log(std::max(log_m, 0.0)));
}

inline SweepRecord run_point(const SweepConfig& cfg, std::size_t index) {
    const auto t0 = std::chrono::steady_clock::now();
    DerivedParams d = grid_point(cfg, index);

    // Feasible points snap m to the nearest positive integer so that the
    // analytic and empirical columns describe the same model.
    const std::uint64_t words_per_edge = (cfg.n + 63) / 64;
    const double m_dbl = d.m.to_double();
    const bool feasible = std::isfinite(m_dbl) && m_dbl < 9.0e15 &&
                          std::llround(m_dbl) >= 1 &&
                          std::uint64_t(std::llround(m_dbl)) <= kMaxSampleWords / words_per_edge;
    std::uint64_t m_int = 0;
    if (feasible) {
        m_int = std::uint64_t(std::llround(m_dbl));
        d = DerivedParams::from_m(cfg.n, cfg.p, LogReal::from_double(double(m_int)));
    }

    SweepRecord rec;
    rec.n = cfg.n;
    rec.p = cfg.p;
    rec.alpha = d.alpha;
    rec.m = d.m;
    rec.seed = cfg.seed;
    rec.replicates = cfg.replicates;
    rec.sampled = feasible;
    rec.empirical_mean = 0.0;
    rec.empirical_stderr = 0.0;
    rec.band_violation = false;

    const auto sandwich = expected_min_sandwich(cfg.n, cfg.p, d.m);
    rec.analytic_lower = sandwich.lower;
    rec.analytic_upper = sandwich.upper();
    rec.analytic_exact = expected_min_exact(cfg.n, cfg.p, d.m);
    rec.regime = regime_classify(d, cfg.margins).regime;

    if (feasible) {
        const std::uint64_t point_key =
            rng::substream_key(rng::mix64(cfg.seed ^ kSweepSalt), index);
        double sum = 0.0, sumsq = 0.0;
        for (std::uint64_t r = 0; r < cfg.replicates; ++r) {
            ModelParams params{cfg.n, m_int, cfg.p, rng::substream_key(point_key, r)};
            const double v = double(minimize_sorted(sample_hypergraph(params)).size());
            sum += v;
            sumsq += v * v;
        }
        const double reps = double(cfg.replicates);
        rec.empirical_mean = sum / reps;
        if (cfg.replicates > 1) {
            const double var =
                std::max(0.0, (sumsq - sum * sum / reps) / (reps - 1.0));
            rec.empirical_stderr = std::sqrt(var / reps);
        }
        // Monte Carlo noise band: flag, never hard-fail.
        const double lo = rec.analytic_lower.to_double();
        const double hi = rec.analytic_upper.to_double();  // may round to +inf
        rec.band_violation = rec.empirical_mean < lo - 3.0 * rec.empirical_stderr ||
                             rec.empirical_mean > hi + 3.0 * rec.empirical_stderr;
    }

    rec.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return rec;
}

}  // namespace detail

inline std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<SweepRecord> records(cfg.grid_points);
    const unsigned workers =
        std::min<unsigned>(cfg.threads, static_cast<unsigned>(cfg.grid_points));
    if (workers <= 1) {
        for (std::size_t i = 0; i < cfg.grid_points; ++i)
            records[i] = detail::run_point(cfg, i);
        return records;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= cfg.grid_points) return;
                records[i] = detail::run_point(cfg, i);
            }
        });
    for (auto& t : pool) t.join();
    return records;
}

// --- output ----------------------------------------------------------------

inline nlohmann::json sweep_config_json(const SweepConfig& cfg) {
    return {{"n", cfg.n},
            {"p", cfg.p},
            {"grid", cfg.grid == GridKind::alpha ? "alpha" : "m"},
            {"grid_min", cfg.grid_min},
            {"grid_max", cfg.grid_max},
            {"grid_points", cfg.grid_points},
            {"replicates", cfg.replicates},
            {"seed", cfg.seed},
            {"threads", cfg.threads},
            {"eps", cfg.margins.eps},
            {"epsp", cfg.margins.epsp},
            {"rng", rng::kGeneratorVersion}};
}

inline nlohmann::json sweep_record_json(const SweepRecord& r) {
    return {{"n", r.n},
            {"p", r.p},
            {"alpha", r.alpha},
            {"m", log_real_json(r.m)},
            {"seed", r.seed},
            {"replicates", r.replicates},
            {"sampled", r.sampled},
            {"empirical_mean", r.empirical_mean},
            {"empirical_stderr", r.empirical_stderr},
            {"analytic_lower", log_real_json(r.analytic_lower)},
            {"analytic_exact", log_real_json(r.analytic_exact)},
            {"analytic_upper", log_real_json(r.analytic_upper)},
            {"regime", to_string(r.regime)},
            {"band_violation", r.band_violation},
            {"wall_time_ms", r.wall_time_ms}};
}

/// CSV: '#'-prefixed config echo, one header row, fixed column order
/// (documented in the README). LogReal columns are split into sign/log10.
inline void write_sweep_csv(std::ostream& out, const SweepConfig& cfg,
                            const std::vector<SweepRecord>& records) {
    const auto config = sweep_config_json(cfg);
    for (const auto& [key, value] : config.items())
        out << "# " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump())
            << '\n';
    out << "n,p,alpha,m_sign,m_log10,seed,replicates,sampled,empirical_mean,"
           "empirical_stderr,analytic_lower_sign,analytic_lower_log10,"
           "analytic_exact_sign,analytic_exact_log10,analytic_upper_sign,"
           "analytic_upper_log10,regime,band_violation,wall_time_ms\n";
    const auto field = [&out](const LogReal& v) {
        out << ',' << v.sign() << ',';
        if (v.is_zero())
            out << "";
        else
            out << v.log10();
    };
    out.precision(17);
    for (const auto& r : records) {
        out << r.n << ',' << r.p << ',' << r.alpha;
        field(r.m);
        out << ',' << r.seed << ',' << r.replicates << ',' << (r.sampled ? 1 : 0) << ','
            << r.empirical_mean << ',' << r.empirical_stderr;
        field(r.analytic_lower);
        field(r.analytic_exact);
        field(r.analytic_upper);
        out << ',' << to_string(r.regime) << ',' << (r.band_violation ? 1 : 0) << ','
            << r.wall_time_ms << '\n';
    }
}

/// JSON lines: a config object first, then one object per record.
inline void write_sweep_jsonl(std::ostream& out, const SweepConfig& cfg,
                              const std::vector<SweepRecord>& records) {
    nlohmann::json head;
    head["record"] = "config";
    head["config"] = sweep_config_json(cfg);
    out << head.dump() << '\n';
    for (const auto& r : records) {
        auto j = sweep_record_json(r);
        j["record"] = "sweep";
        out << j.dump() << '\n';
    }
}

}  // namespace hypermin
