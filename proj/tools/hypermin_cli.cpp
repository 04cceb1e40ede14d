// Command-line front end: sampling, minimization, bound reports, Monte Carlo
// sweeps, and the verification suite.
//
// Exit codes: 0 success, 2 usage error, 3 verification failure, 4 resource cap.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "hypermin/minimize.hpp"
#include "hypermin/report.hpp"
#include "hypermin/sampler.hpp"
#include "hypermin/sweep.hpp"
#include "hypermin/verify.hpp"

namespace {

using namespace hypermin;

constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitResourceCap = 4;

// Writes to the file when a path is given, to stdout otherwise.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int cmd_sample(const ModelParams& params, const std::string& out_path) {
    const auto h = sample_hypergraph(params);
    OutputTarget out(out_path);
    h.write(out.stream());
    return 0;
}

int cmd_minimize(const std::string& in_path, const std::string& algo,
                 const std::string& out_path) {
    std::ifstream in(in_path);
    if (!in) throw std::invalid_argument("cannot open input file '" + in_path + "'");
    const auto h = MultiHypergraph::read(in);

    const auto t0 = std::chrono::steady_clock::now();
    Antichain result(h.universe_size());
    if (algo == "naive")
        result = minimize_naive(h);
    else if (algo == "sorted")
        result = minimize_sorted(h);
    else if (algo == "stream")
        result = minimize_stream(h);
    else
        throw std::invalid_argument("unknown algorithm '" + algo + "'");
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();

    OutputTarget out(out_path);
    out.stream() << "n " << h.universe_size() << '\n';
    for (const auto& e : result.members()) out.stream() << e.to_text() << '\n';
    std::cerr << "m=" << h.size() << " distinct=" << h.count_distinct()
              << " min=" << result.size() << " wall_ms=" << ms << '\n';
    return 0;
}

int cmd_bounds(std::uint32_t n, double p, double m_flag, double alpha, bool has_m,
               RegimeMargins margins, const std::string& out_path) {
    LogReal m;
    if (has_m) {
        if (!(m_flag >= 1.0)) throw std::invalid_argument("bounds: m must be >= 1");
        m = LogReal::from_double(m_flag);
    } else {
        m = DerivedParams::from_alpha(n, p, alpha).m;
    }
    const auto report = make_bounds_report(n, p, m, margins);
    OutputTarget out(out_path);
    out.stream() << to_json(report).dump(2) << '\n';
    return 0;
}

int cmd_sweep(const SweepConfig& cfg, const std::string& format, const std::string& out_path) {
    const auto records = run_sweep(cfg);
    OutputTarget out(out_path);
    if (format == "csv")
        write_sweep_csv(out.stream(), cfg, records);
    else if (format == "jsonl")
        write_sweep_jsonl(out.stream(), cfg, records);
    else
        throw std::invalid_argument("unknown format '" + format + "' (use csv or jsonl)");
    return 0;
}

// key=value config support for sweep: lower precedence than flags, higher
// than defaults. '#' starts a comment, blank lines are skipped.
using ConfigSetter = std::function<void(const std::string&)>;

void apply_config_file(const std::string& path,
                       const std::map<std::string, ConfigSetter>& setters) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::string line;
    std::size_t lineno = 0;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        it->second(value);
    }
}

template <typename T>
ConfigSetter config_value(CLI::Option* flag, T* target) {
    return [flag, target](const std::string& v) {
        if (flag->count() > 0) return;  // explicit flag wins
        std::istringstream ss(v);
        ss >> *target;
        if (ss.fail() || !(ss >> std::ws).eof())
            throw std::invalid_argument("config value '" + v + "' for --" +
                                        flag->get_single_name() + " is malformed");
    };
}

int cmd_verify() {
    const auto results = verify::run_all();
    std::size_t checks = 0, violations = 0;
    for (const auto& r : results) {
        checks += r.checks;
        violations += r.violations;
        std::cout << (r.ok() ? "[ OK ] " : "[FAIL] ") << r.family << ": " << r.checks
                  << " checks";
        if (!r.ok()) std::cout << ", " << r.violations << " violations";
        std::cout << '\n';
        for (const auto& s : r.samples) std::cout << "       offending: " << s << '\n';
    }
    std::cout << "verify: " << results.size() << " families, " << checks << " checks, "
              << violations << " violations\n";
    return violations == 0 ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimization of maximum-entropy random multi-hypergraphs: "
                 "sampling, minimization, analytic bounds, sweeps, verification"};
    app.require_subcommand(1);
    std::function<int()> action;

    // sample
    {
        auto* cmd = app.add_subcommand("sample", "draw a random hypergraph and write it");
        auto params = std::make_shared<ModelParams>();
        auto out_path = std::make_shared<std::string>();
        cmd->add_option("--n", params->n, "universe size")->required();
        cmd->add_option("--m", params->m, "number of edges")->required();
        cmd->add_option("--p", params->p, "vertex probability")->required();
        cmd->add_option("--seed", params->seed, "rng seed")->default_val(0);
        cmd->add_option("--out", *out_path, "output file (default stdout)");
        cmd->callback([=, &action] { action = [=] { return cmd_sample(*params, *out_path); }; });
    }

    // minimize
    {
        auto* cmd = app.add_subcommand("minimize", "compute the inclusion-minimal edges");
        auto in_path = std::make_shared<std::string>();
        auto algo = std::make_shared<std::string>("sorted");
        auto out_path = std::make_shared<std::string>();
        cmd->add_option("--in", *in_path, "input hypergraph file")->required();
        cmd->add_option("--algo", *algo, "naive|sorted|stream")
            ->check(CLI::IsMember({"naive", "sorted", "stream"}));
        cmd->add_option("--out", *out_path, "output file (default stdout)");
        cmd->callback([=, &action] { action = [=] { return cmd_minimize(*in_path, *algo, *out_path); }; });
    }

    // bounds
    {
        auto* cmd = app.add_subcommand("bounds", "analytic report for one (n, p, m) point");
        auto n = std::make_shared<std::uint32_t>(0);
        auto p = std::make_shared<double>(0.5);
        auto m = std::make_shared<double>(1.0);
        auto alpha = std::make_shared<double>(0.0);
        auto margins = std::make_shared<RegimeMargins>();
        auto out_path = std::make_shared<std::string>();
        cmd->add_option("--n", *n, "universe size")->required();
        cmd->add_option("--p", *p, "vertex probability")->required();
        auto* m_opt = cmd->add_option("--m", *m, "number of edges");
        auto* a_opt = cmd->add_option("--alpha", *alpha, "alpha = -(log_{1-p} m)/n");
        m_opt->excludes(a_opt);
        cmd->add_option("--eps", margins->eps, "margin at alpha = 1-p");
        cmd->add_option("--epsp", margins->epsp, "margin at alpha = 1");
        cmd->add_flag("--json", "emit JSON (always on; accepted for compatibility)");
        cmd->add_option("--out", *out_path, "output file (default stdout)");
        cmd->callback([=, &action] {
            const bool has_m = m_opt->count() > 0;
            if (!has_m && a_opt->count() == 0)
                throw CLI::ValidationError("bounds", "one of --m or --alpha is required");
            action = [=] { return cmd_bounds(*n, *p, *m, *alpha, has_m, *margins, *out_path); };
        });
    }

    // sweep
    {
        auto* cmd = app.add_subcommand("sweep", "analytic + Monte Carlo sweep over m or alpha");
        auto cfg = std::make_shared<SweepConfig>();
        auto grid = std::make_shared<std::string>("alpha");
        auto format = std::make_shared<std::string>("csv");
        auto out_path = std::make_shared<std::string>();
        auto config_path = std::make_shared<std::string>();
        cmd->add_option("--config", *config_path,
                        "key=value config file (flags take precedence)");
        auto* o_n = cmd->add_option("--n", cfg->n, "universe size");
        auto* o_p = cmd->add_option("--p", cfg->p, "vertex probability");
        auto* o_grid =
            cmd->add_option("--grid", *grid, "grid variable: alpha (linear) or m (log-spaced)")
                ->check(CLI::IsMember({"alpha", "m"}));
        auto* o_gmin = cmd->add_option("--grid-min", cfg->grid_min, "grid start");
        auto* o_gmax = cmd->add_option("--grid-max", cfg->grid_max, "grid end");
        auto* o_gpts = cmd->add_option("--grid-points", cfg->grid_points, "number of grid points");
        auto* o_reps = cmd->add_option("--replicates", cfg->replicates,
                                       "Monte Carlo replicates per point");
        auto* o_seed = cmd->add_option("--seed", cfg->seed, "rng seed");
        auto* o_thr = cmd->add_option("--threads", cfg->threads, "worker threads");
        auto* o_eps = cmd->add_option("--eps", cfg->margins.eps, "margin at alpha = 1-p");
        auto* o_epsp = cmd->add_option("--epsp", cfg->margins.epsp, "margin at alpha = 1");
        auto* o_fmt = cmd->add_option("--format", *format, "csv|jsonl")
                          ->check(CLI::IsMember({"csv", "jsonl"}));
        auto* o_out = cmd->add_option("--out", *out_path, "output file (default stdout)");
        cmd->callback([=, &action] {
            action = [=] {
                if (!config_path->empty())
                    apply_config_file(*config_path,
                                      {{"n", config_value(o_n, &cfg->n)},
                                       {"p", config_value(o_p, &cfg->p)},
                                       {"grid", config_value(o_grid, grid.get())},
                                       {"grid-min", config_value(o_gmin, &cfg->grid_min)},
                                       {"grid-max", config_value(o_gmax, &cfg->grid_max)},
                                       {"grid-points", config_value(o_gpts, &cfg->grid_points)},
                                       {"replicates", config_value(o_reps, &cfg->replicates)},
                                       {"seed", config_value(o_seed, &cfg->seed)},
                                       {"threads", config_value(o_thr, &cfg->threads)},
                                       {"eps", config_value(o_eps, &cfg->margins.eps)},
                                       {"epsp", config_value(o_epsp, &cfg->margins.epsp)},
                                       {"format", config_value(o_fmt, format.get())},
                                       {"out", config_value(o_out, out_path.get())}});
                if (*grid != "alpha" && *grid != "m")
                    throw std::invalid_argument("grid must be alpha or m");
                cfg->grid = *grid == "alpha" ? GridKind::alpha : GridKind::m;
                return cmd_sweep(*cfg, *format, *out_path);
            };
        });
    }

    // verify
    {
        auto* cmd = app.add_subcommand("verify", "run all oracle cross-checks");
        cmd->callback([&action] { action = [] { return cmd_verify(); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        return action();
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
