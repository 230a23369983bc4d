// wavelab: exact exponent calculator and spectral verification lab for the
// semilinear wave equation box u = |u|^p.
//
// Exit codes: 0 success, 1 numeric verdict failure, 2 configuration or
// domain error.

#include "wavelab/picard.hpp"
#include "wavelab/radial_fd.hpp"
#include "wavelab/snapshots.hpp"
#include "wavelab/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace wavelab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitConfig = 2;

struct CommonOpts {
    int n = 8;
    std::string p_text = "9/5";
    std::uint64_t seed = 2024;
    std::string out_path;
    std::string format = "json";
    int threads = 0;  // informational; execution is deterministic regardless
};

int default_threads() {
    if (const char* env = std::getenv("WAVELAB_THREADS")) return std::atoi(env);
    return 1;
}

json config_echo(const CommonOpts& o) {
    return json{{"n", o.n},       {"p", o.p_text},   {"seed", o.seed},
                {"out", o.out_path}, {"format", o.format}, {"threads", o.threads}};
}

void emit(const CommonOpts& o, const json& payload) {
    if (o.out_path.empty() || o.out_path == "-") {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    std::ofstream out(o.out_path);
    out << payload.dump(2) << "\n";
    if (!out) throw ConfigError("cannot write " + o.out_path);
}

void emit_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    out << text;
    if (!out) throw ConfigError("cannot write " + path);
}

int cmd_exponents(const CommonOpts& o, int sweep_count) {
    Rational p = Rational::parse(o.p_text);
    json payload;
    payload["config"] = config_echo(o);
    payload["critical_powers"] = critical_powers(o.n);
    payload["range"] = admissible_range(o.n);

    if (sweep_count > 0) {
        emit_text(o.out_path.empty() ? "-" : o.out_path, exponent_sweep_csv(o.n, sweep_count));
        return kExitOk;
    }

    auto profile = exponent_profile(o.n, p);
    auto verdicts = verify_lemma_chain(o.n, p);
    payload["profile"] = profile;
    payload["verdicts"] = verdicts;
    payload["all_hold"] = all_hold(verdicts);
    payload["smoothness_index"] = smoothness_index(o.n, p);
    emit(o, payload);
    return all_hold(verdicts) ? kExitOk : kExitVerdictFail;
}

int cmd_range(const CommonOpts& o) {
    json payload;
    payload["config"] = config_echo(o);
    payload["range"] = admissible_range(o.n);
    emit(o, payload);
    return kExitOk;
}

int cmd_verify(const CommonOpts& o, const std::string& suite) {
    Rational p = Rational::parse(o.p_text);
    SuiteResult result = run_suite(suite, o.n, p, o.seed);
    json payload;
    payload["config"] = config_echo(o);
    payload["result"] = result.report;
    emit(o, payload);
    return result.pass ? kExitOk : kExitVerdictFail;
}

int cmd_simulate(const CommonOpts& o, const std::string& eps_text, double horizon, int steps,
                 int m_points, double r_max, const std::string& snapshot_dir,
                 const std::string& backend, const std::string& trace_path) {
    Rational p = Rational::parse(o.p_text);

    // The finite-difference backend integrates the equation directly: no
    // Strichartz bookkeeping, so any p > 1 is a valid target (the dichotomy
    // scans live below p_H1).
    if (backend == "radial-fd") {
        if (eps_text == "auto") throw ConfigError("the radial-fd backend needs an explicit --eps");
        double eps = std::stod(eps_text);
        RadialFdConfig cfg;
        cfg.n_dim = o.n;
        cfg.p = p.to_double();
        cfg.r_max = r_max + horizon + 4.0;
        cfg.m_points = static_cast<int>(cfg.r_max * 24);
        double dr = cfg.r_max / cfg.m_points;
        cfg.dt = std::min(0.5, 0.9 / std::sqrt(static_cast<double>(o.n))) * dr;
        cfg.t_max = horizon;
        auto f = [&](double r) { return eps * std::exp(-r * r / (2 * 0.7 * 0.7)); };
        auto g = [&](double r) {
            double a = r * r - 1.0;
            return eps * std::exp(-a * a);
        };
        auto run = radial_reference_solve(f, g, cfg, {horizon / 2, horizon});
        json payload;
        payload["config"] = config_echo(o);
        payload["config"]["backend"] = backend;
        payload["config"]["eps"] = eps;
        payload["blew_up"] = run.blew_up;
        payload["lifespan"] = run.lifespan;
        emit(o, payload);
        return run.blew_up ? kExitVerdictFail : kExitOk;
    }
    if (backend != "spectral") throw ConfigError("unknown backend: " + backend);

    auto profile = exponent_profile(o.n, p);
    auto geo = make_radial_geometry(o.n, m_points, r_max, r_max);
    TimeGrid grid = TimeGrid::over(horizon, steps);

    auto constants = measure_constants(profile, geo, TimeGrid::over(horizon, std::min(steps, 64)),
                                       24, o.seed);
    auto th = thresholds(constants.C, constants.C1, profile.p.to_double());
    double eps = eps_text == "auto" ? 0.5 * std::min(th.eps0, th.eps1) : std::stod(eps_text);

    CauchyData<RadialField> data{radial_gaussian(geo, 0.7), radial_annular(geo, 1.0, 1.0), eps};
    PicardOptions opts;
    opts.exploratory = eps > std::min(th.eps0, th.eps1);
    auto [u, report] = picard_iterate(data, NonlinearitySpec::power(profile.p.to_double()), profile,
                                      grid, constants, opts);

    json payload;
    payload["config"] = config_echo(o);
    payload["config"]["eps"] = eps;
    payload["config"]["horizon"] = horizon;
    payload["config"]["steps"] = steps;
    payload["constants"] = constants;
    payload["iteration"] = report;
    emit(o, payload);
    if (!snapshot_dir.empty()) write_spacetime_snapshot(snapshot_dir, u, "picard_limit");
    if (!trace_path.empty()) emit_text(trace_path, xt_trace_csv(u, profile));
    return report.verdict == IterationVerdict::converged ? kExitOk : kExitVerdictFail;
}

int cmd_scan(const CommonOpts& o, double p_min, double p_max, int steps, double eps_min,
             double eps_max, int eps_steps, double t_max) {
    if (steps < 1 || eps_steps < 1) throw ConfigError("scan needs at least one grid point per axis");
    std::vector<double> ps, epss;
    for (int i = 0; i < steps; ++i)
        ps.push_back(steps == 1 ? p_min : p_min + (p_max - p_min) * i / (steps - 1));
    for (int i = 0; i < eps_steps; ++i)
        epss.push_back(eps_steps == 1 ? eps_min
                                      : eps_min * std::pow(eps_max / eps_min, i / double(eps_steps - 1)));

    RadialFdConfig cfg;
    cfg.n_dim = o.n;
    cfg.t_max = t_max;
    cfg.r_max = t_max + 6.0;
    cfg.m_points = static_cast<int>(cfg.r_max * 20);
    cfg.dt = std::min(0.5, 0.9 / std::sqrt(static_cast<double>(o.n))) * (cfg.r_max / cfg.m_points);

    auto bump = [](double r) { return std::exp(-r * r); };
    auto table = blowup_scan(bump, bump, ps, epss, cfg);
    emit_text(o.out_path.empty() ? "-" : o.out_path, scan_table_csv(table));
    if (!o.out_path.empty() && o.out_path != "-")
        emit_text(o.out_path + ".dat", scan_table_dat(table));
    return kExitOk;
}

int cmd_besov_norm(const CommonOpts& o, const std::string& input, double s, double p_int) {
    json payload;
    payload["config"] = config_echo(o);
    payload["config"]["input"] = input;
    payload["config"]["s"] = s;
    payload["config"]["p_int"] = p_int;
    NormSpec spec{p_int, s};
    if (snapshot_kind(input) == "grid") {
        auto field = read_grid_snapshot(input);
        auto res = besov_norm(field, spec);
        payload["norm"] = res.value;
        payload["leakage"] = res.leakage;
        payload["regime_warning"] = res.regime_warning;
    } else {
        auto field = read_radial_snapshot(input);
        auto res = besov_norm(field, spec);
        payload["norm"] = res.value;
        payload["leakage"] = res.leakage;
        payload["regime_warning"] = res.regime_warning;
    }
    emit(o, payload);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Strichartz exponent calculator and spectral wave lab"};
    app.require_subcommand(1);

    CommonOpts o;
    o.threads = default_threads();
    app.add_option("--threads", o.threads, "worker threads (output is independent of this)");

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", o.n, "spatial dimension");
        cmd->add_option("--p", o.p_text, "power p as a rational 'a/b' or decimal");
        cmd->add_option("--seed", o.seed, "random seed");
        cmd->add_option("--out", o.out_path, "output path ('-' for stdout)");
        cmd->add_option("--format", o.format, "json or csv");
    };

    auto* exponents = app.add_subcommand("exponents", "exact exponent profile and verdicts");
    int sweep_count = 0;
    add_common(exponents);
    exponents->add_option("--sweep", sweep_count, "emit a CSV sweep over this many grid points");

    auto* range = app.add_subcommand("range", "admissible power range for a dimension");
    add_common(range);

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    add_common(verify);
    verify->add_option("--suite", suite, "besov | strichartz | chainrule | propagator")->required();

    auto* simulate = app.add_subcommand("simulate", "Picard iteration on the radial backend");
    std::string eps_text = "auto";
    double horizon = 4.0;
    int steps = 256, m_points = 256;
    double r_max = 16.0;
    std::string snapshot_dir, backend = "spectral", trace_path;
    add_common(simulate);
    simulate->add_option("--eps", eps_text, "amplitude, or 'auto' for min(eps0, eps1)/2");
    simulate->add_option("--T", horizon, "time horizon");
    simulate->add_option("--steps", steps, "time steps");
    simulate->add_option("--N", m_points, "radial grid points");
    simulate->add_option("--L", r_max, "radial extent");
    simulate->add_option("--snapshots", snapshot_dir, "directory for the limit snapshot");
    simulate->add_option("--backend", backend, "spectral | radial-fd");
    simulate->add_option("--trace", trace_path, "CSV trace of the running iteration norm");

    auto* scan = app.add_subcommand("scan", "blow-up lifespan table over (p, eps)");
    double p_min = 1.2, p_max = 3.0, eps_min = 1.0, eps_max = 8.0, t_max = 20.0;
    int p_steps = 10, eps_steps = 4;
    add_common(scan);
    scan->add_option("--p-min", p_min);
    scan->add_option("--p-max", p_max);
    scan->add_option("--steps", p_steps);
    scan->add_option("--eps-min", eps_min);
    scan->add_option("--eps-max", eps_max);
    scan->add_option("--eps-steps", eps_steps);
    scan->add_option("--tmax", t_max);

    auto* besov = app.add_subcommand("besov-norm", "Besov norm of a stored field snapshot");
    std::string input;
    double s = 0.0, p_int = 2.0;
    add_common(besov);
    besov->add_option("--input", input, "field snapshot path")->required();
    besov->add_option("--s", s, "smoothness index");
    besov->add_option("--p-int", p_int, "Lebesgue index");

    CLI11_PARSE(app, argc, argv);

    try {
        if (exponents->parsed()) return cmd_exponents(o, sweep_count);
        if (range->parsed()) return cmd_range(o);
        if (verify->parsed()) return cmd_verify(o, suite);
        if (simulate->parsed())
            return cmd_simulate(o, eps_text, horizon, steps, m_points, r_max, snapshot_dir, backend,
                                trace_path);
        if (scan->parsed())
            return cmd_scan(o, p_min, p_max, p_steps, eps_min, eps_max, eps_steps, t_max);
        if (besov->parsed()) return cmd_besov_norm(o, input, s, p_int);
    } catch (const SmoothnessGapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
