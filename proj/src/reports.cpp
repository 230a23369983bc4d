#include "wavelab/reports.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace wavelab {

void to_json(json& j, const RatioReport& r) {
    j = json{{"estimate_id", r.estimate_id},
             {"family", r.family},
             {"seed", r.seed},
             {"requested", r.requested},
             {"used", r.used},
             {"skipped", r.skipped},
             {"max_ratio", r.max_ratio},
             {"mean_ratio", r.mean_ratio},
             {"median_ratio", r.median_ratio},
             {"slope", r.slope},
             {"counterexample_hunt", r.counterexample_hunt},
             {"verdict", r.verdict},
             {"scale_ratios", r.scale_ratios},
             {"untagged_ratios", r.untagged_ratios}};
}

void to_json(json& j, const MeasuredConstants& c) {
    j = json{{"C", c.C},
             {"C1", c.C1},
             {"strichartz_lebesgue", c.strichartz_lebesgue},
             {"lipschitz", c.lipschitz},
             {"embedding", c.embedding},
             {"seed", c.seed},
             {"draws", c.draws}};
}

void to_json(json& j, const IterationReport& r) {
    j = json{{"xt_norms", r.xt_norms},
             {"cone_differences", r.cone_differences},
             {"contraction_ratios", r.contraction_ratios},
             {"phi_bound_violations", r.phi_bound_violations},
             {"eps", r.eps},
             {"eps0", r.eps0},
             {"eps1", r.eps1},
             {"data_norm_scale", r.data_norm_scale},
             {"weak_residual", r.weak_residual},
             {"guaranteed_regime", r.guaranteed_regime},
             {"verdict", to_string(r.verdict)},
             {"iterations", r.iterations}};
}

void to_json(json& j, const NonlinearityCheck& c) {
    j = json{{"pass", c.pass},
             {"reason", c.reason},
             {"worst_hoelder_ratio", c.worst_hoelder_ratio},
             {"worst_derivative_at_zero", c.worst_derivative_at_zero},
             {"high_power_branch", c.high_power_branch}};
}

void to_json(json& j, const LocalizationReport& r) {
    j = json{{"margins", r.margins},
             {"cone_differences", r.cone_differences},
             {"forcing_scale", r.forcing_scale},
             {"pass", r.pass}};
}

void to_json(json& j, const UniquenessReport& r) {
    j = json{{"residual_1", r.residual_1},
             {"residual_2", r.residual_2},
             {"cone_radii", r.cone_radii},
             {"differences", r.differences},
             {"contraction_factor", r.contraction_factor},
             {"inputs_accepted", r.inputs_accepted},
             {"identical", r.identical}};
}

void write_fixture(const std::filesystem::path& path, const FixtureRecord& record) {
    json j;
    j["schema_version"] = kFixtureSchemaVersion;
    j["constants"] = record.constants;
    j["n"] = record.n;
    j["p"] = record.p;
    j["grid"] = json{{"m_points", record.m_points},
                     {"r_max", record.r_max},
                     {"p_max", record.p_max},
                     {"horizon", record.horizon},
                     {"time_steps", record.time_steps}};
    std::ofstream out(path);
    out << j.dump(2) << "\n";
    if (!out) throw ConfigError("fixture write failed: " + path.string());
}

FixtureRecord read_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open fixture: " + path.string());
    json j;
    in >> j;
    if (j.at("schema_version").get<int>() != kFixtureSchemaVersion)
        throw ConfigError("fixture schema version mismatch");
    FixtureRecord rec;
    const auto& c = j.at("constants");
    rec.constants.C = c.at("C").get<double>();
    rec.constants.C1 = c.at("C1").get<double>();
    rec.constants.strichartz_lebesgue = c.at("strichartz_lebesgue").get<double>();
    rec.constants.lipschitz = c.at("lipschitz").get<double>();
    rec.constants.embedding = c.at("embedding").get<double>();
    rec.constants.seed = c.at("seed").get<std::uint64_t>();
    rec.constants.draws = c.at("draws").get<int>();
    rec.n = j.at("n").get<int>();
    rec.p = Rational(j.at("p").at("num").get<long long>(), j.at("p").at("den").get<long long>());
    const auto& g = j.at("grid");
    rec.m_points = g.at("m_points").get<int>();
    rec.r_max = g.at("r_max").get<double>();
    rec.p_max = g.at("p_max").get<double>();
    rec.horizon = g.at("horizon").get<double>();
    rec.time_steps = g.at("time_steps").get<int>();
    return rec;
}

namespace {

// shortest representation that round-trips
std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string scan_table_csv(const ScanTable& table) {
    std::ostringstream os;
    os << "n,p,epsilon,lifespan,verdict\n";
    for (const auto& row : table.rows)
        os << table.n_dim << "," << format_double(row.p) << "," << format_double(row.eps) << ","
           << format_double(row.lifespan) << "," << (row.global ? "global" : "blowup") << "\n";
    return os.str();
}

std::string scan_table_dat(const ScanTable& table) {
    std::ostringstream os;
    os << "# n = " << table.n_dim << ", t_max = " << format_double(table.t_max) << "\n";
    os << "# p epsilon lifespan global\n";
    double current_p = std::numeric_limits<double>::quiet_NaN();
    for (const auto& row : table.rows) {
        if (row.p != current_p) {
            if (!std::isnan(current_p)) os << "\n";
            current_p = row.p;
        }
        os << format_double(row.p) << " " << format_double(row.eps) << " "
           << format_double(row.lifespan) << " " << (row.global ? 1 : 0) << "\n";
    }
    return os.str();
}

std::string exponent_sweep_csv(int n, int count, int denom) {
    std::ostringstream os;
    os << "n,p_num,p_den,case,s_c,s_0,gap_margin,all_verdicts_hold\n";
    Rational p_h1 = Rational(1) + Rational(4, n - 2);
    for (int i = 1; i <= count; ++i) {
        Rational p = p_h1 + Rational(i, denom);
        ExponentProfile pr;
        bool in_range = true;
        try {
            pr = exponent_profile(n, p);
        } catch (const SmoothnessGapError&) {
            in_range = false;
        }
        os << n << "," << detail::i128_to_string(p.num()) << "," << detail::i128_to_string(p.den())
           << ",";
        if (!in_range) {
            os << "gap,,,,\n";
            continue;
        }
        bool ok = all_hold(verify_lemma_chain(n, p));
        os << to_string(pr.kind) << "," << pr.s_c.str() << "," << pr.s0.str() << ","
           << (p - pr.gap()).str() << "," << (ok ? "1" : "0") << "\n";
    }
    return os.str();
}

std::string xt_trace_csv(const SpaceTimeField<RadialField>& u, const ExponentProfile& pr) {
    std::ostringstream os;
    os << "t,norm_b0r,norm_gap_r0,running_xt\n";
    const double q = 1.0 / pr.inv_q.to_double();
    const double q0 = 1.0 / pr.inv_q0.to_double();
    const NormSpec specs[2] = {NormSpec{1.0 / pr.inv_r.to_double(), 0.0},
                               NormSpec{1.0 / pr.inv_r0.to_double(), pr.gap().to_double()}};
    double acc0 = 0.0, acc1 = 0.0;
    for (int m = 0; m < u.nodes(); ++m) {
        auto res = besov_multi(u.node(m), specs);
        double w = u.grid().weight(m);
        acc0 += w * std::pow(res[0].value, q);
        acc1 += w * std::pow(res[1].value, q0);
        double running = std::max(std::pow(acc0, 1.0 / q), std::pow(acc1, 1.0 / q0));
        os << format_double(u.grid().time(m)) << "," << format_double(res[0].value) << ","
           << format_double(res[1].value) << "," << format_double(running) << "\n";
    }
    return os.str();
}

}  // namespace wavelab
