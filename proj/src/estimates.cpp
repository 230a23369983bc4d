#include "wavelab/estimates.hpp"

#include <cmath>
#include <random>

namespace wavelab {

void finalize_report(RatioReport& report) {
    report.used = static_cast<int>(report.scale_ratios.size() + report.untagged_ratios.size());
    if (report.used == 0) {
        report.verdict = report.counterexample_hunt ? "hunt" : "suspect";
        return;
    }
    // summary statistics over every draw; the slope only over the dilating
    // family, whose members are exact rescalings of each other
    std::vector<double> values;
    values.reserve(report.used);
    double mean = 0.0;
    for (const auto& [j, v] : report.scale_ratios) {
        values.push_back(v);
        mean += v;
        report.max_ratio = std::max(report.max_ratio, v);
    }
    for (double v : report.untagged_ratios) {
        values.push_back(v);
        mean += v;
        report.max_ratio = std::max(report.max_ratio, v);
    }
    report.mean_ratio = mean / report.used;
    std::sort(values.begin(), values.end());
    report.median_ratio = values[values.size() / 2];

    // least squares slope of log2(ratio) against j, 0 when degenerate
    double sj = 0, sy = 0, sjj = 0, sjy = 0;
    int cnt = 0;
    for (const auto& [j, v] : report.scale_ratios) {
        if (v <= 0.0) continue;
        double y = std::log2(v);
        sj += j;
        sy += y;
        sjj += j * j;
        sjy += j * y;
        ++cnt;
    }
    double det = cnt * sjj - sj * sj;
    report.slope = (cnt >= 2 && std::abs(det) > 1e-12) ? (cnt * sjy - sj * sy) / det : 0.0;

    bool bounded = std::abs(report.slope) <= 0.05 && report.max_ratio <= 10.0 * report.median_ratio;
    report.verdict = report.counterexample_hunt ? "hunt" : (bounded ? "bounded" : "suspect");
}

namespace detail {

std::vector<double> forcing_envelope(const TimeGrid& grid, std::uint64_t seed, std::uint64_t draw,
                                     double rate) {
    std::mt19937_64 rng(derive_seed(seed ^ 0x666f7263696e67ULL, draw));
    const double T = grid.horizon();
    // widths stay resolvable after dyadic time dilation of the draw
    std::uniform_real_distribution<double> center(0.3 * T, 0.6 * T), width(T / 6, T / 3),
        freq(0.0, 3.0), phase(0.0, 2.0 * kPi);
    double t0 = center(rng), st = width(rng), om = freq(rng), ph = phase(rng);
    std::vector<double> env(grid.nodes());
    for (int m = 0; m < grid.nodes(); ++m) {
        double t = rate * grid.time(m);
        env[m] = std::exp(-(t - t0) * (t - t0) / (2 * st * st)) * std::cos(om * t + ph);
    }
    return env;
}

void require_profile_gate(const ExponentProfile& pr) {
    if (pr.kind == ProfileCase::C1) {
        const Rational half(1, 2);
        if (!is_sigma_acceptable(half, *pr.inv_r_alpha, pr.sigma))
            throw ConfigError("exact gate failed: (2, r_alpha) is not sigma-acceptable");
        if (!is_sigma_acceptable(*pr.inv_qt, *pr.inv_r_beta, pr.sigma))
            throw ConfigError("exact gate failed: (q~, r~_beta) is not sigma-acceptable");
        auto verdicts = check_foschi(half, *pr.inv_r_alpha, *pr.inv_qt, *pr.inv_r_beta, pr.sigma);
        for (const auto& v : verdicts)
            if (!v.holds) throw ConfigError("exact gate failed: " + v.id);
    } else {
        if (!is_sigma_admissible(pr.inv_q, pr.inv_r, pr.sigma))
            throw ConfigError("exact gate failed: (q, r) is not sigma-admissible");
        if (!is_sigma_admissible(pr.inv_q0, pr.inv_r0, pr.sigma))
            throw ConfigError("exact gate failed: (q0, r0) is not sigma-admissible");
        if (!is_sigma_admissible(Rational(0), Rational(1, 2), pr.sigma))
            throw ConfigError("exact gate failed: energy pair is not sigma-admissible");
    }
}

void require_inhomogeneous_bookkeeping(const ExponentProfile& pr) {
    const Rational n(pr.n), two(2);
    Rational gap = pr.gap();
    // route through B^0_r
    Rational s_a = pr.inv_q1 + n * pr.inv_r1 - pr.inv_q - n * pr.inv_r - two;
    // route through B^{s_c-s0}_{r0}
    Rational s_b = gap + pr.inv_q1 + n * pr.inv_r1 - pr.inv_q0 - n * pr.inv_r0 - two;
    if (s_a != gap || s_b != gap)
        throw ConfigError("smoothness bookkeeping violated: dual norms do not resolve to s_c - s0");
}

}  // namespace detail

MeasuredConstants measure_constants(const ExponentProfile& pr, const RadialGeometryPtr& geo,
                                    const TimeGrid& grid, int draws, std::uint64_t seed) {
    MeasuredConstants out;
    out.seed = seed;
    out.draws = draws;

    auto key = key_linear_estimate_sample<RadialField>(pr, geo, draws, seed, grid);
    out.C = key.max_ratio;

    auto leb = inhomogeneous_strichartz_sample<RadialField>(pr, geo, draws, seed + 1, grid, true);
    out.strichartz_lebesgue = leb.max_ratio;

    // pointwise factor in | |a|^p - |b|^p | <= c (|a|^{p-1} + |b|^{p-1}) |a - b|
    {
        std::mt19937_64 rng(detail::derive_seed(seed, 0x6c6970ULL));
        std::uniform_real_distribution<double> mag(-3.0, 3.0);
        const double p = pr.p.to_double();
        double worst = 0.0;
        for (int i = 0; i < 20000; ++i) {
            Complex a(mag(rng), mag(rng)), b(mag(rng), mag(rng));
            double den = (std::pow(std::abs(a), p - 1) + std::pow(std::abs(b), p - 1)) * std::abs(a - b);
            if (den < 1e-12) continue;
            double num = std::abs(std::pow(std::abs(a), p) - std::pow(std::abs(b), p));
            worst = std::max(worst, num / den);
        }
        out.lipschitz = worst;
    }

    // B^0_{r0} -> L^{r0} embedding constant over the corpus
    {
        auto corpus = make_radial_corpus(geo, seed + 2);
        const double r0 = 1.0 / pr.inv_r0.to_double();
        double worst = 0.0;
        for (const auto& u : corpus) {
            double b = besov_norm(u, NormSpec{r0, 0.0}).value;
            if (b > 0.0) worst = std::max(worst, lp_norm(u, r0) / b);
        }
        out.embedding = worst;
    }

    out.C1 = std::max({out.strichartz_lebesgue, out.lipschitz, out.embedding, 1.0});
    return out;
}

}  // namespace wavelab
