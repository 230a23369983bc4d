#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wavelab/reports.hpp"

using namespace wavelab;

namespace {
const RadialGeometryPtr rgeo = make_radial_geometry(8, 192, 16.0, 16.0);
const ExponentProfile pr = exponent_profile(8, Rational(9, 5));
const TimeGrid grid = TimeGrid::over(2.0, 64);
}  // namespace

TEST_CASE("identical seeds give bit-identical reports") {
    auto a = homogeneous_strichartz_sample<RadialField>(rgeo, pr.inv_q, pr.inv_r, 0.0, 16, 99, grid);
    auto b = homogeneous_strichartz_sample<RadialField>(rgeo, pr.inv_q, pr.inv_r, 0.0, 16, 99, grid);
    CHECK(json(a).dump() == json(b).dump());
    auto c = homogeneous_strichartz_sample<RadialField>(rgeo, pr.inv_q, pr.inv_r, 0.0, 16, 100, grid);
    CHECK(json(a).dump() != json(c).dump());
}

TEST_CASE("non-admissible pairs run in counterexample-hunt mode") {
    // (q, r) = (2, 4) with sigma = (n-1)/2 ... pick an exponent pair failing
    // 1/q <= sigma(1/2 - 1/r) on a d = 2 grid, where sigma = 1/2
    auto geo2 = make_grid_geometry(2, 64, 8.0);
    Rational half(1, 2), quarter(1, 4);
    CHECK_FALSE(is_sigma_admissible(half, quarter, half));
    auto rep = homogeneous_strichartz_sample<GridField>(geo2, half, quarter, 0.0, 8, 5, grid);
    CHECK(rep.counterexample_hunt);
    CHECK(rep.verdict == "hunt");
}

TEST_CASE("bookkeeping identities gate the inhomogeneous sampler exactly") {
    // both dual routes resolve to s_c - s0 = 8/15 at n = 8, p = 9/5
    Rational gap = pr.gap();
    CHECK(gap == Rational(8, 15));
    Rational n(8), two(2);
    CHECK(pr.inv_q1 + n * pr.inv_r1 - pr.inv_q - n * pr.inv_r - two == gap);
    CHECK(gap + pr.inv_q1 + n * pr.inv_r1 - pr.inv_q0 - n * pr.inv_r0 - two == gap);

    // a corrupted profile fails before any numerics
    ExponentProfile bad = pr;
    bad.inv_r1 = Rational(1, 2);
    CHECK_THROWS_AS((inhomogeneous_strichartz_sample<RadialField>(bad, rgeo, 4, 1, grid)),
                    ConfigError);
}

TEST_CASE("dimension mismatch is rejected") {
    auto geo4 = make_radial_geometry(4, 64, 16.0, 16.0);
    CHECK_THROWS_AS((key_linear_estimate_sample<RadialField>(pr, geo4, 4, 1, grid)), ConfigError);
}

TEST_CASE("key linear with data only is consistent with the homogeneous route") {
    // one data-only draw: ratio must equal the sum of the two homogeneous
    // ratios computed on the identical fields
    auto key = key_linear_estimate_sample<RadialField>(pr, rgeo, 1, 77, grid);
    REQUIRE(key.used == 1);
    double key_ratio = key.scale_ratios[0][1];

    auto [j_lo, j_hi] = detail::scale_window(*rgeo);
    auto plan = detail::draw_plan(j_lo, j_hi, 3, 0);
    RadialField f = detail::family_draw(rgeo, plan.tag, 77, 0, plan.dilating);
    RadialField g = std::pow(2.0, plan.tag) * detail::family_draw(rgeo, plan.tag, 77, 1, plan.dilating);
    auto u = homogeneous_evolve(CauchyData<RadialField>{f, g}, grid);
    auto ut = u.truncated(grid.horizon() / plan.rate);
    double den = sobolev_pair_norm(f, g, pr.s_c.to_double());
    double a = spacetime_norm(ut, 2.0, NormSpec{1.0 / pr.inv_r.to_double(), 0.0});
    double b = spacetime_norm(ut, 2.0, NormSpec{1.0 / pr.inv_r0.to_double(), pr.gap().to_double()});
    CHECK(key_ratio == doctest::Approx((a + b) / den).epsilon(1e-6));
}

TEST_CASE("zero draws are skipped and counted") {
    // an all-zero forcing cannot happen from the family, so emulate by a
    // profile geometry whose draws vanish: use zero amplitude via eps = 0 in
    // the envelope -> not reachable; instead check the report bookkeeping
    auto rep = inhomogeneous_strichartz_sample<RadialField>(pr, rgeo, 9, 3, grid);
    CHECK(rep.used + rep.skipped == rep.requested);
    CHECK(rep.used > 0);
    for (const auto& [j, v] : rep.scale_ratios) CHECK(v > 0.0);
}

TEST_CASE("measured constants are positive, finite and reproducible") {
    auto c1 = measure_constants(pr, rgeo, grid, 12, 31);
    auto c2 = measure_constants(pr, rgeo, grid, 12, 31);
    CHECK(json(c1).dump() == json(c2).dump());
    CHECK(c1.C > 0.0);
    CHECK(c1.C1 >= 1.0);
    CHECK(c1.lipschitz > 0.0);
    CHECK(c1.lipschitz <= 3.0);  // the pointwise factor is <= p in this range
    CHECK(c1.embedding > 0.0);
    CHECK(std::isfinite(c1.strichartz_lebesgue));
}

TEST_CASE("p0 sampler stays on one annulus") {
    auto rep = p0_localized_sample<RadialField>(pr, rgeo, 8, 13, grid);
    CHECK(rep.used > 0);
    for (const auto& [j, v] : rep.scale_ratios) CHECK(j == 0.0);
    CHECK(rep.verdict == "bounded");
}

TEST_CASE("report verdict policy") {
    RatioReport rep;
    rep.estimate_id = "synthetic";
    for (int i = 0; i < 30; ++i)
        rep.scale_ratios.push_back({static_cast<double>(i % 3), 1.0 + 0.01 * (i % 5)});
    finalize_report(rep);
    CHECK(rep.verdict == "bounded");
    CHECK(std::abs(rep.slope) < 0.05);

    RatioReport trend;
    for (int i = 0; i < 30; ++i) {
        double j = i % 3;
        trend.scale_ratios.push_back({j, std::pow(2.0, 0.5 * j)});
    }
    finalize_report(trend);
    CHECK(trend.verdict == "suspect");
    CHECK(trend.slope == doctest::Approx(0.5).epsilon(1e-6));

    RatioReport outlier;
    for (int i = 0; i < 30; ++i) outlier.scale_ratios.push_back({0.0, 1.0});
    outlier.untagged_ratios.push_back(25.0);
    finalize_report(outlier);
    CHECK(outlier.verdict == "suspect");  // max > 10x median
}
