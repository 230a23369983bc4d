#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wavelab/corpus.hpp"
#include "wavelab/snapshots.hpp"
#include "wavelab/suites.hpp"

#include <filesystem>

using namespace wavelab;

namespace fs = std::filesystem;

namespace {
struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("wavelab_test_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};
}  // namespace

TEST_CASE("grid snapshot round trip") {
    TempDir tmp;
    auto geo = make_grid_geometry(2, 32, 8.0);
    GridField u = random_grid_gaussian(geo, 5, 0);
    write_snapshot(tmp.path / "u.wlf", u);
    CHECK(snapshot_kind(tmp.path / "u.wlf") == "grid");
    GridField v = read_grid_snapshot(tmp.path / "u.wlf");
    CHECK(v.geo()->dim() == 2);
    CHECK(v.geo()->n_per_axis() == 32);
    CHECK(v.geo()->half_width() == 8.0);
    CHECK((v.samples() - u.samples()).abs().maxCoeff() == 0.0);  // bit exact
    CHECK_THROWS_AS(read_radial_snapshot(tmp.path / "u.wlf"), ConfigError);
}

TEST_CASE("radial snapshot round trip") {
    TempDir tmp;
    auto geo = make_radial_geometry(8, 64, 16.0, 16.0);
    RadialField u = radial_gaussian(geo, 0.9);
    write_snapshot(tmp.path / "r.wlf", u);
    CHECK(snapshot_kind(tmp.path / "r.wlf") == "radial");
    RadialField v = read_radial_snapshot(tmp.path / "r.wlf");
    CHECK(v.geo()->n_dim() == 8);
    CHECK((v.samples() - u.samples()).abs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(read_grid_snapshot(tmp.path / "r.wlf"), ConfigError);
    CHECK_THROWS_AS(read_radial_snapshot(tmp.path / "absent.wlf"), ConfigError);
}

TEST_CASE("spacetime snapshot manifest") {
    TempDir tmp;
    auto geo = make_radial_geometry(4, 48, 16.0, 16.0);
    TimeGrid grid = TimeGrid::over(1.0, 4);
    std::vector<RadialField> nodes;
    for (int m = 0; m < grid.nodes(); ++m) nodes.push_back(radial_gaussian(geo, 1.0 + 0.1 * m));
    SpaceTimeField<RadialField> u(grid, std::move(nodes));
    write_spacetime_snapshot(tmp.path / "st", u, "wave");
    auto v = read_radial_spacetime_snapshot(tmp.path / "st" / "wave.json");
    CHECK(v.nodes() == u.nodes());
    CHECK(v.grid().dt == u.grid().dt);
    for (int m = 0; m < u.nodes(); ++m)
        CHECK((v.node(m).samples() - u.node(m).samples()).abs().maxCoeff() == 0.0);
}

TEST_CASE("fixture file round trip") {
    TempDir tmp;
    FixtureRecord rec;
    rec.constants.C = 1.25;
    rec.constants.C1 = 2.5;
    rec.constants.strichartz_lebesgue = 0.7;
    rec.constants.lipschitz = 1.8;
    rec.constants.embedding = 1.1;
    rec.constants.seed = 555;
    rec.constants.draws = 36;
    rec.n = 8;
    rec.p = Rational(9, 5);
    rec.m_points = 256;
    rec.r_max = 16.0;
    rec.p_max = 16.0;
    rec.horizon = 2.0;
    rec.time_steps = 96;
    write_fixture(tmp.path / "fix.json", rec);
    auto back = read_fixture(tmp.path / "fix.json");
    CHECK(back.constants.C == rec.constants.C);
    CHECK(back.constants.C1 == rec.constants.C1);
    CHECK(back.p == rec.p);
    CHECK(back.time_steps == 96);
}

TEST_CASE("scan csv shape") {
    ScanTable table;
    table.n_dim = 4;
    table.t_max = 20.0;
    table.rows = {{1.4, 1.0, 18.36, false}, {2.5, 1.0, 20.0, true}};
    std::string csv = scan_table_csv(table);
    CHECK(csv.find("n,p,epsilon,lifespan,verdict") == 0);
    CHECK(csv.find("4,1.4,1,18.36,blowup") != std::string::npos);
    CHECK(csv.find("4,2.5,1,20,global") != std::string::npos);
}

TEST_CASE("exponent sweep csv") {
    std::string csv = exponent_sweep_csv(10, 40, 10);  // p from 3/2+1/10 to 3/2+4
    CHECK(csv.find("n,p_num,p_den,case,s_c,s_0,gap_margin,all_verdicts_hold") == 0);
    CHECK(csv.find("gap") != std::string::npos);  // rows inside [2, 3]
    CHECK(csv.find("C2") != std::string::npos);
    CHECK(csv.find(",1,") != std::string::npos);  // verdicts hold on valid rows
}

TEST_CASE("suite reports are deterministic") {
    auto a = suite_propagator(11);
    auto b = suite_propagator(11);
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.pass);
}

TEST_CASE("unknown suite name") {
    CHECK_THROWS_AS(run_suite("bogus", 8, Rational(9, 5), 1), ConfigError);
}

TEST_CASE("committed fixture reproduces under remeasurement") {
    auto rec = read_fixture(fs::path(WAVELAB_SOURCE_DIR) / "fixtures" / "strichartz_n8_p9_5.json");
    CHECK(rec.n == 8);
    CHECK(rec.p == Rational(9, 5));
    auto pr = exponent_profile(rec.n, rec.p);
    auto geo = make_radial_geometry(rec.n, rec.m_points, rec.r_max, rec.p_max);
    TimeGrid grid{rec.horizon / rec.time_steps, rec.time_steps};
    auto fresh = measure_constants(pr, geo, grid, rec.constants.draws, rec.constants.seed);
    CHECK(fresh.C == doctest::Approx(rec.constants.C).epsilon(1e-6));
    CHECK(fresh.C1 == doctest::Approx(rec.constants.C1).epsilon(1e-6));
    CHECK(fresh.strichartz_lebesgue ==
          doctest::Approx(rec.constants.strichartz_lebesgue).epsilon(1e-6));
}
