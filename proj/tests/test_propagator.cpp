#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wavelab/corpus.hpp"
#include "wavelab/propagator.hpp"

using namespace wavelab;

namespace {
const GridGeometryPtr geo1 = make_grid_geometry(1, 256, 16.0);
const RadialGeometryPtr rgeo = make_radial_geometry(8, 256, 16.0, 16.0);

GridField mode(const GridGeometryPtr& geo, int k) {
    ArrayXcd spec = ArrayXcd::Zero(geo->points());
    spec[geo->flat_index({k})] = 1.0;
    return GridField::from_spectrum(geo, spec);
}
}  // namespace

TEST_CASE("eigenmode evolution is exact") {
    const int k = 12;
    double xi = geo1->freq_mags()[geo1->flat_index({k})];
    TimeGrid grid = TimeGrid::over(4.0, 64);

    // f = e^{ikx}, g = 0: u(t) = cos(t xi) e^{ikx}
    auto u = homogeneous_evolve(CauchyData<GridField>{mode(geo1, k), GridField::zero(geo1)}, grid);
    for (int m : {0, 7, 32, 64}) {
        double t = grid.time(m);
        ArrayXcd expected = std::cos(t * xi) * mode(geo1, k).samples();
        CHECK((u.node(m).samples() - expected).abs().maxCoeff() < 1e-12);
    }
    // f = 0, g = e^{ikx}: u(t) = sin(t xi)/xi e^{ikx}
    auto v = homogeneous_evolve(CauchyData<GridField>{GridField::zero(geo1), mode(geo1, k)}, grid);
    for (int m : {1, 17, 63}) {
        double t = grid.time(m);
        ArrayXcd expected = std::sin(t * xi) / xi * mode(geo1, k).samples();
        CHECK((v.node(m).samples() - expected).abs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("zero frequency evolves by the free rule") {
    // constant data: mean(f) + t mean(g)
    GridField cf = GridField::from_samples(geo1, ArrayXcd::Constant(geo1->points(), 2.0));
    GridField cg = GridField::from_samples(geo1, ArrayXcd::Constant(geo1->points(), 0.5));
    TimeGrid grid = TimeGrid::over(2.0, 16);
    auto u = homogeneous_evolve(CauchyData<GridField>{cf, cg}, grid);
    for (int m : {0, 8, 16}) {
        double t = grid.time(m);
        CHECK(std::abs(u.node(m).mean() - (2.0 + 0.5 * t)) < 1e-12);
    }
}

TEST_CASE("energy is conserved to 1e-10 over T = 4") {
    TimeGrid grid = TimeGrid::over(4.0, 256);
    for (std::uint64_t d = 0; d < 3; ++d) {
        CauchyData<GridField> data{random_grid_gaussian(geo1, 91, 2 * d),
                                   random_grid_gaussian(geo1, 91, 2 * d + 1)};
        auto u = homogeneous_evolve(data, grid);
        auto ut = homogeneous_velocity(data, grid);
        double e0 = energy_norm(u.node(0), ut.node(0));
        for (int m = 0; m < grid.nodes(); m += 16)
            CHECK(std::abs(energy_norm(u.node(m), ut.node(m)) - e0) < 1e-10 * e0);
    }
    // radial backend too
    CauchyData<RadialField> rdata{radial_gaussian(rgeo, 0.8), radial_annular(rgeo, 1.0, 1.0)};
    auto u = homogeneous_evolve(rdata, grid);
    auto ut = homogeneous_velocity(rdata, grid);
    double e0 = energy_norm(u.node(0), ut.node(0));
    for (int m = 0; m < grid.nodes(); m += 32)
        CHECK(std::abs(energy_norm(u.node(m), ut.node(m)) - e0) < 1e-10 * e0);
}

TEST_CASE("time reversal symmetry") {
    CauchyData<GridField> fwd{random_grid_gaussian(geo1, 15, 0), random_grid_gaussian(geo1, 15, 1)};
    CauchyData<GridField> rev{fwd.f, -1.0 * fwd.g};
    TimeGrid grid = TimeGrid::over(3.0, 48);
    auto up = homogeneous_evolve(fwd, grid);
    auto um = homogeneous_evolve(rev, grid);
    // evolving (f, -g) forward equals evolving (f, g) to negative times
    for (int m : {3, 21, 48}) {
        GridField direct = detail::evolve_node(fwd.f, fwd.g, -grid.time(m));
        CHECK((um.node(m).samples() - direct.samples()).abs().maxCoeff() < 1e-10);
        CHECK((up.node(m).samples() - detail::evolve_node(fwd.f, fwd.g, grid.time(m)).samples())
                  .abs()
                  .maxCoeff() < 1e-12);
    }
}

TEST_CASE("duhamel trivials and closed form") {
    TimeGrid grid = TimeGrid::over(2.0, 256);
    auto zero = SpaceTimeField<GridField>::zero(grid, geo1);
    auto gz = duhamel(zero);
    for (int m : {0, 100, 256}) CHECK(lp_norm(gz.node(m), 2.0) == 0.0);

    // F = e^{ikx} 1(t): per mode (1 - cos(t xi))/xi^2, matched to O(dt^2)
    const int k = 9;
    double xi = geo1->freq_mags()[geo1->flat_index({k})];
    std::vector<GridField> nodes(grid.nodes(), mode(geo1, k));
    SpaceTimeField<GridField> forcing(grid, std::move(nodes));
    auto gf = duhamel(forcing);
    CHECK(lp_norm(gf.node(0), 2.0) < 1e-14);
    for (int m : {32, 128, 256}) {
        double t = grid.time(m);
        Complex got = gf.node(m).spectrum()[geo1->flat_index({k})];
        double expected = (1.0 - std::cos(t * xi)) / (xi * xi);
        CHECK(std::abs(got - expected) < 5.0 * grid.dt * grid.dt);
    }
    // d/dt GF(0) = 0 to quadrature order
    auto gv = duhamel_velocity(forcing);
    CHECK(lp_norm(gv.node(0), 2.0) < 1e-14);
}

TEST_CASE("manufactured solution is recovered at second order") {
    // v(t, x) = a(t) cos(k x), a = t^2 e^{-t}, F = box v = (a'' + xi^2 a) cos(k x)
    const int k = 6;
    const double xi = geo1->freq_mags()[geo1->flat_index({k})];
    auto a = [](double t) { return t * t * std::exp(-t); };
    auto app = [](double t) { return (2.0 - 4.0 * t + t * t) * std::exp(-t); };

    auto run = [&](int steps) {
        TimeGrid grid = TimeGrid::over(2.0, steps);
        std::vector<GridField> fn;
        for (int m = 0; m < grid.nodes(); ++m) {
            double t = grid.time(m);
            fn.push_back((app(t) + xi * xi * a(t)) * mode(geo1, k));
        }
        auto gf = duhamel(SpaceTimeField<GridField>(grid, std::move(fn)));
        double worst = 0.0;
        for (int m = 0; m < grid.nodes(); ++m) {
            ArrayXcd expected = a(grid.time(m)) * mode(geo1, k).samples();
            worst = std::max(worst, (gf.node(m).samples() - expected).abs().maxCoeff());
        }
        return worst;
    };
    double e1 = run(64), e2 = run(128);
    double order = std::log2(e1 / e2);
    CHECK(order >= 1.9);
}

TEST_CASE("spacetime norms") {
    TimeGrid grid = TimeGrid::over(1.0, 64);
    GridField f = random_grid_gaussian(geo1, 33, 0);
    std::vector<GridField> nodes(grid.nodes(), f);
    SpaceTimeField<GridField> u(grid, std::move(nodes));
    NormSpec spec{2.0, 0.5};
    double spatial = besov_norm(f, spec).value;
    // constant in time: T^{1/q} * spatial
    CHECK(spacetime_norm(u, 2.0, spec) == doctest::Approx(spatial).epsilon(1e-10));
    CHECK(spacetime_norm(u, 4.0, spec) == doctest::Approx(spatial).epsilon(1e-10));
    CHECK(spacetime_norm(u, std::numeric_limits<double>::infinity(), spec) ==
          doctest::Approx(spatial).epsilon(1e-12));
    // quadrature convergence on smooth t-dependence: halving dt moves little
    auto weighted = [&](int steps) {
        TimeGrid g2 = TimeGrid::over(1.0, steps);
        std::vector<GridField> ns;
        for (int m = 0; m < g2.nodes(); ++m) ns.push_back(std::sin(1.0 + g2.time(m)) * f);
        return spacetime_norm(SpaceTimeField<GridField>(g2, std::move(ns)), 2.0, spec);
    };
    CHECK(std::abs(weighted(64) - weighted(128)) < 1e-3 * weighted(128));
}

TEST_CASE("xt norm basics") {
    auto pr = exponent_profile(8, Rational(9, 5));
    TimeGrid grid = TimeGrid::over(2.0, 32);
    auto zero = SpaceTimeField<RadialField>::zero(grid, rgeo);
    CHECK(xt_norm(zero, pr) == 0.0);

    CauchyData<RadialField> data{radial_gaussian(rgeo, 0.7), RadialField::zero(rgeo)};
    auto u = homogeneous_evolve(data, grid);
    double nx = xt_norm(u, pr);
    CHECK(nx > 0.0);
    auto u2 = 2.0 * u;
    CHECK(xt_norm(u2, pr) == doctest::Approx(2.0 * nx).epsilon(1e-12));
    CHECK(xt_norm(u.truncated(1.0), pr) <= nx + 1e-12);
}

TEST_CASE("finite speed of propagation at the linear level") {
    // data supported in |x| <= rho0 (6 sigma): mass outside rho0 + t + 2 dx
    // stays below 1e-6 of the total
    double sigma = 0.35, rho0 = 6.0 * sigma;
    GridField f = grid_gaussian(geo1, {0.0}, sigma, {0.0}, 0.0);
    CauchyData<GridField> data{f, GridField::zero(geo1)};
    TimeGrid grid = TimeGrid::over(6.0, 96);
    auto u = homogeneous_evolve(data, grid);
    double dx = 2.0 * geo1->half_width() / geo1->n_per_axis();
    for (int m : {16, 48, 96}) {
        double t = grid.time(m);
        double inside = 0.0, outside = 0.0;
        const auto& s = u.node(m).samples();
        for (Eigen::Index i = 0; i < s.size(); ++i) {
            double reach = rho0 + t + 2.0 * dx;
            if (geo1->radii()[i] <= reach)
                inside += std::norm(s[i]);
            else
                outside += std::norm(s[i]);
        }
        CHECK(outside < 1e-6 * (inside + outside));
    }
}

TEST_CASE("weak solution property against smooth test functions") {
    // residual <u, box psi> - <F, psi> - data terms = O(dt^2 + truncation):
    // measure it at two step sizes and demand near-quartic total decrease
    CauchyData<GridField> data{grid_gaussian(geo1, {0.3}, 0.5, {1.0}, 0.2),
                               grid_gaussian(geo1, {-0.4}, 0.6, {0.5}, 0.0)};

    auto residual_at = [&](int steps) {
        TimeGrid grid = TimeGrid::over(3.0, steps);
        std::vector<GridField> fn;
        for (int m = 0; m < grid.nodes(); ++m) {
            double t = grid.time(m);
            fn.push_back(std::exp(-t) * grid_gaussian(geo1, {0.1}, 0.4, {2.0}, 0.0));
        }
        SpaceTimeField<GridField> forcing(grid, std::move(fn));
        auto u = homogeneous_evolve(data, grid) + duhamel(forcing);

        const double T = grid.horizon();
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            // time bump vanishes at t = 0 and t = T to ~1e-14 (>= 8 sigma out)
            double t0 = T * (0.35 + 0.03 * trial);
            double st = T / 24.0;
            double x0 = -2.0 + 0.4 * trial, sx = 0.5;
            auto at = [&](double t) { return std::exp(-(t - t0) * (t - t0) / (2 * st * st)); };
            auto att = [&](double t) {
                double z = (t - t0) / (st * st);
                return (z * z - 1.0 / (st * st)) * at(t);
            };
            double residual = 0.0, scale = 0.0;
            for (int m = 0; m < grid.nodes(); ++m) {
                double t = grid.time(m), w = grid.weight(m);
                const auto& us = u.node(m).samples();
                const auto& fs = forcing.node(m).samples();
                for (Eigen::Index i = 0; i < geo1->points(); ++i) {
                    double x = geo1->coord(static_cast<int>(i));
                    double b = std::exp(-(x - x0) * (x - x0) / (2 * sx * sx));
                    double bxx = ((x - x0) * (x - x0) / (sx * sx * sx * sx) - 1.0 / (sx * sx)) * b;
                    double boxpsi = att(t) * b - at(t) * bxx;
                    double cell = w * geo1->cell_volume();
                    residual += cell * (us[i].real() * boxpsi - fs[i].real() * at(t) * b);
                    scale += cell * std::abs(us[i].real() * boxpsi);
                }
            }
            worst = std::max(worst, std::abs(residual) / std::max(scale, 1e-12));
        }
        return worst;
    };

    double r1 = residual_at(96), r2 = residual_at(192);
    CHECK(r2 < r1);
    CHECK(r2 / r1 < 0.35);          // consistent with O(dt^2)
    CHECK(residual_at(384) < 1e-4);  // and small outright at production step
}
