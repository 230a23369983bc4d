#include "wavelab/radial_fd.hpp"

#include <cmath>

namespace wavelab {

namespace {

// Conservative flux form of r^{1-n} d_r(r^{n-1} d_r u): self-adjoint in the
// r^{n-1} weight, so the leapfrog spectrum stays on the negative real axis.
// The origin cell uses the even extension u_r(t, 0) = 0.
void laplacian(const ArrayXd& u, int n_dim, double dr, ArrayXd& out) {
    const Eigen::Index m = u.size() - 1;  // nodes 0..m, u[m] pinned to 0
    out[0] = 2.0 * n_dim * (u[1] - u[0]) / (dr * dr);
    for (Eigen::Index i = 1; i < m; ++i) {
        double r = dr * i;
        double rp = std::pow(r + dr / 2, n_dim - 1);
        double rm = std::pow(r - dr / 2, n_dim - 1);
        out[i] = (rp * (u[i + 1] - u[i]) - rm * (u[i] - u[i - 1])) /
                 (std::pow(r, n_dim - 1) * dr * dr);
    }
    out[m] = 0.0;
}

}  // namespace

RadialFdResult radial_reference_solve(const RadialProfileFn& f, const RadialProfileFn& g,
                                      const RadialFdConfig& config,
                                      const std::vector<double>& snapshot_times) {
    const double dr = config.r_max / config.m_points;
    // The origin cell strengthens the operator by a factor ~n, so the usual
    // dr/2 cap must tighten with the dimension.
    const double dt_cap = std::min(0.5, 0.95 / std::sqrt(static_cast<double>(config.n_dim))) * dr;
    if (config.dt > dt_cap + 1e-15)
        throw ConfigError("CFL violation: dt must be at most min(dr/2, 0.95 dr/sqrt(n))");
    if (config.p <= 1.0 && config.nonlinear) throw DomainError("power must exceed 1");

    const Eigen::Index nodes = config.m_points + 1;
    RadialFdResult result;
    result.dr = dr;
    result.r_grid.resize(nodes);
    for (Eigen::Index i = 0; i < nodes; ++i) result.r_grid[i] = dr * i;

    ArrayXd u_prev(nodes), u_cur(nodes), u_next(nodes), lap(nodes), rhs(nodes);
    for (Eigen::Index i = 0; i < nodes; ++i) u_prev[i] = f(result.r_grid[i]);
    u_prev[nodes - 1] = 0.0;

    auto forcing = [&](const ArrayXd& u, ArrayXd& out) {
        laplacian(u, config.n_dim, dr, out);
        if (config.nonlinear) out += u.abs().pow(config.p);
    };

    // Taylor start: u^1 = u^0 + dt g + dt^2/2 (Lu^0 + F(u^0))
    forcing(u_prev, rhs);
    for (Eigen::Index i = 0; i < nodes; ++i)
        u_cur[i] = u_prev[i] + config.dt * g(result.r_grid[i]) + 0.5 * config.dt * config.dt * rhs[i];
    u_cur[nodes - 1] = 0.0;

    const int steps = static_cast<int>(std::ceil(config.t_max / config.dt - 1e-12));
    auto want_snapshot = [&](double t) {
        for (double s : snapshot_times)
            if (std::abs(s - t) < config.dt / 2) return true;
        return false;
    };
    if (want_snapshot(0.0)) {
        result.snapshot_times.push_back(0.0);
        result.snapshots.push_back(u_prev);
    }
    if (want_snapshot(config.dt)) {
        result.snapshot_times.push_back(config.dt);
        result.snapshots.push_back(u_cur);
    }

    result.lifespan = config.t_max;
    for (int step = 1; step < steps; ++step) {
        forcing(u_cur, rhs);
        u_next = 2.0 * u_cur - u_prev + config.dt * config.dt * rhs;
        u_next[nodes - 1] = 0.0;
        const double t = config.dt * (step + 1);
        double peak = u_next.abs().maxCoeff();
        if (!std::isfinite(peak) || peak > config.blowup_threshold) {
            result.blew_up = true;
            result.lifespan = t;
            result.snapshot_times.push_back(t);
            result.snapshots.push_back(u_cur);  // last finite state
            return result;
        }
        u_prev.swap(u_cur);
        u_cur.swap(u_next);
        if (want_snapshot(t)) {
            result.snapshot_times.push_back(t);
            result.snapshots.push_back(u_cur);
        }
    }
    return result;
}

double ScanTable::eps_star(double p) const {
    double best = 0.0;
    for (const auto& row : rows)
        if (row.p == p && row.global) best = std::max(best, row.eps);
    return best;
}

ScanTable blowup_scan(const RadialProfileFn& f, const RadialProfileFn& g,
                      const std::vector<double>& p_values, const std::vector<double>& eps_values,
                      const RadialFdConfig& base_config) {
    ScanTable table;
    table.n_dim = base_config.n_dim;
    table.t_max = base_config.t_max;
    for (double p : p_values) {
        for (double eps : eps_values) {
            RadialFdConfig cfg = base_config;
            cfg.p = p;
            auto fe = [&](double r) { return eps * f(r); };
            auto ge = [&](double r) { return eps * g(r); };
            auto run = radial_reference_solve(fe, ge, cfg, {});
            table.rows.push_back(ScanRow{p, eps, run.lifespan, !run.blew_up});
        }
    }
    return table;
}

}  // namespace wavelab
