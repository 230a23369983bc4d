#pragma once

#include "wavelab/core.hpp"

#include <functional>
#include <vector>

namespace wavelab {

/// Independent second-order finite-difference solver for the radial wave
/// equation u_tt = u_rr + ((n-1)/r) u_r + F(u) on [0, r_max], used only as a
/// cross-check oracle and for the blow-up scans.  The origin uses the
/// regularity condition u_r(t, 0) = 0 (even extension), the outer boundary is
/// homogeneous Dirichlet far outside every light cone of interest.
struct RadialFdConfig {
    int n_dim = 4;
    double p = 2.0;
    bool nonlinear = true;
    double r_max = 26.0;
    int m_points = 640;       // grid spacing r_max / m_points
    double dt = 0.02;
    double t_max = 20.0;
    double blowup_threshold = 1e6;
};

struct RadialFdResult {
    bool blew_up = false;
    double lifespan = 0.0;  // first threshold crossing; t_max when global
    ArrayXd r_grid;
    std::vector<double> snapshot_times;
    std::vector<ArrayXd> snapshots;  // one value per r-grid node
    double dr = 0.0;
};

using RadialProfileFn = std::function<double(double)>;

RadialFdResult radial_reference_solve(const RadialProfileFn& f, const RadialProfileFn& g,
                                      const RadialFdConfig& config,
                                      const std::vector<double>& snapshot_times);

struct ScanRow {
    double p = 0.0;
    double eps = 0.0;
    double lifespan = 0.0;
    bool global = false;  // survived to t_max
};

struct ScanTable {
    int n_dim = 0;
    double t_max = 0.0;
    std::vector<ScanRow> rows;

    /// Largest tested amplitude that stayed global at the given power
    /// (0 when every tested amplitude blew up).
    double eps_star(double p) const;
};

/// Lifespan table over a (p, eps) grid with fixed nonnegative data profiles.
ScanTable blowup_scan(const RadialProfileFn& f, const RadialProfileFn& g,
                      const std::vector<double>& p_values, const std::vector<double>& eps_values,
                      const RadialFdConfig& base_config);

}  // namespace wavelab
