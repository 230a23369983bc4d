#pragma once

#include "wavelab/field_ops.hpp"

#include <vector>

namespace wavelab {

/// Uniform time grid t_m = m dt with trapezoid quadrature weights.
struct TimeGrid {
    double dt = 0.0;
    int steps = 0;  // nodes = steps + 1, covering [0, steps dt]

    static TimeGrid over(double horizon, int steps) {
        if (steps < 1 || horizon <= 0) throw ConfigError("bad time grid");
        return TimeGrid{horizon / steps, steps};
    }

    int nodes() const { return steps + 1; }
    double time(int m) const { return dt * m; }
    double horizon() const { return dt * steps; }
    double weight(int m) const { return (m == 0 || m == steps) ? dt / 2 : dt; }
};

inline bool operator==(const TimeGrid& a, const TimeGrid& b) {
    return a.dt == b.dt && a.steps == b.steps;
}

/// Time-indexed sequence of spatial fields sharing one geometry.
template <class F>
class SpaceTimeField {
  public:
    SpaceTimeField() = default;
    SpaceTimeField(TimeGrid grid, std::vector<F> nodes) : grid_(grid), nodes_(std::move(nodes)) {
        if (static_cast<int>(nodes_.size()) != grid_.nodes())
            throw ConfigError("node count does not match time grid");
    }

    static SpaceTimeField zero(const TimeGrid& grid, const typename F::GeometryPtr& geo) {
        std::vector<F> nodes(grid.nodes(), F::zero(geo));
        return SpaceTimeField(grid, std::move(nodes));
    }

    const TimeGrid& grid() const { return grid_; }
    int nodes() const { return grid_.nodes(); }
    const F& node(int m) const { return nodes_.at(m); }
    F& node(int m) { return nodes_.at(m); }
    const auto& geo() const { return nodes_.front().geo(); }

    SpaceTimeField& operator+=(const SpaceTimeField& o) {
        require_same(o);
        for (int m = 0; m < nodes(); ++m) nodes_[m] += o.nodes_[m];
        return *this;
    }
    SpaceTimeField& operator-=(const SpaceTimeField& o) {
        require_same(o);
        for (int m = 0; m < nodes(); ++m) nodes_[m] -= o.nodes_[m];
        return *this;
    }
    SpaceTimeField& operator*=(double a) {
        for (auto& f : nodes_) f *= a;
        return *this;
    }
    friend SpaceTimeField operator+(SpaceTimeField a, const SpaceTimeField& b) { return a += b; }
    friend SpaceTimeField operator-(SpaceTimeField a, const SpaceTimeField& b) { return a -= b; }
    friend SpaceTimeField operator*(double a, SpaceTimeField f) { return f *= a; }

    /// Restriction to [0, T']: keeps nodes with t_m <= T' + dt/2.
    SpaceTimeField truncated(double horizon) const {
        int keep = std::min(nodes(), static_cast<int>(std::floor(horizon / grid_.dt + 0.5)) + 1);
        if (keep < 2) throw ConfigError("truncation horizon below one time step");
        std::vector<F> sub(nodes_.begin(), nodes_.begin() + keep);
        return SpaceTimeField(TimeGrid{grid_.dt, keep - 1}, std::move(sub));
    }

  private:
    void require_same(const SpaceTimeField& o) const {
        if (!(grid_ == o.grid_)) throw ConfigError("time grid mismatch");
    }

    TimeGrid grid_;
    std::vector<F> nodes_;
};

/// Cauchy data (f, g) with a separate small-amplitude dial: the effective
/// data of a run is (eps f, eps g).
template <class F>
struct CauchyData {
    F f, g;
    double eps = 1.0;

    CauchyData scaled() const { return CauchyData{eps * f, eps * g, 1.0}; }
    double critical_norm(double s_c) const { return eps * sobolev_pair_norm(f, g, s_c); }
};

/// (sum_m w_m ||u(t_m)||^q)^{1/q}, sup over nodes at q = infinity, where the
/// spatial norm is the Besov norm of `spec`.
template <class F>
double spacetime_norm(const SpaceTimeField<F>& u, double q, const NormSpec& spec) {
    if (std::isinf(q)) {
        double best = 0.0;
        for (int m = 0; m < u.nodes(); ++m) best = std::max(best, besov_norm(u.node(m), spec).value);
        return best;
    }
    if (q < 1.0) throw DomainError("temporal exponent must be >= 1");
    double acc = 0.0;
    for (int m = 0; m < u.nodes(); ++m)
        acc += u.grid().weight(m) * std::pow(besov_norm(u.node(m), spec).value, q);
    return std::pow(acc, 1.0 / q);
}

/// L^q_t L^p_x norm (Lebesgue in space).
template <class F>
double spacetime_lebesgue_norm(const SpaceTimeField<F>& u, double q, double p) {
    if (std::isinf(q)) {
        double best = 0.0;
        for (int m = 0; m < u.nodes(); ++m) best = std::max(best, lp_norm(u.node(m), p));
        return best;
    }
    double acc = 0.0;
    for (int m = 0; m < u.nodes(); ++m) acc += u.grid().weight(m) * std::pow(lp_norm(u.node(m), p), q);
    return std::pow(acc, 1.0 / q);
}

/// The iteration norm: max of the two constituents
/// L^q_t B^0_r and L^{q0}_t B^{s_c - s0}_{r0}, evaluated in one block sweep.
template <class F>
double xt_norm(const SpaceTimeField<F>& u, const ExponentProfile& pr) {
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
    }
    return std::max(std::pow(acc0, 1.0 / q), std::pow(acc1, 1.0 / q0));
}

}  // namespace wavelab
