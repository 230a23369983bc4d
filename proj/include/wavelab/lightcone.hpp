#pragma once

#include "wavelab/spacetime.hpp"

namespace wavelab {

/// Backward light cone {|x| < R - t, t > 0} with a smooth cutoff chi that is
/// identically 1 on a delta-neighborhood of the cone and vanishes outside a
/// 2 delta-neighborhood.
struct LightCone {
    double radius = 1.0;   // R
    double horizon = 1.0;  // T
    double margin = 0.5;   // delta

    bool inside(double t, double r) const { return t >= 0.0 && r < radius - t; }

    /// chi(t, r): 1 within margin of the cone, smooth transition to 0.
    double cutoff(double t, double r) const {
        double excess = r - (radius - t);  // > 0 outside the spatial slice
        if (excess <= margin) return 1.0;
        if (excess >= 2.0 * margin) return 0.0;
        return dyadic_cut(1.0 + (excess - margin) / margin);
    }
};

/// chi-multiplied field at one time node.
template <class F>
F apply_cone_cutoff(const F& u, const LightCone& cone, double t) {
    const ArrayXd& radii = u.geo()->radii();
    ArrayXcd out = u.samples();
    for (Eigen::Index i = 0; i < out.size(); ++i) out[i] *= cone.cutoff(t, radii[i]);
    return F::from_samples(u.geo(), std::move(out), u.flags());
}

template <class F>
SpaceTimeField<F> apply_cone_cutoff(const SpaceTimeField<F>& u, const LightCone& cone) {
    std::vector<F> nodes;
    nodes.reserve(u.nodes());
    for (int m = 0; m < u.nodes(); ++m)
        nodes.push_back(apply_cone_cutoff(u.node(m), cone, u.grid().time(m)));
    return SpaceTimeField<F>(u.grid(), std::move(nodes));
}

/// L^p_x over the cone slice {|x| < R - t} at time t (zero once the slice
/// closes).
template <class F>
double cone_slice_lp(const F& u, const LightCone& cone, double t, double p) {
    const ArrayXd& radii = u.geo()->radii();
    const ArrayXd& w = u.geo()->quad_weights();
    double acc = 0.0, sup = 0.0;
    for (Eigen::Index i = 0; i < radii.size(); ++i) {
        if (!cone.inside(t, radii[i])) continue;
        double a = std::abs(u.samples()[i]);
        sup = std::max(sup, a);
        acc += w[i] * std::pow(a, p);
    }
    return std::isinf(p) ? sup : std::pow(acc, 1.0 / p);
}

/// L^q_t L^p_x over the truncated cone Lambda^T_{R,0}.
template <class F>
double cone_norm(const SpaceTimeField<F>& u, const LightCone& cone, double q, double p) {
    double acc = 0.0, sup = 0.0;
    for (int m = 0; m < u.nodes(); ++m) {
        double t = u.grid().time(m);
        if (t > cone.horizon) break;
        double slice = cone_slice_lp(u.node(m), cone, t, p);
        sup = std::max(sup, slice);
        acc += u.grid().weight(m) * std::pow(slice, q);
    }
    return std::isinf(q) ? sup : std::pow(acc, 1.0 / q);
}

}  // namespace wavelab
