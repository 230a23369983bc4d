#pragma once

#include "wavelab/spacetime.hpp"

namespace wavelab {

/// Linear wave evolution by Fourier multipliers.
///
/// Homogeneous part: u(t) = cos(t|grad|) f + (sin(t|grad|)/|grad|) g, with the
/// removable singularity at the zero frequency taking its limit value t; the
/// spatial mean evolves by the free rule mean(f) + t mean(g).
///
/// Inhomogeneous part (Duhamel): GF(t) = int_0^t sin((t-s)|grad|)/|grad| F(s) ds
/// by composite trapezoid over the stored nodes.  The angle-addition split
/// sin((t-s)r) = sin(tr)cos(sr) - cos(tr)sin(sr) turns the whole family of
/// integrals into two running prefix sums, one pass over the nodes.

namespace detail {

template <class F>
F evolve_node(const F& fh, const F& gh, double t) {
    const auto& geo = *fh.geo();
    const ArrayXd& mags = geo.freq_mags();
    ArrayXcd out(mags.size());
    const ArrayXcd& fs = fh.spectrum();
    const ArrayXcd& gs = gh.spectrum();
    for (Eigen::Index i = 0; i < mags.size(); ++i) {
        double rho = mags[i];
        double sinc = rho == 0.0 ? t : std::sin(t * rho) / rho;
        out[i] = std::cos(t * rho) * fs[i] + sinc * gs[i];
    }
    return F::from_spectrum(fh.geo(), out, fh.flags().merged(gh.flags()));
}

template <class F>
F evolve_velocity_node(const F& fh, const F& gh, double t) {
    const auto& geo = *fh.geo();
    const ArrayXd& mags = geo.freq_mags();
    ArrayXcd out(mags.size());
    const ArrayXcd& fs = fh.spectrum();
    const ArrayXcd& gs = gh.spectrum();
    for (Eigen::Index i = 0; i < mags.size(); ++i) {
        double rho = mags[i];
        out[i] = -rho * std::sin(t * rho) * fs[i] + std::cos(t * rho) * gs[i];
    }
    return F::from_spectrum(fh.geo(), out, fh.flags().merged(gh.flags()));
}

}  // namespace detail

template <class F>
SpaceTimeField<F> homogeneous_evolve(const CauchyData<F>& data, const TimeGrid& grid) {
    if (data.f.geo() != data.g.geo()) throw ConfigError("cauchy data on mismatched grids");
    F f = data.eps * data.f;
    F g = data.eps * data.g;
    std::vector<F> nodes;
    nodes.reserve(grid.nodes());
    for (int m = 0; m < grid.nodes(); ++m) nodes.push_back(detail::evolve_node(f, g, grid.time(m)));
    return SpaceTimeField<F>(grid, std::move(nodes));
}

/// Time derivative of the homogeneous evolution (for energy diagnostics).
template <class F>
SpaceTimeField<F> homogeneous_velocity(const CauchyData<F>& data, const TimeGrid& grid) {
    F f = data.eps * data.f;
    F g = data.eps * data.g;
    std::vector<F> nodes;
    nodes.reserve(grid.nodes());
    for (int m = 0; m < grid.nodes(); ++m)
        nodes.push_back(detail::evolve_velocity_node(f, g, grid.time(m)));
    return SpaceTimeField<F>(grid, std::move(nodes));
}

template <class F>
SpaceTimeField<F> duhamel(const SpaceTimeField<F>& forcing) {
    const TimeGrid& grid = forcing.grid();
    const auto geo = forcing.geo();
    const ArrayXd& mags = geo->freq_mags();
    const Eigen::Index n = mags.size();
    const double dt = grid.dt;

    ArrayXcd cos_sum = ArrayXcd::Zero(n), sin_sum = ArrayXcd::Zero(n);
    ArrayXcd mean_sum = ArrayXcd::Zero(n), mean_t_sum = ArrayXcd::Zero(n);
    ArrayXcd prev_cos(n), prev_sin(n), prev_plain(n), prev_t(n);

    std::vector<F> out;
    out.reserve(grid.nodes());
    for (int m = 0; m < grid.nodes(); ++m) {
        const double t = grid.time(m);
        const ArrayXcd& fs = forcing.node(m).spectrum();
        ArrayXcd cur_cos(n), cur_sin(n), cur_plain(n), cur_t(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            double rho = mags[i];
            cur_cos[i] = std::cos(t * rho) * fs[i];
            cur_sin[i] = std::sin(t * rho) * fs[i];
            cur_plain[i] = fs[i];
            cur_t[i] = t * fs[i];
        }
        if (m > 0) {
            cos_sum += 0.5 * dt * (prev_cos + cur_cos);
            sin_sum += 0.5 * dt * (prev_sin + cur_sin);
            mean_sum += 0.5 * dt * (prev_plain + cur_plain);
            mean_t_sum += 0.5 * dt * (prev_t + cur_t);
        }
        prev_cos = cur_cos;
        prev_sin = cur_sin;
        prev_plain = cur_plain;
        prev_t = cur_t;

        ArrayXcd spec(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            double rho = mags[i];
            if (rho == 0.0)
                spec[i] = t * mean_sum[i] - mean_t_sum[i];  // kernel (t - s) at the zero mode
            else
                spec[i] = (std::sin(t * rho) * cos_sum[i] - std::cos(t * rho) * sin_sum[i]) / rho;
        }
        out.push_back(F::from_spectrum(geo, spec, forcing.node(m).flags()));
    }
    return SpaceTimeField<F>(grid, std::move(out));
}

/// d/dt of the Duhamel integral: int_0^t cos((t-s)|grad|) F(s) ds.
template <class F>
SpaceTimeField<F> duhamel_velocity(const SpaceTimeField<F>& forcing) {
    const TimeGrid& grid = forcing.grid();
    const auto geo = forcing.geo();
    const ArrayXd& mags = geo->freq_mags();
    const Eigen::Index n = mags.size();
    const double dt = grid.dt;

    ArrayXcd cos_sum = ArrayXcd::Zero(n), sin_sum = ArrayXcd::Zero(n);
    ArrayXcd prev_cos(n), prev_sin(n);
    std::vector<F> out;
    out.reserve(grid.nodes());
    for (int m = 0; m < grid.nodes(); ++m) {
        const double t = grid.time(m);
        const ArrayXcd& fs = forcing.node(m).spectrum();
        ArrayXcd cur_cos(n), cur_sin(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            double rho = mags[i];
            cur_cos[i] = std::cos(t * rho) * fs[i];
            cur_sin[i] = std::sin(t * rho) * fs[i];
        }
        if (m > 0) {
            cos_sum += 0.5 * dt * (prev_cos + cur_cos);
            sin_sum += 0.5 * dt * (prev_sin + cur_sin);
        }
        prev_cos = cur_cos;
        prev_sin = cur_sin;
        ArrayXcd spec(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            double rho = mags[i];
            spec[i] = std::cos(t * rho) * cos_sum[i] + std::sin(t * rho) * sin_sum[i];
        }
        out.push_back(F::from_spectrum(geo, spec, forcing.node(m).flags()));
    }
    return SpaceTimeField<F>(grid, std::move(out));
}

/// ||(u, u_t)||_{H^1 x L^2}, both parts evaluated spectrally so that the
/// per-mode rotation of the flow conserves the value to rounding.
template <class F>
double energy_norm(const F& u, const F& ut) {
    double a = sobolev_norm(u, 1.0);
    double b = sobolev_norm(ut, 0.0);
    return std::sqrt(a * a + b * b);
}

}  // namespace wavelab
