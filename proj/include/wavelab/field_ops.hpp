#pragma once

#include "wavelab/exponents.hpp"
#include "wavelab/grid_field.hpp"
#include "wavelab/radial_field.hpp"

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace wavelab {

/// Lebesgue index + smoothness of a homogeneous Besov norm; the fine index is
/// fixed at 2 (the l^2 sum over blocks), with the sup variant exposed
/// separately where a product estimate needs it.
struct NormSpec {
    double p_int = 2.0;
    double s = 0.0;
};

struct BesovResult {
    double value = 0.0;
    std::vector<std::pair<int, double>> block_norms;  // (j, ||P_j u||_p)
    bool regime_warning = false;  // s >= n/p: outside the Banach regime
    double leakage = 0.0;         // relative spectral mass outside the dyadic window
};

enum class FineIndex { l2, sup };

template <class F>
double lp_norm(const F& u, double p) {
    if (std::isinf(p)) return u.samples().abs().maxCoeff();
    if (p < 1.0) throw DomainError("Lebesgue index must be >= 1");
    const ArrayXd& w = u.geo()->quad_weights();
    if (p == 2.0) return std::sqrt((w * u.samples().abs2()).sum());
    return std::pow((w * u.samples().abs().pow(p)).sum(), 1.0 / p);
}

namespace detail {

/// Plancherel mass per spectral index (zero mode excluded: homogeneous norms
/// are taken modulo constants).
template <class F>
ArrayXd plancherel_weights(const F& u) {
    const auto& geo = *u.geo();
    if constexpr (requires { geo.quad_weights_freq(); }) {
        return geo.quad_weights_freq();
    } else {
        ArrayXd w = ArrayXd::Constant(geo.points(), std::pow(2.0 * geo.half_width(), geo.dim()));
        w[0] = 0.0;
        return w;
    }
}

template <class F>
double window_leakage(const F& u) {
    const auto& geo = *u.geo();
    const ArrayXd& mags = geo.freq_mags();
    ArrayXd w = plancherel_weights(u);
    const ArrayXcd& sp = u.spectrum();
    double inside = 0.0, total = 0.0;
    for (Eigen::Index i = 0; i < sp.size(); ++i) {
        if (geo.has_zero_mode() && mags[i] == 0.0) continue;
        double m = w[i] * std::norm(sp[i]);
        double win = geo.dyadic().window_sum(mags[i]);
        total += m;
        inside += m * win * win;
    }
    if (total == 0.0) return 0.0;
    double out = total - inside;
    return out > 0.0 ? std::sqrt(out / total) : 0.0;
}

}  // namespace detail

/// Littlewood-Paley block P_j u.  Outside [j_min, j_max] the result carries a
/// truncation flag (and is numerically negligible by construction).
template <class F>
F lp_project(const F& u, int j) {
    return u.block(j);
}

/// Sum of all in-window blocks; equals u minus its mean on band-limited data.
template <class F>
F reconstruct_band(const F& u) {
    const auto& geo = *u.geo();
    ArrayXcd masked = u.spectrum();
    for (Eigen::Index i = 0; i < masked.size(); ++i) masked[i] *= geo.dyadic().window_sum(geo.freq_mags()[i]);
    Flags flags = u.flags();
    flags.leakage = std::max(flags.leakage, detail::window_leakage(u));
    return F::from_spectrum(u.geo(), masked, flags);
}

/// Several Besov norms of one field in a single block sweep.
template <class F>
std::vector<BesovResult> besov_multi(const F& u, std::span<const NormSpec> specs,
                                     FineIndex fine = FineIndex::l2) {
    const auto& geo = *u.geo();
    const auto& sys = geo.dyadic();
    std::vector<BesovResult> out(specs.size());
    double leak = detail::window_leakage(u);
    for (std::size_t k = 0; k < specs.size(); ++k) {
        out[k].leakage = leak;
        out[k].regime_warning = specs[k].p_int > 1.0 && specs[k].s >= geo.norm_dim() / specs[k].p_int;
    }
    const ArrayXcd& sp = u.spectrum();
    ArrayXcd masked(sp.size());
    for (int j = sys.j_min; j <= sys.j_max; ++j) {
        for (Eigen::Index i = 0; i < sp.size(); ++i) masked[i] = sp[i] * sys.psi(j, geo.freq_mags()[i]);
        F blk = F::from_spectrum(u.geo(), masked);
        for (std::size_t k = 0; k < specs.size(); ++k) {
            double bn = lp_norm(blk, specs[k].p_int);
            out[k].block_norms.emplace_back(j, bn);
            double term = std::pow(2.0, j * specs[k].s) * bn;
            if (fine == FineIndex::l2)
                out[k].value += term * term;
            else
                out[k].value = std::max(out[k].value, term);
        }
    }
    if (fine == FineIndex::l2)
        for (auto& r : out) r.value = std::sqrt(r.value);
    return out;
}

/// || 2^{js} ||P_j u||_{L^p} ||_{l^2} over the truncated dyadic window.
template <class F>
BesovResult besov_norm(const F& u, const NormSpec& spec) {
    return besov_multi(u, std::span<const NormSpec>(&spec, 1))[0];
}

/// The sup-over-j variant (fine index infinity), as used by the Leibniz rule.
template <class F>
BesovResult besov_sup_norm(const F& u, const NormSpec& spec) {
    return besov_multi(u, std::span<const NormSpec>(&spec, 1), FineIndex::sup)[0];
}

/// Direct multiplier Sobolev norm |||grad|^s u||_{L^2} via Plancherel
/// (independent of the block decomposition; used as its oracle).
template <class F>
double sobolev_norm(const F& u, double s) {
    const auto& geo = *u.geo();
    const ArrayXcd& sp = u.spectrum();
    ArrayXd w = detail::plancherel_weights(u);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < sp.size(); ++i) {
        if (geo.has_zero_mode() && geo.freq_mags()[i] == 0.0) continue;
        acc += w[i] * std::pow(geo.freq_mags()[i], 2.0 * s) * std::norm(sp[i]);
    }
    return std::sqrt(acc);
}

/// ||f||_{H^s} + ||g||_{H^{s-1}}, the data norm of the Strichartz estimates.
template <class F>
double sobolev_pair_norm(const F& f, const F& g, double s) {
    if (f.geo() != g.geo()) throw ConfigError("pair norm needs a shared grid");
    return sobolev_norm(f, s) + sobolev_norm(g, s - 1.0);
}

template <class F>
F pointwise_product(const F& a, const F& b) {
    if (a.geo() != b.geo()) throw ConfigError("pointwise product needs a shared grid");
    return F::from_samples(a.geo(), a.samples() * b.samples(), a.flags().merged(b.flags()));
}

struct RatioValue {
    double value = 0.0;
    bool defined = false;
};

/// ||P_j u||_{p_hi} / (2^{j n (1/p_lo - 1/p_hi)} ||P_j u||_{p_lo}).
template <class F>
RatioValue bernstein_ratio(const F& u, int j, double p_lo, double p_hi) {
    if (p_lo > p_hi) throw DomainError("bernstein_ratio needs p_lo <= p_hi");
    const F& blk = u.block(j);
    double lo = lp_norm(blk, p_lo);
    if (lo == 0.0) return {};
    double hi = lp_norm(blk, p_hi);
    double inv_lo = std::isinf(p_lo) ? 0.0 : 1.0 / p_lo;
    double inv_hi = std::isinf(p_hi) ? 0.0 : 1.0 / p_hi;
    double factor = std::pow(2.0, j * u.geo()->norm_dim() * (inv_lo - inv_hi));
    return {hi / (factor * lo), true};
}

/// ||uv||_{B^s_p} / ((||v||_inf + ||v||_{B^{n/p}_{p,inf}}) ||u||_{B^s_p}).
template <class F>
RatioValue leibniz_ratio(const F& u, const F& v, const NormSpec& spec) {
    int n = u.geo()->norm_dim();
    if (!(spec.s > 0.0) || !(spec.s < n / spec.p_int))
        throw DomainError("leibniz_ratio needs 0 < s < n/p");
    double num = besov_norm(pointwise_product(u, v), spec).value;
    double v_part = lp_norm(v, std::numeric_limits<double>::infinity()) +
                    besov_sup_norm(v, NormSpec{spec.p_int, n / spec.p_int}).value;
    double den = v_part * besov_norm(u, spec).value;
    if (den == 0.0) return {};
    return {num / den, true};
}

template <class F>
F pointwise_abs_pow(const F& u, double p) {
    if (p <= 1.0) throw DomainError("nonlinearity power must exceed 1");
    ArrayXcd out = u.samples().abs().pow(p);
    return F::from_samples(u.geo(), std::move(out), u.flags());
}

/// || |u|^p ||_{B^s_r} / (||u||_{B^0_m}^{p-1} ||u||_{B^s_l}) with the index
/// relation 1/r = (p-1)/m + 1/l enforced.
template <class F>
RatioValue chain_rule_ratio(const F& u, double p, double s, double r, double m, double l) {
    if (!(p > 1.0)) throw DomainError("chain rule needs p > 1");
    if (!(s > 0.0 && s < p)) throw DomainError("chain rule needs 0 < s < p");
    if (!(r > 1.0 && r <= 2.0 && l >= 2.0 && m >= 2.0)) throw ConfigError("chain rule index ranges violated");
    if (std::abs(1.0 / r - (p - 1.0) / m - 1.0 / l) > 1e-12)
        throw ConfigError("chain rule index relation 1/r = (p-1)/m + 1/l violated");
    double num = besov_norm(pointwise_abs_pow(u, p), NormSpec{r, s}).value;
    double den = std::pow(besov_norm(u, NormSpec{m, 0.0}).value, p - 1.0) *
                 besov_norm(u, NormSpec{l, s}).value;
    if (den == 0.0) return {};
    return {num / den, true};
}

/// Profile-driven variant: (r, m, l) = (r1, r, r0) and s = s_c - s0, with the
/// index relation and the 0 < s_c - s0 < p window checked exactly first.
template <class F>
RatioValue chain_rule_ratio(const F& u, const ExponentProfile& pr) {
    if (pr.inv_r1 != (pr.p - Rational(1)) * pr.inv_r + pr.inv_r0)
        throw ConfigError("profile index relation violated");
    Rational gap = pr.gap();
    if (!(gap > Rational(0) && gap < pr.p)) throw ConfigError("s_c - s0 outside (0, p)");
    double num = besov_norm(pointwise_abs_pow(u, pr.p.to_double()),
                            NormSpec{1.0 / pr.inv_r1.to_double(), gap.to_double()})
                     .value;
    double den = std::pow(besov_norm(u, NormSpec{1.0 / pr.inv_r.to_double(), 0.0}).value,
                          pr.p.to_double() - 1.0) *
                 besov_norm(u, NormSpec{1.0 / pr.inv_r0.to_double(), gap.to_double()}).value;
    if (den == 0.0) return {};
    return {num / den, true};
}

}  // namespace wavelab
