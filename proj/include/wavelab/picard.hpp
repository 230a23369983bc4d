#pragma once

#include "wavelab/estimates.hpp"
#include "wavelab/lightcone.hpp"
#include "wavelab/nonlinearity.hpp"
#include "wavelab/propagator.hpp"

namespace wavelab {

/// Smallness thresholds from the measured constants:
///   eps_0 = (2^p C)^{-1/(p-1)}        so that C (2 eps)^p <= eps,
///   eps_1 = (4 C1^3)^{-1/(p-1)} / 2   so that 2 C1^3 (2 eps_1)^{p-1} = 1/2.
struct Thresholds {
    double eps0 = 0.0;
    double eps1 = 0.0;
};

inline Thresholds thresholds(double C, double C1, double p) {
    if (C <= 0.0 || C1 <= 0.0) throw DomainError("constants must be positive");
    if (p <= 1.0) throw DomainError("power must exceed 1");
    Thresholds t;
    t.eps0 = std::pow(std::pow(2.0, p) * C, -1.0 / (p - 1.0));
    t.eps1 = 0.5 * std::pow(4.0 * C1 * C1 * C1, -1.0 / (p - 1.0));
    return t;
}

/// One application of the solution map: Phi(u) = S(t)(eps f, eps g) + G(F(u)).
/// `bound_report` receives the measured-constant sanity check
/// ||Phi(u)||_X <= ||S(f,g)||_X + C ||u||_X^p when requested.
struct PhiBound {
    double phi_norm = 0.0;
    double linear_norm = 0.0;
    double input_norm = 0.0;
    bool constant_violated = false;
};

template <class F>
SpaceTimeField<F> phi_map(const SpaceTimeField<F>& u, const CauchyData<F>& data,
                          const NonlinearitySpec& spec, const ExponentProfile& profile,
                          const TimeGrid& grid, const MeasuredConstants* constants = nullptr,
                          PhiBound* bound_report = nullptr) {
    auto linear = homogeneous_evolve(data, grid);
    auto out = linear + duhamel(apply_nonlinearity(u, spec));
    if (bound_report && constants) {
        bound_report->phi_norm = xt_norm(out, profile);
        bound_report->linear_norm = xt_norm(linear, profile);
        bound_report->input_norm = xt_norm(u, profile);
        double rhs = bound_report->linear_norm +
                     constants->C * std::pow(bound_report->input_norm, spec.p);
        bound_report->constant_violated = bound_report->phi_norm > rhs * (1.0 + 1e-9);
    }
    return out;
}

enum class IterationVerdict { converged, norm_escape, max_iters };

inline const char* to_string(IterationVerdict v) {
    switch (v) {
        case IterationVerdict::converged: return "converged";
        case IterationVerdict::norm_escape: return "norm_escape";
        default: return "max_iters";
    }
}

/// Per-iterate record of the contraction study.
struct IterationReport {
    std::vector<double> xt_norms;           // ||u_m||_{X_T}
    std::vector<double> cone_differences;   // ||u_m - u_{m-1}|| on the cone
    std::vector<double> contraction_ratios; // consecutive difference ratios
    std::vector<bool> phi_bound_violations;
    double eps = 0.0, eps0 = 0.0, eps1 = 0.0;
    double data_norm_scale = 0.0;  // ||S(t)(f,g)||_{X_T} of the unit-amplitude data
    double weak_residual = -1.0;
    bool guaranteed_regime = false;
    IterationVerdict verdict = IterationVerdict::max_iters;
    int iterations = 0;
};

struct PicardOptions {
    int max_iters = 25;
    double stop_tol = 1e-9;  // relative cone-difference stop
    LightCone cone{3.0, 4.0, 0.5};
    bool exploratory = false;        // allow eps beyond min(eps0, eps1)
    bool start_from_linear = false;  // u_{-1} = S(t)(eps f, eps g) instead of 0
};

/// Weak residual of a candidate solution against the registered family of
/// tensor test bumps (radial backend).
double weak_residual(const SpaceTimeField<RadialField>& u, const SpaceTimeField<RadialField>& forcing,
                     const CauchyData<RadialField>& data);

/// The iteration u_{-1} = 0, u_m = Phi(u_{m-1}), with the guaranteed-regime
/// bookkeeping of the report.  Data is normalized so that the free evolution
/// has unit X_T norm; eps then equals ||S(t)(eps f, eps g)||_{X_T}.
std::pair<SpaceTimeField<RadialField>, IterationReport> picard_iterate(
    const CauchyData<RadialField>& data, const NonlinearitySpec& spec,
    const ExponentProfile& profile, const TimeGrid& grid, const MeasuredConstants& constants,
    const PicardOptions& opts = {});

struct LocalizationReport {
    std::vector<double> margins;
    std::vector<double> cone_differences;  // ||w - w_chi|| inside the cone per margin
    double forcing_scale = 0.0;
    bool pass = false;
};

/// Lemma-style localization check: w solves with forcing F, w_chi with chi F;
/// they must agree inside the cone for every cutoff margin.
LocalizationReport localization_check(const SpaceTimeField<RadialField>& forcing,
                                      const LightCone& cone, const std::vector<double>& margins,
                                      double tolerance = 1e-6);

struct UniquenessReport {
    double residual_1 = 0.0, residual_2 = 0.0;
    std::vector<double> cone_radii;
    std::vector<double> differences;   // relative L^{q0}L^{r0} cone differences
    double contraction_factor = 0.0;   // measured C (||u1||^{p-1} + ||u2||^{p-1})
    bool inputs_accepted = false;
    bool identical = false;
};

/// Declares two candidate solutions identical when their cone differences
/// vanish to tolerance over a sweep of radii, after both pass the residual
/// test for the same data.
UniquenessReport uniqueness_check(const SpaceTimeField<RadialField>& u1,
                                  const SpaceTimeField<RadialField>& u2,
                                  const CauchyData<RadialField>& data, const NonlinearitySpec& spec,
                                  const ExponentProfile& profile, const MeasuredConstants& constants,
                                  double residual_tol = 1e-4, double tolerance = 1e-6);

}  // namespace wavelab
