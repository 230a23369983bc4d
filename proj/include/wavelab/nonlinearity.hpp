#pragma once

#include "wavelab/exponents.hpp"
#include "wavelab/spacetime.hpp"

#include <functional>

namespace wavelab {

/// Right-hand side of the equation: the power nonlinearity |u|^p, or a
/// user-supplied f with the regularity bookkeeping of the generalized class
/// (f in C^k, vanishing derivatives at 0, Hoelder-continuous k-th derivative).
struct NonlinearitySpec {
    enum class Kind { power, generalized };
    Kind kind = Kind::power;
    double p = 2.0;
    std::function<Complex(Complex)> evaluator;  // generalized only
    int order_k = 0;                            // demanded smoothness order
    double hoelder_constant = 0.0;              // filled by check_nonlinearity

    static NonlinearitySpec power(double p_) {
        NonlinearitySpec s;
        s.kind = Kind::power;
        s.p = p_;
        return s;
    }
    static NonlinearitySpec generalized(double p_, std::function<Complex(Complex)> f, int k) {
        NonlinearitySpec s;
        s.kind = Kind::generalized;
        s.p = p_;
        s.evaluator = std::move(f);
        s.order_k = k;
        return s;
    }

    Complex operator()(Complex z) const {
        if (kind == Kind::power) return std::pow(std::abs(z), p);
        return evaluator(z);
    }
};

template <class F>
F apply_nonlinearity(const F& u, const NonlinearitySpec& spec) {
    if (spec.p <= 1.0) throw DomainError("nonlinearity power must exceed 1");
    if (spec.kind == NonlinearitySpec::Kind::power) return pointwise_abs_pow(u, spec.p);
    ArrayXcd out(u.samples().size());
    for (Eigen::Index i = 0; i < out.size(); ++i) out[i] = spec.evaluator(u.samples()[i]);
    return F::from_samples(u.geo(), std::move(out), u.flags());
}

template <class F>
SpaceTimeField<F> apply_nonlinearity(const SpaceTimeField<F>& u, const NonlinearitySpec& spec) {
    std::vector<F> nodes;
    nodes.reserve(u.nodes());
    for (int m = 0; m < u.nodes(); ++m) nodes.push_back(apply_nonlinearity(u.node(m), spec));
    return SpaceTimeField<F>(u.grid(), std::move(nodes));
}

struct NonlinearityCheck {
    bool pass = false;
    std::string reason;
    double worst_hoelder_ratio = 0.0;   // measured Hoelder constant of f^{(k)}
    double worst_derivative_at_zero = 0.0;
    bool high_power_branch = false;     // p >= k + 1 (Lipschitz-type) vs p < k + 1
};

/// Numerical audit of the generalized-nonlinearity conditions: f in C^k along
/// the real slice with f^{(j)}(0) = 0 for j <= k, plus the k-th derivative
/// Hoelder condition with exponent min(p - k, 1) on random pairs.
NonlinearityCheck check_nonlinearity(const NonlinearitySpec& spec, const ExponentProfile& profile,
                                     int samples, std::uint64_t seed);

}  // namespace wavelab
