#include "wavelab/nonlinearity.hpp"

#include <cmath>
#include <random>

namespace wavelab {

namespace {

// k-th central finite difference of Re f along the real axis, step h
double derivative_fd(const std::function<Complex(Complex)>& f, int k, double x, double h) {
    // binomial stencil sum_{i} (-1)^i C(k,i) f(x + (k/2 - i) h) / h^k
    double acc = 0.0;
    double coeff = 1.0;
    for (int i = 0; i <= k; ++i) {
        double node = x + (k / 2.0 - i) * h;
        acc += coeff * f(Complex(node, 0.0)).real();
        coeff *= -(k - i) / static_cast<double>(i + 1);
    }
    return acc / std::pow(h, k);
}

}  // namespace

NonlinearityCheck check_nonlinearity(const NonlinearitySpec& spec, const ExponentProfile& profile,
                                     int samples, std::uint64_t seed) {
    if (spec.kind != NonlinearitySpec::Kind::generalized)
        throw ConfigError("check_nonlinearity audits generalized nonlinearities only");
    const int k = smoothness_index(profile.n, profile.p);
    if (spec.order_k != k)
        throw ConfigError("declared order k = " + std::to_string(spec.order_k) +
                          " does not match floor(s_c - s0) = " + std::to_string(k));

    NonlinearityCheck out;
    const double p = spec.p;
    out.high_power_branch = p >= k + 1;

    // f^{(j)}(0) = 0 for 0 <= j <= k, approached from both sides.  Fractional
    // powers reach zero only like h^{p-k}, so the criterion is decrease under
    // step shrinking rather than smallness at a fixed step.
    for (int j = 0; j <= k; ++j) {
        auto violation = [&](double h) {
            double centered = std::abs(derivative_fd(spec.evaluator, j, 0.0, h));
            double left = derivative_fd(spec.evaluator, j, -4 * h, h);
            double right = derivative_fd(spec.evaluator, j, 4 * h, h);
            return std::max(centered, std::abs(left - right));
        };
        double v_coarse = violation(1e-1);
        double v_mid = violation(1e-2);
        double v_fine = violation(1e-3);
        out.worst_derivative_at_zero = std::max(out.worst_derivative_at_zero, v_fine);
        bool vanishes = v_fine <= std::max(0.7 * v_coarse, 1e-8) && v_fine <= std::max(v_mid * 1.5, 1e-8);
        if (!vanishes) {
            out.pass = false;
            out.reason = "derivative order " + std::to_string(j) + " does not vanish at 0";
            return out;
        }
    }

    // Hoelder condition on f^{(k)}: split exactly as the smoothness class demands.
    std::mt19937_64 rng(detail::derive_seed(seed, 0x686f6cULL));
    std::uniform_real_distribution<double> mag(-2.0, 2.0);
    const double h = 1e-3;
    const double expo = out.high_power_branch ? 1.0 : p - k;
    double worst_ratio = 0.0;
    for (int i = 0; i < samples; ++i) {
        double a = mag(rng), b = mag(rng);
        if (std::abs(a - b) < 1e-6) continue;
        double fa = derivative_fd(spec.evaluator, k, a, h);
        double fb = derivative_fd(spec.evaluator, k, b, h);
        double num = std::abs(fa - fb);
        double den = out.high_power_branch
                         ? (std::pow(std::abs(a), p - k - 1) + std::pow(std::abs(b), p - k - 1)) *
                               std::abs(a - b)
                         : std::pow(std::abs(a - b), expo);
        if (den < 1e-10) continue;
        worst_ratio = std::max(worst_ratio, num / den);
    }
    out.worst_hoelder_ratio = worst_ratio;
    if (!std::isfinite(worst_ratio) || worst_ratio > 1e3) {
        out.pass = false;
        out.reason = "Hoelder condition on the k-th derivative fails";
        return out;
    }
    out.pass = true;
    out.reason = "ok";
    return out;
}

}  // namespace wavelab
