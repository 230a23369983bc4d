#pragma once

#include "wavelab/core.hpp"

#include <cmath>

namespace wavelab {

/// Smooth exp(-1/x)-type transition: identically 1 for t <= 1, identically 0
/// for t >= 2, strictly decreasing in between.
inline double dyadic_cut(double t) {
    if (t <= 1.0) return 1.0;
    if (t >= 2.0) return 0.0;
    double a = std::exp(-1.0 / (2.0 - t));
    double b = std::exp(-1.0 / (t - 1.0));
    return a / (a + b);
}

/// psi_0(t) = cut(t) - cut(2t), supported on [1/2, 2].
inline double dyadic_bump(double t) { return dyadic_cut(t) - dyadic_cut(2.0 * t); }

/// Family psi_j(xi) = psi_0(2^{-j} xi).  Scaling by exact powers of two makes
/// the sum over j telescope to cut(2^{-j_max} t) - cut(2^{-j_min+1} t)
/// without rounding residue, so the partition of unity holds to the last bit
/// on the covered band.
struct DyadicSystem {
    int j_min = -5;
    int j_max = 5;

    double psi(int j, double mag) const { return dyadic_bump(std::ldexp(mag, -j)); }

    ArrayXd psi(int j, const ArrayXd& mags) const {
        ArrayXd out(mags.size());
        for (Eigen::Index i = 0; i < mags.size(); ++i) out[i] = psi(j, mags[i]);
        return out;
    }

    /// Pointwise sum of all windows; equals 1 on [2^{j_min}, 2^{j_max}].
    double window_sum(double mag) const {
        return dyadic_cut(std::ldexp(mag, -j_max)) - dyadic_cut(std::ldexp(mag, -j_min + 1));
    }

    int blocks() const { return j_max - j_min + 1; }
    bool in_range(int j) const { return j >= j_min && j <= j_max; }
};

}  // namespace wavelab
