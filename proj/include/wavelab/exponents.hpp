#pragma once

#include "wavelab/algebraic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wavelab {

/// The power p falls in the excluded interval [a, b] where p <= s_c - s_0.
struct SmoothnessGapError : DomainError {
    SmoothnessGapError(int n_, Rational p_, AlgebraicValue a_, AlgebraicValue b_)
        : DomainError("p = " + p_.str() + " lies in the excluded smoothness gap [" + a_.str() + ", " +
                      b_.str() + "] for n = " + std::to_string(n_)),
          n(n_),
          p(p_),
          a(a_),
          b(b_) {}
    int n;
    Rational p;
    AlgebraicValue a, b;
};

/// Critical powers of the dimension: the positive root p_c of
/// (n-1)p^2 - (n+1)p - 2 = 0, the conformal power 1 + 4/(n-1), and the
/// energy-critical power 1 + 4/(n-2) (absent for n = 2).
struct CriticalPowers {
    int n = 0;
    AlgebraicValue p_c;
    Rational p_conf;
    std::optional<Rational> p_h1;
};

enum class ProfileCase { C1, C2 };

inline const char* to_string(ProfileCase c) { return c == ProfileCase::C1 ? "C1" : "C2"; }

/// Full tuple of Strichartz exponents attached to (n, p).  All Lebesgue
/// indices are stored as inverses so that q = infinity is the rational 0.
struct ExponentProfile {
    int n = 0;
    Rational p;
    Rational sigma;  // (n-1)/2
    Rational s_c;    // n/2 - 2/(p-1)
    Rational s0;     // 1 - max(2-p, 0)/(n-2)
    ProfileCase kind = ProfileCase::C2;

    Rational inv_q, inv_r;
    Rational inv_q0, inv_r0;
    Rational inv_q1, inv_r1;

    // Auxiliary pair of the low-power case only.
    std::optional<Rational> inv_qt;       // 1/q~ = 1 - 1/q1
    std::optional<Rational> inv_r_alpha;  // ((n-3)/(n-1)) * 1/r~_beta
    std::optional<Rational> inv_r_beta;   // (n-4+p)/(2(n-2))

    Rational gap() const { return s_c - s0; }  // s_c - s0, the demanded nonlinear smoothness
};

struct RangeInterval {
    AlgebraicValue lo;
    std::optional<AlgebraicValue> hi;  // absent = unbounded above
};

/// Admissible powers for dimension n: a single ray (p_H1, inf) for n <= 9,
/// (p_H1, a) u (b, inf) once both radicands turn non-negative.
struct RangeReport {
    int n = 0;
    std::vector<RangeInterval> intervals;
    std::optional<AlgebraicValue> a, b;

    /// Exact membership test, endpoints excluded (open intervals).
    bool contains(const Rational& p) const;
};

/// Outcome of one exact inequality check.
struct ChainVerdict {
    std::string id;
    Rational lhs, rhs;
    bool strict = false;  // lhs < rhs demanded rather than lhs <= rhs
    bool holds = false;
    Rational margin;  // rhs - lhs

    static ChainVerdict leq(std::string id, Rational lhs, Rational rhs) {
        return ChainVerdict{std::move(id), lhs, rhs, false, lhs <= rhs, rhs - lhs};
    }
    static ChainVerdict lt(std::string id, Rational lhs, Rational rhs) {
        return ChainVerdict{std::move(id), lhs, rhs, true, lhs < rhs, rhs - lhs};
    }
    static ChainVerdict eq(std::string id, Rational lhs, Rational rhs) {
        return ChainVerdict{std::move(id), lhs, rhs, false, lhs == rhs, rhs - lhs};
    }
    /// Records an already-decided boolean with an informative margin.
    static ChainVerdict decided(std::string id, bool ok, Rational margin = Rational(0)) {
        return ChainVerdict{std::move(id), Rational(0), margin, false, ok, margin};
    }
};

inline bool all_hold(const std::vector<ChainVerdict>& vs) {
    for (const auto& v : vs)
        if (!v.holds) return false;
    return true;
}

CriticalPowers critical_powers(int n);

/// Scale-critical Sobolev index n/2 - 2/(p-1); requires p > 1.
Rational sobolev_critical(int n, const Rational& p);

/// Smoothness floor s0 = 1 - max(2-p, 0)/(n-2); requires p > p_H1(n).
Rational smoothness_floor(int n, const Rational& p);

/// Keel-Tao admissibility: q, r in [2, inf], (q, r, sigma) != (2, inf, 1),
/// 1/q <= sigma (1/2 - 1/r).  Inverse exponents must be non-negative.
bool is_sigma_admissible(const Rational& inv_q, const Rational& inv_r, const Rational& sigma);

/// Foschi acceptability: q in [1, inf), r in [2, inf],
/// 1/q < 2 sigma (1/2 - 1/r), or (q, r) = (inf, 2).
bool is_sigma_acceptable(const Rational& inv_q, const Rational& inv_r, const Rational& sigma);

/// The three gating conditions of the inhomogeneous estimate for the pair
/// ((q, r), (q~, r~)): scaling equality with sum < 1, and the two
/// (sigma-1)/r <= sigma/r~ conditions.
std::vector<ChainVerdict> check_foschi(const Rational& inv_q, const Rational& inv_r,
                                       const Rational& inv_qt, const Rational& inv_rt,
                                       const Rational& sigma);

/// Builds the full exponent tuple for (n, p).  Throws OutOfScopeError for
/// p <= p_H1 and SmoothnessGapError when p <= s_c - s0.
ExponentProfile exponent_profile(int n, const Rational& p);

RangeReport admissible_range(int n);

/// Every inequality used to justify the key linear estimate at (n, p),
/// evaluated exactly; all verdicts must hold for in-range p.
std::vector<ChainVerdict> verify_lemma_chain(int n, const Rational& p);

/// k = floor(s_c - s0), the differentiability order demanded of generalized
/// nonlinearities; requires p > s_c - s0.
int smoothness_index(int n, const Rational& p);

}  // namespace wavelab
