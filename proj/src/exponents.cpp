#include "wavelab/exponents.hpp"

namespace wavelab {

namespace {

Rational kHalf() { return Rational(1, 2); }

Rational p_h1_of(int n) {
    if (n < 3) throw DomainError("p_H1 requires n >= 3");
    return Rational(1) + Rational(4, n - 2);
}

void require_supercritical(int n, const Rational& p) {
    if (p <= p_h1_of(n))
        throw OutOfScopeError("p = " + p.str() + " is not energy supercritical for n = " + std::to_string(n) +
                              " (needs p > " + p_h1_of(n).str() + ")");
}

}  // namespace

bool RangeReport::contains(const Rational& p) const {
    AlgebraicValue pv{p};
    for (const auto& iv : intervals) {
        bool above = compare(pv, iv.lo) > 0;
        bool below = !iv.hi || compare(pv, *iv.hi) < 0;
        if (above && below) return true;
    }
    return false;
}

CriticalPowers critical_powers(int n) {
    if (n < 2) throw DomainError("critical powers need n >= 2");
    // positive root of (n-1)p^2 - (n+1)p - 2 = 0
    Rational a(n - 1), b(-(n + 1)), c(-2);
    Rational disc = b.squared() - Rational(4) * a * c;
    AlgebraicValue p_c(-b / (Rational(2) * a), (Rational(2) * a).inverse(), disc);
    CriticalPowers out;
    out.n = n;
    out.p_c = p_c;
    out.p_conf = Rational(1) + Rational(4, n - 1);
    if (n >= 3) out.p_h1 = p_h1_of(n);
    return out;
}

Rational sobolev_critical(int n, const Rational& p) {
    if (p <= Rational(1)) throw DomainError("s_c requires p > 1");
    return Rational(n, 2) - Rational(2) / (p - Rational(1));
}

Rational smoothness_floor(int n, const Rational& p) {
    require_supercritical(n, p);
    Rational deficit = rational_max(Rational(2) - p, Rational(0));
    return Rational(1) - deficit / Rational(n - 2);
}

bool is_sigma_admissible(const Rational& inv_q, const Rational& inv_r, const Rational& sigma) {
    if (inv_q.is_negative() || inv_r.is_negative()) throw DomainError("inverse exponents must be >= 0");
    if (sigma <= Rational(0)) throw DomainError("sigma must be positive");
    if (inv_q > kHalf() || inv_r > kHalf()) return false;                       // q, r in [2, inf]
    if (inv_q == kHalf() && inv_r.is_zero() && sigma == Rational(1)) return false;  // (2, inf, 1)
    return inv_q <= sigma * (kHalf() - inv_r);
}

bool is_sigma_acceptable(const Rational& inv_q, const Rational& inv_r, const Rational& sigma) {
    if (inv_q.is_negative() || inv_r.is_negative()) throw DomainError("inverse exponents must be >= 0");
    if (sigma <= Rational(0)) throw DomainError("sigma must be positive");
    if (inv_q.is_zero() && inv_r == kHalf()) return true;  // (q, r) = (inf, 2)
    if (inv_q.is_zero() || inv_q > Rational(1)) return false;  // q in [1, inf)
    if (inv_r > kHalf()) return false;                           // r in [2, inf]
    return inv_q < Rational(2) * sigma * (kHalf() - inv_r);
}

std::vector<ChainVerdict> check_foschi(const Rational& inv_q, const Rational& inv_r,
                                       const Rational& inv_qt, const Rational& inv_rt,
                                       const Rational& sigma) {
    for (const Rational* v : {&inv_q, &inv_r, &inv_qt, &inv_rt})
        if (v->is_negative() || *v > Rational(1)) throw DomainError("inverse exponents must lie in [0, 1]");

    std::vector<ChainVerdict> out;
    Rational lhs = inv_q + inv_qt;
    Rational rhs = sigma * (Rational(1) - inv_r - inv_rt);
    ChainVerdict scaling = ChainVerdict::eq("foschi-scaling", lhs, rhs);
    scaling.holds = scaling.holds && lhs < Rational(1);
    out.push_back(scaling);
    out.push_back(ChainVerdict::leq("foschi-r", (sigma - Rational(1)) * inv_r, sigma * inv_rt));
    out.push_back(ChainVerdict::leq("foschi-rt", (sigma - Rational(1)) * inv_rt, sigma * inv_r));
    return out;
}

ExponentProfile exponent_profile(int n, const Rational& p) {
    if (n < 4) throw DomainError("exponent profiles need n >= 4");
    require_supercritical(n, p);

    ExponentProfile pr;
    pr.n = n;
    pr.p = p;
    pr.sigma = Rational(n - 1, 2);
    pr.s_c = sobolev_critical(n, p);
    pr.s0 = smoothness_floor(n, p);

    if (p <= pr.s_c - pr.s0) {
        RangeReport range = admissible_range(n);
        if (!range.a || !range.b) throw ConfigError("smoothness gap hit without excluded interval");
        throw SmoothnessGapError(n, p, *range.a, *range.b);
    }

    const Rational one(1), two(2);
    if (p < two) {
        // Low-power case; only reachable for n > 6 since p_H1 >= 2 otherwise.
        pr.kind = ProfileCase::C1;
        pr.inv_q = kHalf();
        pr.inv_q0 = kHalf();
        pr.inv_r0 = Rational(n - 5, 2 * n) + Rational(1, n - 2) - p / Rational(n * (n - 2));
        pr.inv_r = (two / (p - one) - kHalf()) / Rational(n);
    } else {
        pr.kind = ProfileCase::C2;
        pr.inv_q = p.inverse();
        pr.inv_q0 = p.inverse();
        pr.inv_r = (two / (p - one) - p.inverse()) / Rational(n);
        pr.inv_r0 = kHalf() - (one + p.inverse()) / Rational(n);
    }
    pr.inv_q1 = (p - one) * pr.inv_q + pr.inv_q0;
    pr.inv_r1 = (p - one) * pr.inv_r + pr.inv_r0;

    if (pr.kind == ProfileCase::C1) {
        pr.inv_qt = one - pr.inv_q1;
        pr.inv_r_beta = Rational(n - 4) / Rational(2 * (n - 2)) + p / Rational(2 * (n - 2));
        pr.inv_r_alpha = Rational(n - 3, n - 1) * *pr.inv_r_beta;
    }

    // Construction-time identities; violations indicate a defect, not bad input.
    if (pr.s_c != Rational(n, 2) - pr.inv_q - Rational(n) * pr.inv_r)
        throw ConfigError("scaling identity violated in exponent profile");
    if (pr.inv_r > pr.inv_r0) throw ConfigError("r >= r0 violated in exponent profile");
    Rational s0_case = Rational(n, 2) - pr.inv_q0 - Rational(n) * pr.inv_r0;
    if (pr.kind == ProfileCase::C1 && s0_case != pr.s0)
        throw ConfigError("s0 branch disagrees with closed form");
    return pr;
}

RangeReport admissible_range(int n) {
    if (n < 4) throw DomainError("admissible range needs n >= 4");
    RangeReport out;
    out.n = n;
    AlgebraicValue p_h1{p_h1_of(n)};

    Rational disc_a = Rational(n * n - 6 * n + 10).squared() - Rational(32 * (n - 1) * (n - 2));
    Rational disc_b = Rational(n - 4).squared() - Rational(32);

    if (disc_a.is_negative() || disc_b.is_negative()) {
        out.intervals.push_back(RangeInterval{p_h1, std::nullopt});
        return out;
    }
    AlgebraicValue a(Rational(n * n - 2 * n + 6, 4 * (n - 1)), Rational(-1, 4 * (n - 1)), disc_a);
    AlgebraicValue b(Rational(n, 4), Rational(1, 4), disc_b);
    out.a = a;
    out.b = b;
    out.intervals.push_back(RangeInterval{p_h1, a});
    out.intervals.push_back(RangeInterval{b, std::nullopt});
    return out;
}

std::vector<ChainVerdict> verify_lemma_chain(int n, const Rational& p) {
    if (n < 4) throw DomainError("lemma chain needs n >= 4");
    require_supercritical(n, p);

    const Rational zero(0), one(1), two(2);
    ExponentProfile pr = exponent_profile(n, p);
    std::vector<ChainVerdict> out;

    out.push_back(ChainVerdict::eq("scaling-identity", pr.s_c,
                                   Rational(n, 2) - pr.inv_q - Rational(n) * pr.inv_r));
    out.push_back(ChainVerdict::eq("s0-closed-form", pr.s0,
                                   one - rational_max(two - p, zero) / Rational(n - 2)));
    out.push_back(ChainVerdict::eq("q1-identity", pr.inv_q1, (p - one) * pr.inv_q + pr.inv_q0));
    out.push_back(ChainVerdict::eq("r1-identity", pr.inv_r1, (p - one) * pr.inv_r + pr.inv_r0));
    out.push_back(ChainVerdict::leq("r-ge-r0", pr.inv_r, pr.inv_r0));

    if (pr.kind == ProfileCase::C1) {
        auto H = [&](const Rational& q) {
            return (q - two) / Rational(n - 2) + two / (q - one) - Rational(n - 2, 2);
        };
        Rational p_h1 = p_h1_of(n);
        out.push_back(ChainVerdict::leq("H-at-pH1", H(p_h1), zero));
        out.push_back(ChainVerdict::eq("H-at-pH1-value", H(p_h1), Rational(6 - n) / Rational(n - 2).squared()));
        out.push_back(ChainVerdict::leq("H-at-2", H(two), zero));
        out.push_back(ChainVerdict::eq("H-at-2-value", H(two), Rational(6 - n, 2)));
        out.push_back(ChainVerdict::leq("H-at-p", H(p), zero));
        out.push_back(ChainVerdict::eq("r-vs-r0-is-H", pr.inv_r0 - pr.inv_r, -H(p) / Rational(n)));

        Rational window = Rational(n - 3, 2 * (n - 1));  // admissibility cap for q = 2
        out.push_back(ChainVerdict::leq("r-nonneg", zero, pr.inv_r));
        out.push_back(ChainVerdict::leq("r-window", pr.inv_r, window));
        out.push_back(ChainVerdict::leq("r0-window", pr.inv_r0, window));
        Rational inv_r0_at_1 = Rational(n - 5, 2 * n) + Rational(1, n - 2) - one / Rational(n * (n - 2));
        out.push_back(ChainVerdict::leq("r0-at-p1", inv_r0_at_1, window));
        out.push_back(ChainVerdict::leq("r0-at-p1-quadratic", zero, Rational(n * n - 7 * n + 8)));
        out.push_back(ChainVerdict::decided(
            "r0-at-p1-equivalence",
            (inv_r0_at_1 <= window) == (Rational(n * n - 7 * n + 8) >= zero)));

        const Rational inv_qt = *pr.inv_qt;
        const Rational inv_ra = *pr.inv_r_alpha;
        const Rational inv_rb = *pr.inv_r_beta;
        out.push_back(ChainVerdict::eq("qt-value", inv_qt, one - p / two));
        out.push_back(ChainVerdict::eq("r1-value", pr.inv_r1, Rational(n) / Rational(2 * (n - 2)) - p / Rational(2 * (n - 2))));
        out.push_back(ChainVerdict::lt("r1-below-lebesgue", kHalf(), pr.inv_r1));
        out.push_back(ChainVerdict::lt("r1-above-lebesgue", pr.inv_r1, one));

        Rational margin = inv_qt - two * pr.sigma * (kHalf() - inv_rb);
        out.push_back(ChainVerdict::eq("accept-margin-value", margin, -(two - p) / Rational(2 * (n - 2))));
        out.push_back(ChainVerdict::lt("accept-margin", margin, zero));
        out.push_back(ChainVerdict::decided("pair-2-ralpha-acceptable",
                                            is_sigma_acceptable(kHalf(), inv_ra, pr.sigma)));
        out.push_back(ChainVerdict::decided("pair-qt-rbeta-acceptable",
                                            is_sigma_acceptable(inv_qt, inv_rb, pr.sigma)));
        out.push_back(ChainVerdict::eq("half-is-sigma-window", kHalf(), pr.sigma * (kHalf() - window)));
        out.push_back(ChainVerdict::lt("ralpha-inside-window", inv_ra, window));

        auto foschi = check_foschi(kHalf(), inv_ra, inv_qt, inv_rb, pr.sigma);
        for (auto& v : foschi) {
            v.id = "c1-" + v.id;
            out.push_back(v);
        }
        out.push_back(ChainVerdict::eq("foschi-shared-value", pr.sigma * (one - inv_ra - inv_rb),
                                       (Rational(3) - p) / two));
        out.push_back(ChainVerdict::eq("foschi-shared-value-qt", (Rational(3) - p) / two, kHalf() + inv_qt));
        out.push_back(ChainVerdict::eq("ralpha-relation", inv_ra, (pr.sigma - one) / pr.sigma * inv_rb));

        out.push_back(ChainVerdict::leq("r0-ge-ralpha", pr.inv_r0, inv_ra));
        out.push_back(ChainVerdict::leq("r-ge-ralpha", pr.inv_r, inv_ra));
        out.push_back(ChainVerdict::decided(
            "r0-ge-ralpha-equivalence",
            (pr.inv_r0 <= inv_ra) == (p >= one + Rational(4, n + 1)),
            p - (one + Rational(4, n + 1))));
    } else {
        out.push_back(ChainVerdict::leq("q-adm-r0", p.inverse(), pr.sigma * (kHalf() - pr.inv_r0)));
        out.push_back(ChainVerdict::decided(
            "q-adm-r0-equivalence",
            (p.inverse() <= pr.sigma * (kHalf() - pr.inv_r0)) == (p >= Rational(n + 1, n - 1)),
            p - Rational(n + 1, n - 1)));
        out.push_back(ChainVerdict::leq("r0-vs-r", pr.inv_r, pr.inv_r0));
        out.push_back(ChainVerdict::decided("r0-vs-r-equivalence",
                                            (pr.inv_r <= pr.inv_r0) == (p >= Rational(n + 2, n - 2)),
                                            p - Rational(n + 2, n - 2)));
        out.push_back(ChainVerdict::decided("pair-q-r-admissible",
                                            is_sigma_admissible(pr.inv_q, pr.inv_r, pr.sigma)));
        out.push_back(ChainVerdict::decided("pair-q0-r0-admissible",
                                            is_sigma_admissible(pr.inv_q0, pr.inv_r0, pr.sigma)));
        // Dual pair (q1', r1') must collapse to the energy pair (inf, 2).
        out.push_back(ChainVerdict::eq("q1-dual-inf", one - pr.inv_q1, zero));
        out.push_back(ChainVerdict::eq("r1-dual-2", one - pr.inv_r1, kHalf()));
        out.push_back(ChainVerdict::decided("pair-energy-admissible",
                                            is_sigma_admissible(zero, kHalf(), pr.sigma)));
        out.push_back(ChainVerdict::eq("s0-is-1", pr.s0, one));
    }
    return out;
}

int smoothness_index(int n, const Rational& p) {
    Rational gap = sobolev_critical(n, p) - smoothness_floor(n, p);
    if (p <= gap) {
        RangeReport range = admissible_range(n);
        if (!range.a || !range.b) throw ConfigError("smoothness gap hit without excluded interval");
        throw SmoothnessGapError(n, p, *range.a, *range.b);
    }
    return static_cast<int>(gap.floor());
}

}  // namespace wavelab
