#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wavelab/exponents.hpp"
#include "wavelab/json_io.hpp"

#include <random>

using namespace wavelab;

namespace {
Rational grid_p(int n, int i, int denom = 1000) {
    return Rational(1) + Rational(4, n - 2) + Rational(i, denom);
}
}  // namespace

TEST_CASE("critical powers") {
    auto c2 = critical_powers(2);
    CHECK(c2.p_c == AlgebraicValue(Rational(3, 2), Rational(1, 2), Rational(17)));
    // residual of (n-1)p^2 - (n+1)p - 2 at p_c vanishes identically
    AlgebraicValue res = Rational(1) * (c2.p_c * c2.p_c) - Rational(3) * c2.p_c - AlgebraicValue(Rational(2));
    CHECK(res.sign() == 0);
    CHECK(!c2.p_h1.has_value());

    CHECK(critical_powers(5).p_conf == Rational(2));
    CHECK(*critical_powers(6).p_h1 == Rational(2));
    // p_c(4) = 2: discriminant 25 + 24 = 49 is a perfect square
    auto c4 = critical_powers(4);
    CHECK(c4.p_c.is_rational());
    CHECK(c4.p_c.as_rational() == Rational(2));
    CHECK(critical_powers(3).p_c == AlgebraicValue(Rational(1), Rational(1), Rational(2)));
    CHECK_THROWS_AS(critical_powers(1), DomainError);
}

TEST_CASE("quadratic residual vanishes for all n") {
    for (int n = 2; n <= 30; ++n) {
        auto c = critical_powers(n);
        AlgebraicValue res = Rational(n - 1) * (c.p_c * c.p_c) - Rational(n + 1) * c.p_c -
                             AlgebraicValue(Rational(2));
        CHECK(res.sign() == 0);
        CHECK(c.p_c.sign() > 0);
    }
}

TEST_CASE("p_c < p_conf < p_H1 exactly for n in [3, 30]") {
    for (int n = 3; n <= 30; ++n) {
        auto c = critical_powers(n);
        CHECK(compare(c.p_c, AlgebraicValue(c.p_conf)) < 0);
        CHECK(c.p_conf < *c.p_h1);
        CHECK(compare(c.p_c, AlgebraicValue(Rational(1))) > 0);
    }
}

TEST_CASE("sobolev critical index") {
    CHECK(sobolev_critical(4, Rational(3)) == Rational(1));
    // n = 10: s_c - 1 > p exactly on (2, 3)
    for (auto p : {Rational(21, 10), Rational(5, 2), Rational(29, 10)}) {
        Rational s_c = sobolev_critical(10, p);
        CHECK(s_c - Rational(1) > p);
    }
    // n = 9, p in (7/3, 3): s_c in (3, 7/2), so floor(s_c) = 3 > p
    for (auto p : {Rational(12, 5), Rational(13, 5), Rational(14, 5)}) {
        Rational s_c = sobolev_critical(9, p);
        CHECK(s_c > Rational(3));
        CHECK(s_c < Rational(7, 2));
        CHECK(Rational(s_c.floor()) > p);
    }
    CHECK_THROWS_AS(sobolev_critical(4, Rational(1)), DomainError);
    CHECK_THROWS_AS(sobolev_critical(4, Rational(1, 2)), DomainError);
}

TEST_CASE("smoothness floor") {
    CHECK(smoothness_floor(8, Rational(9, 5)) == Rational(29, 30));
    CHECK(smoothness_floor(10, Rational(3)) == Rational(1));
    CHECK(smoothness_floor(12, Rational(2)) == Rational(1));
    CHECK_THROWS_AS(smoothness_floor(8, Rational(3, 2)), OutOfScopeError);
    // C1 value n/2 - 1/q0 - n/r0 must agree with the closed form
    auto pr = exponent_profile(8, Rational(9, 5));
    CHECK(Rational(8, 2) - pr.inv_q0 - Rational(8) * pr.inv_r0 == Rational(29, 30));
}

TEST_CASE("sigma admissibility") {
    Rational half(1, 2), zero(0);
    CHECK(is_sigma_admissible(zero, half, Rational(1)));        // (inf, 2)
    CHECK(is_sigma_admissible(zero, half, Rational(7, 2)));
    CHECK_FALSE(is_sigma_admissible(half, zero, Rational(1)));  // excluded (2, inf, 1)
    CHECK(is_sigma_admissible(half, zero, Rational(3, 2)));
    // endpoint with equality: (1/q, 1/r) = (1/2, (n-3)/(2(n-1))), sigma = (n-1)/2
    for (int n = 4; n <= 12; ++n) {
        Rational inv_r(n - 3, 2 * (n - 1));
        Rational sigma(n - 1, 2);
        CHECK(is_sigma_admissible(half, inv_r, sigma));
        CHECK(half == sigma * (half - inv_r));
    }
    CHECK_FALSE(is_sigma_admissible(half, Rational(2, 5), Rational(1)));  // 1/2 > 1(1/10)
    CHECK_THROWS_AS(is_sigma_admissible(Rational(-1, 2), zero, Rational(1)), DomainError);
    CHECK_THROWS_AS(is_sigma_admissible(zero, half, Rational(0)), DomainError);
}

TEST_CASE("sigma acceptability") {
    Rational half(1, 2), zero(0);
    CHECK(is_sigma_acceptable(zero, half, Rational(7, 2)));  // (inf, 2)
    CHECK_FALSE(is_sigma_acceptable(Rational(1), half, Rational(1, 2)));  // strict inequality fails
    CHECK_FALSE(is_sigma_acceptable(zero, Rational(1, 3), Rational(2)));  // q = inf, r != 2
    // admissible with q < inf, r > 2 implies acceptable, on a rational grid
    for (int qi = 1; qi <= 8; ++qi)
        for (int ri = 1; ri <= 8; ++ri)
            for (int si = 1; si <= 6; ++si) {
                Rational inv_q(qi, 16), inv_r(ri, 18), sigma(si, 2);
                if (inv_r >= half) continue;
                if (!is_sigma_admissible(inv_q, inv_r, sigma)) continue;
                CHECK(is_sigma_acceptable(inv_q, inv_r, sigma));
            }
}

TEST_CASE("foschi conditions for the low-power auxiliary pairs") {
    auto pr = exponent_profile(8, Rational(9, 5));
    REQUIRE(pr.kind == ProfileCase::C1);
    Rational half(1, 2);
    auto verdicts = check_foschi(half, *pr.inv_r_alpha, *pr.inv_qt, *pr.inv_r_beta, pr.sigma);
    REQUIRE(verdicts.size() == 3);
    for (const auto& v : verdicts) CHECK(v.holds);
    // shared scaling value is (3-p)/2
    CHECK(verdicts[0].lhs == (Rational(3) - pr.p) / Rational(2));
    CHECK(verdicts[0].lhs == half + *pr.inv_qt);

    // swapped pair order: the second condition becomes the tight one
    auto swapped = check_foschi(*pr.inv_qt, *pr.inv_r_beta, half, *pr.inv_r_alpha, pr.sigma);
    CHECK(swapped[1].margin == Rational(0));
    CHECK(swapped[1].holds);
    // canonical order: the tight condition is the third
    CHECK(verdicts[2].margin == Rational(0));

    // symmetric boundary failure: r = r~, q = q~ with 2/q = sigma(1 - 2/r) >= 1
    Rational inv_r(1, 3), sigma(3, 2);  // sigma(1 - 2/3) = 1/2 per side, sum = 1
    auto bad = check_foschi(half, inv_r, half, inv_r, sigma);
    CHECK_FALSE(bad[0].holds);
    CHECK(bad[0].lhs == Rational(1));
    CHECK_THROWS_AS(check_foschi(Rational(3, 2), inv_r, half, inv_r, sigma), DomainError);
}

TEST_CASE("exponent profile n=8 p=9/5 (low-power case)") {
    auto pr = exponent_profile(8, Rational(9, 5));
    CHECK(pr.kind == ProfileCase::C1);
    CHECK(pr.inv_q == Rational(1, 2));
    CHECK(pr.inv_r == Rational(1, 4));
    CHECK(pr.inv_r0 == Rational(19, 60));
    CHECK(pr.s0 == Rational(29, 30));
    CHECK(pr.s_c == Rational(3, 2));
    CHECK(pr.gap() == Rational(8, 15));
    CHECK(pr.inv_q1 == Rational(9, 10));            // p/2
    CHECK(pr.inv_r1 == Rational(31, 60));           // (n-p)/(2(n-2))
    CHECK(*pr.inv_qt == Rational(1, 10));
    CHECK(*pr.inv_r_beta == Rational(29, 60));      // (n-4+p)/(2(n-2))
    CHECK(*pr.inv_r_alpha == Rational(29, 84));     // (n-3)/(n-1) of the above
}

TEST_CASE("exponent profile n=4 p=4 (high-power case)") {
    auto pr = exponent_profile(4, Rational(4));
    CHECK(pr.kind == ProfileCase::C2);
    CHECK(pr.inv_q == Rational(1, 4));
    CHECK(pr.inv_r == Rational(5, 48));
    CHECK(pr.inv_r0 == Rational(3, 16));
    CHECK(pr.s0 == Rational(1));
    CHECK(pr.s_c == Rational(4, 3));
    // dual pair is the energy pair (inf, 2)
    CHECK(pr.inv_q1 == Rational(1));
    CHECK(pr.inv_r1 == Rational(1, 2));
    CHECK(is_sigma_admissible(Rational(1) - pr.inv_q1, Rational(1) - pr.inv_r1, pr.sigma));
    CHECK(!pr.inv_qt.has_value());
}

TEST_CASE("profile errors") {
    CHECK_THROWS_AS(exponent_profile(8, Rational(3, 2)), OutOfScopeError);
    CHECK_THROWS_AS(exponent_profile(3, Rational(10)), DomainError);
    CHECK_THROWS_AS(exponent_profile(10, Rational(5, 2)), SmoothnessGapError);
    try {
        exponent_profile(10, Rational(5, 2));
    } catch (const SmoothnessGapError& e) {
        CHECK(e.a == AlgebraicValue(Rational(2)));
        CHECK(e.b == AlgebraicValue(Rational(3)));
    }
}

TEST_CASE("profile branches agree at the case boundary p = 2") {
    // p = 2 is supercritical only for n >= 7 and falls in the excluded gap
    // for every n >= 10, so the boundary is visible only at n = 7, 8, 9.
    for (int n : {7, 8, 9}) {
        auto pr = exponent_profile(n, Rational(2));
        CHECK(pr.kind == ProfileCase::C2);
        // low-power formulas evaluated at p = 2 give the same tuple
        Rational inv_r0_c1 = Rational(n - 5, 2 * n) + Rational(1, n - 2) - Rational(2) / Rational(n * (n - 2));
        Rational inv_r_c1 = (Rational(2) / Rational(1) - Rational(1, 2)) / Rational(n);
        CHECK(pr.inv_r0 == inv_r0_c1);
        CHECK(pr.inv_r == inv_r_c1);
        CHECK(pr.inv_q == Rational(1, 2));
        CHECK(pr.s0 == Rational(1));
        CHECK(Rational(n, 2) - pr.inv_q0 - Rational(n) * pr.inv_r0 == Rational(1));
    }
}

TEST_CASE("admissible range") {
    auto r10 = admissible_range(10);
    REQUIRE(r10.a.has_value());
    REQUIRE(r10.b.has_value());
    CHECK(r10.a->as_rational() == Rational(2));
    CHECK(r10.b->as_rational() == Rational(3));
    REQUIRE(r10.intervals.size() == 2);
    CHECK(r10.intervals[0].lo == AlgebraicValue(Rational(3, 2)));
    CHECK(r10.contains(Rational(7, 4)));
    CHECK_FALSE(r10.contains(Rational(2)));     // endpoint excluded
    CHECK_FALSE(r10.contains(Rational(5, 2)));
    CHECK_FALSE(r10.contains(Rational(3)));
    CHECK(r10.contains(Rational(7, 2)));

    auto r9 = admissible_range(9);
    CHECK(!r9.a.has_value());
    REQUIRE(r9.intervals.size() == 1);
    CHECK(r9.intervals[0].lo == AlgebraicValue(Rational(11, 7)));
    CHECK(!r9.intervals[0].hi.has_value());
    for (int n = 4; n <= 9; ++n) CHECK(admissible_range(n).intervals.size() == 1);
    for (int n = 10; n <= 30; ++n) {
        auto r = admissible_range(n);
        REQUIRE(r.intervals.size() == 2);
        CHECK(compare(*r.a, *r.b) < 0);                          // strictly a < b
        CHECK(compare(r.intervals[0].lo, *r.a) < 0);             // p_H1 < a
    }
}

TEST_CASE("gap endpoints solve p = s_c - s0 exactly") {
    // At p = b (rational at n = 10) the gap closes: p - (s_c - s0) = 0.
    Rational p(3);
    Rational s_c = sobolev_critical(10, p);
    CHECK(p == s_c - Rational(1));
    // and at p = a = 2 with the low-power branch formula evaluated at p = 2:
    Rational s_c2 = sobolev_critical(10, Rational(2));
    CHECK(Rational(2) == s_c2 - Rational(1));
}

TEST_CASE("lemma chain holds on spec cases") {
    for (const auto& v : verify_lemma_chain(8, Rational(9, 5))) {
        INFO(v.id);
        CHECK(v.holds);
    }
    for (const auto& v : verify_lemma_chain(5, Rational(3))) {
        INFO(v.id);
        CHECK(v.holds);
    }
    for (const auto& v : verify_lemma_chain(7, Rational(19, 10))) {
        INFO(v.id);
        CHECK(v.holds);
    }
    CHECK_THROWS_AS(verify_lemma_chain(8, Rational(8, 5)), OutOfScopeError);
}

TEST_CASE("acceptability margin value at n=8 p=9/5") {
    auto verdicts = verify_lemma_chain(8, Rational(9, 5));
    bool found = false;
    for (const auto& v : verdicts) {
        if (v.id == "accept-margin-value") {
            CHECK(v.lhs == Rational(-1, 60));
            CHECK(v.holds);
            found = true;
        }
        if (v.id == "r0-at-p1-quadratic") CHECK(v.rhs == Rational(16));  // 64 - 56 + 8
    }
    CHECK(found);
}

TEST_CASE("n^2 - 7n + 8 >= 0 verdict for n = 7") {
    auto verdicts = verify_lemma_chain(7, Rational(37, 20));  // p_H1(7) = 9/5 < 37/20 < 2
    for (const auto& v : verdicts) {
        INFO(v.id);
        CHECK(v.holds);
        if (v.id == "r0-at-p1-quadratic") CHECK(v.rhs == Rational(8));
    }
}

TEST_CASE("smoothness index") {
    CHECK(smoothness_index(9, Rational(5, 2)) == 2);   // s_c = 19/6, s0 = 1
    CHECK(smoothness_index(4, Rational(4)) == 0);      // s_c = 4/3
    CHECK(smoothness_index(10, Rational(4)) == 3);     // s_c = 13/3, in the upper branch
    CHECK(Rational(4) > Rational(3));                  // p > k there
    CHECK_THROWS_AS(smoothness_index(10, Rational(5, 2)), SmoothnessGapError);
}

TEST_CASE("dimension closure: profiles succeed with positive gap margin for n in [4, 9]") {
    // Thinned grid here; the acceptance suite runs the full 10^4-point grid.
    for (int n = 4; n <= 9; ++n) {
        for (int i = 1; i <= 10000; i += 7) {
            Rational p = grid_p(n, i);
            auto pr = exponent_profile(n, p);
            CHECK(p - pr.gap() > Rational(0));
        }
    }
}

TEST_CASE("gap dichotomy: profile succeeds iff p outside [a, b] for n in [10, 20]") {
    for (int n = 10; n <= 20; n += 2) {
        auto range = admissible_range(n);
        for (int i = 1; i <= 10000; i += 11) {
            Rational p = grid_p(n, i);
            bool inside_range = range.contains(p);
            bool ok = true;
            try {
                exponent_profile(n, p);
            } catch (const SmoothnessGapError&) {
                ok = false;
            }
            CHECK(ok == inside_range);
        }
    }
}

TEST_CASE("declared pairs pass the exact predicates on random profiles") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dim(4, 20), off(1, 4000);
    int checked = 0;
    while (checked < 300) {
        int n = dim(rng);
        Rational p = grid_p(n, off(rng));
        ExponentProfile pr;
        try {
            pr = exponent_profile(n, p);
        } catch (const SmoothnessGapError&) {
            continue;
        }
        ++checked;
        if (pr.kind == ProfileCase::C1) {
            CHECK(is_sigma_acceptable(Rational(1, 2), *pr.inv_r_alpha, pr.sigma));
            CHECK(is_sigma_acceptable(*pr.inv_qt, *pr.inv_r_beta, pr.sigma));
            CHECK(all_hold(check_foschi(Rational(1, 2), *pr.inv_r_alpha, *pr.inv_qt, *pr.inv_r_beta, pr.sigma)));
        } else {
            CHECK(is_sigma_admissible(pr.inv_q, pr.inv_r, pr.sigma));
            CHECK(is_sigma_admissible(pr.inv_q0, pr.inv_r0, pr.sigma));
            CHECK(is_sigma_admissible(Rational(0), Rational(1, 2), pr.sigma));
        }
        CHECK(pr.s_c == Rational(n, 2) - pr.inv_q - Rational(n) * pr.inv_r);
        CHECK(all_hold(verify_lemma_chain(n, p)));
    }
}

TEST_CASE("json emission shapes") {
    json j = exponent_profile(8, Rational(9, 5));
    CHECK(j["s_0"]["num"] == 29);
    CHECK(j["s_0"]["den"] == 30);
    CHECK(j["case"] == "C1");
    json r = admissible_range(10);
    CHECK(r["a"]["a"]["num"] == 2);
    CHECK(r["b"]["a"]["num"] == 3);
    CHECK(r["intervals"][1]["hi"].is_null());
    json c = critical_powers(2);
    CHECK(c["p_c"]["c"]["num"] == 17);
}
