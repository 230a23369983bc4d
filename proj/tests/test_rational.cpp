#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wavelab/algebraic.hpp"
#include "wavelab/rational.hpp"

#include <random>

using namespace wavelab;

TEST_CASE("rational arithmetic is exact and reduced") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((a + b).den() == 2);
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(0, 7).den() == 1);
}

TEST_CASE("comparison, floor, pow") {
    CHECK(Rational(7, 3) > Rational(9, 4));
    CHECK(Rational(-7, 3) < Rational(-9, 4));
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(6, 3).floor() == 2);
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(rational_max(Rational(1, 2), Rational(2, 5)) == Rational(1, 2));
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("9/5") == Rational(9, 5));
    CHECK(Rational::parse("-3/12") == Rational(-1, 4));
    CHECK(Rational::parse("2") == Rational(2));
    CHECK(Rational::parse("1.25") == Rational(5, 4));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational::parse(" 7 / 2 ") == Rational(7, 2));
    CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse(""), DomainError);
}

TEST_CASE("division by zero and overflow are loud") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    Rational huge = Rational::from_i128(static_cast<detail::i128>(1) << 126, 1);
    CHECK_THROWS_AS(huge * huge, std::overflow_error);
}

TEST_CASE("randomized cross-check against doubles") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> num(-50, 50), den(1, 30);
    for (int i = 0; i < 2000; ++i) {
        Rational x(num(rng), den(rng)), y(num(rng), den(rng));
        double xd = x.to_double(), yd = y.to_double();
        CHECK((x + y).to_double() == doctest::Approx(xd + yd).epsilon(1e-12));
        CHECK((x * y).to_double() == doctest::Approx(xd * yd).epsilon(1e-12));
        if (x != y) CHECK(((x < y) == (xd < yd)));
    }
}

TEST_CASE("string round trip") {
    CHECK(Rational(19, 60).str() == "19/60");
    CHECK(Rational(-3).str() == "-3");
    CHECK(Rational::parse(Rational(29, 30).str()) == Rational(29, 30));
}

TEST_CASE("algebraic values collapse perfect squares") {
    // (86 - sqrt(196))/36 = 2
    AlgebraicValue a(Rational(86, 36), Rational(-1, 36), Rational(196));
    CHECK(a.is_rational());
    CHECK(a.as_rational() == Rational(2));
    AlgebraicValue b(Rational(10, 4), Rational(1, 4), Rational(4));
    CHECK(b.as_rational() == Rational(3));
    AlgebraicValue c(Rational(0), Rational(1), Rational(9, 4));
    CHECK(c.as_rational() == Rational(3, 2));
}

TEST_CASE("algebraic sign analysis is exact at boundaries") {
    // sqrt(2) vs 3/2 and 7/5: 1.414...
    AlgebraicValue rt2(Rational(0), Rational(1), Rational(2));
    CHECK(compare(rt2, AlgebraicValue(Rational(3, 2))) < 0);
    CHECK(compare(rt2, AlgebraicValue(Rational(7, 5))) > 0);
    // 1 + 2 sqrt(3) == 1 + sqrt(12)
    AlgebraicValue x(Rational(1), Rational(2), Rational(3));
    AlgebraicValue y(Rational(1), Rational(1), Rational(12));
    CHECK(compare(x, y) == 0);
    // negative coefficients: 5 - 2 sqrt(6) > 0 but tiny (0.101)
    AlgebraicValue z(Rational(5), Rational(-2), Rational(6));
    CHECK(z.sign() > 0);
    CHECK(compare(z, AlgebraicValue(Rational(1, 9))) < 0);
    CHECK(compare(z, AlgebraicValue(Rational(1, 10))) > 0);
}

TEST_CASE("cross-radicand comparison") {
    // sqrt(2) + sqrt(3) vs sqrt(10): 3.146 vs 3.162
    AlgebraicValue lhs(Rational(0), Rational(1), Rational(2));
    AlgebraicValue rt3(Rational(0), Rational(1), Rational(3));
    AlgebraicValue rt10(Rational(0), Rational(1), Rational(10));
    // (sqrt(2)+sqrt(3))^2 = 5 + 2 sqrt(6), compare against 10: sqrt(6) vs 5/2
    AlgebraicValue sum_sq(Rational(5), Rational(2), Rational(6));
    CHECK(compare(sum_sq, AlgebraicValue(Rational(10))) < 0);
    // direct: 1 + sqrt(2) vs 1/2 + sqrt(3): 2.414 vs 2.232
    AlgebraicValue u(Rational(1), Rational(1), Rational(2));
    AlgebraicValue v(Rational(1, 2), Rational(1), Rational(3));
    CHECK(compare(u, v) > 0);
    CHECK(compare(v, u) < 0);
    CHECK(compare(rt3, rt10) < 0);
    CHECK(compare(lhs, lhs) == 0);
    // equality across forms: 2 sqrt(2) vs sqrt(8)
    AlgebraicValue two_rt2(Rational(0), Rational(2), Rational(2));
    AlgebraicValue rt8(Rational(0), Rational(1), Rational(8));
    CHECK(compare(two_rt2, rt8) == 0);
}

TEST_CASE("algebraic arithmetic within one radicand") {
    AlgebraicValue x(Rational(3, 2), Rational(1, 2), Rational(17));
    AlgebraicValue sq = x * x;  // (3/2 + sqrt(17)/2)^2 = 9/4 + 17/4 + 3/2 sqrt(17)
    CHECK(sq.rational_part() == Rational(26, 4));
    CHECK(sq.radical_coeff() == Rational(3, 2));
    AlgebraicValue y = x - x;
    CHECK(y.sign() == 0);
    CHECK_THROWS_AS(x * AlgebraicValue(Rational(0), Rational(1), Rational(5)), DomainError);
}

TEST_CASE("randomized algebraic comparisons against doubles") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long long> coef(-8, 8), rad(0, 20);
    for (int i = 0; i < 3000; ++i) {
        AlgebraicValue x(Rational(coef(rng), 3), Rational(coef(rng), 2), Rational(rad(rng)));
        AlgebraicValue y(Rational(coef(rng), 2), Rational(coef(rng), 3), Rational(rad(rng)));
        double xd = x.to_double(), yd = y.to_double();
        if (std::abs(xd - yd) > 1e-9) CHECK((compare(x, y) < 0) == (xd < yd));
    }
}
