#pragma once

#include "wavelab/rational.hpp"

#include <cmath>
#include <string>

namespace wavelab {

/// Quadratic surd a + b*sqrt(c) with rational a, b and non-negative rational c.
/// Comparisons are exact via sign analysis of squared differences, so boundary
/// cases (equalities at interval endpoints) are classified correctly.
/// Perfect-square radicands collapse to plain rationals on construction.
class AlgebraicValue {
  public:
    AlgebraicValue() : a_(0), b_(0), c_(0) {}
    AlgebraicValue(Rational rational) : a_(rational), b_(0), c_(0) {}  // NOLINT
    AlgebraicValue(long long v) : a_(v), b_(0), c_(0) {}               // NOLINT
    AlgebraicValue(Rational a, Rational b, Rational c) : a_(a), b_(b), c_(c) { normalize(); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coeff() const { return b_; }
    const Rational& radicand() const { return c_; }

    bool is_rational() const { return b_.is_zero(); }
    /// Valid only when is_rational().
    const Rational& as_rational() const {
        if (!is_rational()) throw DomainError("algebraic value is irrational");
        return a_;
    }

    /// Exact sign of a + b*sqrt(c).
    int sign() const {
        if (b_.is_zero()) return a_.sign();
        if (a_.is_zero()) return b_.sign();
        int sa = a_.sign(), sb = b_.sign();
        if (sa == sb) return sa;
        // Opposite signs: compare a^2 against b^2 c.
        int sq = compare(a_.squared(), b_.squared() * c_);
        if (sq == 0) return 0;
        return sq > 0 ? sa : sb;
    }

    AlgebraicValue operator-() const { return AlgebraicValue(-a_, -b_, c_); }

    friend AlgebraicValue operator+(const AlgebraicValue& x, const AlgebraicValue& y) {
        require_compatible(x, y);
        Rational c = x.b_.is_zero() ? y.c_ : x.c_;
        return AlgebraicValue(x.a_ + y.a_, x.b_ + y.b_, c);
    }
    friend AlgebraicValue operator-(const AlgebraicValue& x, const AlgebraicValue& y) { return x + (-y); }
    friend AlgebraicValue operator*(const AlgebraicValue& x, const AlgebraicValue& y) {
        require_compatible(x, y);
        Rational c = x.b_.is_zero() ? y.c_ : x.c_;
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 c + (a1 b2 + a2 b1) s,  s = sqrt(c)
        return AlgebraicValue(x.a_ * y.a_ + x.b_ * y.b_ * c, x.a_ * y.b_ + y.a_ * x.b_, c);
    }
    friend AlgebraicValue operator*(const Rational& r, const AlgebraicValue& x) {
        return AlgebraicValue(r * x.a_, r * x.b_, x.c_);
    }
    friend AlgebraicValue operator/(const AlgebraicValue& x, const Rational& r) {
        return AlgebraicValue(x.a_ / r, x.b_ / r, x.c_);
    }

    /// Exact three-way comparison; works across different radicands.
    friend int compare(const AlgebraicValue& x, const AlgebraicValue& y) {
        if (x.b_.is_zero() || y.b_.is_zero() || x.c_ == y.c_) {
            Rational c = x.b_.is_zero() ? y.c_ : x.c_;
            return AlgebraicValue(x.a_ - y.a_, x.b_ - y.b_, c).sign();
        }
        // sign of (d + b1 sqrt(c1)) - b2 sqrt(c2), d = a1 - a2: square once after
        // splitting on the signs of both sides.
        AlgebraicValue lhs(x.a_ - y.a_, x.b_, x.c_);
        int sl = lhs.sign();
        int sr = y.b_.sign();
        if (sl != sr) return sl > sr ? 1 : -1;
        if (sl == 0) return 0;
        // Same nonzero sign: compare squares, flip when both negative.
        AlgebraicValue lhs_sq = lhs * lhs;                    // rational + radical in sqrt(c1)
        Rational rhs_sq = y.b_.squared() * y.c_;              // rational
        int sq = (lhs_sq - AlgebraicValue(rhs_sq)).sign();
        return sl > 0 ? sq : -sq;
    }
    friend bool operator==(const AlgebraicValue& x, const AlgebraicValue& y) { return compare(x, y) == 0; }
    friend bool operator!=(const AlgebraicValue& x, const AlgebraicValue& y) { return compare(x, y) != 0; }
    friend bool operator<(const AlgebraicValue& x, const AlgebraicValue& y) { return compare(x, y) < 0; }
    friend bool operator<=(const AlgebraicValue& x, const AlgebraicValue& y) { return compare(x, y) <= 0; }
    friend bool operator>(const AlgebraicValue& x, const AlgebraicValue& y) { return compare(x, y) > 0; }
    friend bool operator>=(const AlgebraicValue& x, const AlgebraicValue& y) { return compare(x, y) >= 0; }

    double to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(c_.to_double()); }

    std::string str() const {
        if (is_rational()) return a_.str();
        return "(" + a_.str() + " + " + b_.str() + "*sqrt(" + c_.str() + "))";
    }

  private:
    static void require_compatible(const AlgebraicValue& x, const AlgebraicValue& y) {
        if (!x.b_.is_zero() && !y.b_.is_zero() && x.c_ != y.c_)
            throw DomainError("algebraic arithmetic across different radicands");
    }

    void normalize() {
        if (c_.is_negative()) throw DomainError("negative radicand");
        if (c_.is_zero() || b_.is_zero()) {
            b_ = Rational(0);
            c_ = Rational(0);
            return;
        }
        detail::i128 rn, rd;
        if (detail::i128_perfect_square(c_.num(), rn) && detail::i128_perfect_square(c_.den(), rd)) {
            a_ += b_ * Rational::from_i128(rn, rd);
            b_ = Rational(0);
            c_ = Rational(0);
        }
    }

    Rational a_, b_, c_;
};

}  // namespace wavelab
