#pragma once

#include "wavelab/core.hpp"

#include <cstdlib>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wavelab {

namespace detail {

using i128 = __int128;

inline constexpr i128 i128_abs(i128 v) { return v < 0 ? -v : v; }

inline i128 i128_gcd(i128 a, i128 b) {
    a = i128_abs(a);
    b = i128_abs(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational arithmetic overflow (mul)");
    return r;
}

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational arithmetic overflow (add)");
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("rational arithmetic overflow (sub)");
    return r;
}

std::string i128_to_string(i128 v);

/// Exact integer square root test: returns true and sets root if v is a perfect square.
bool i128_perfect_square(i128 v, i128& root);

}  // namespace detail

/// Exact fraction in reduced form; denominator always positive.
/// All exponent arithmetic of the admissibility theory runs through this type;
/// every operation either reduces exactly or throws on (128-bit) overflow.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }
    static Rational from_i128(detail::i128 n, detail::i128 d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        r.reduce();
        return r;
    }

    /// Parses "a", "a/b", or a plain decimal like "-1.25" (kept exact as -125/100).
    static Rational parse(std::string_view text);

    detail::i128 num() const { return num_; }
    detail::i128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const { return from_i128(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        using namespace detail;
        return from_i128(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                         checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        using namespace detail;
        return from_i128(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                         checked_mul(a.den_, b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        using namespace detail;
        return from_i128(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("rational division by zero");
        using namespace detail;
        return from_i128(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    /// Exact three-way comparison by cross multiplication.
    friend int compare(const Rational& a, const Rational& b) {
        using namespace detail;
        i128 lhs = checked_mul(a.num_, b.den_);
        i128 rhs = checked_mul(b.num_, a.den_);
        return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }
    friend bool operator==(const Rational& a, const Rational& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return compare(a, b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational inverse() const { return Rational(1) / *this; }
    Rational squared() const { return *this * *this; }

    /// Exact floor (towards -infinity).
    long long floor() const {
        detail::i128 q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return static_cast<long long>(q);
    }

    /// Integer power with non-negative exponent.
    Rational pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        Rational r(1), base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    double to_double() const {
        return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
    }

    std::string str() const {
        if (den_ == 1) return detail::i128_to_string(num_);
        return detail::i128_to_string(num_) + "/" + detail::i128_to_string(den_);
    }

  private:
    void reduce() {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        detail::i128 g = detail::i128_gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    detail::i128 num_;
    detail::i128 den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational rational_min(const Rational& a, const Rational& b) { return a < b ? a : b; }

}  // namespace wavelab
