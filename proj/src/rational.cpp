#include "wavelab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace wavelab {
namespace detail {

std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // Peel digits from |v|; careful with i128 min (not reachable from reduced rationals).
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

bool i128_perfect_square(i128 v, i128& root) {
    if (v < 0) return false;
    if (v == 0) {
        root = 0;
        return true;
    }
    // Newton iteration on unsigned 128-bit.
    unsigned __int128 n = static_cast<unsigned __int128>(v);
    unsigned __int128 x = n;
    unsigned __int128 y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    if (x * x == n) {
        root = static_cast<i128>(x);
        return true;
    }
    return false;
}

}  // namespace detail

Rational Rational::parse(std::string_view text) {
    auto fail = [&] { throw DomainError("cannot parse rational: '" + std::string(text) + "'"); };
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) fail();

    auto parse_int = [&](std::string_view t) -> detail::i128 {
        if (t.empty()) fail();
        bool neg = false;
        std::size_t i = 0;
        if (t[0] == '+' || t[0] == '-') {
            neg = t[0] == '-';
            i = 1;
        }
        if (i == t.size()) fail();
        detail::i128 v = 0;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) fail();
            v = detail::checked_add(detail::checked_mul(v, 10), t[i] - '0');
        }
        return neg ? -v : v;
    };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        detail::i128 n = parse_int(std::string_view(s).substr(0, slash));
        detail::i128 d = parse_int(std::string_view(s).substr(slash + 1));
        if (d == 0) fail();
        return from_i128(n, d);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (frac_len == 0) fail();
        detail::i128 n = parse_int(digits);
        detail::i128 d = 1;
        for (std::size_t i = 0; i < frac_len; ++i) d = detail::checked_mul(d, 10);
        return from_i128(n, d);
    }
    return from_i128(parse_int(s), 1);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace wavelab
