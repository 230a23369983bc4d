#pragma once

#include "wavelab/exponents.hpp"

#include <json.hpp>

#include <limits>

namespace wavelab {

using nlohmann::json;

inline json to_json_int(detail::i128 v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return detail::i128_to_string(v);  // beyond int64: keep exact as a string
}

inline void to_json(json& j, const Rational& r) {
    j = json{{"num", to_json_int(r.num())}, {"den", to_json_int(r.den())}};
}

inline void to_json(json& j, const AlgebraicValue& v) {
    j = json{{"a", v.rational_part()}, {"b", v.radical_coeff()}, {"c", v.radicand()}};
}

inline void to_json(json& j, const ChainVerdict& v) {
    j = json{{"id", v.id},       {"lhs", v.lhs},       {"rhs", v.rhs},
             {"strict", v.strict}, {"holds", v.holds}, {"margin", v.margin}};
}

inline void to_json(json& j, const CriticalPowers& c) {
    j = json{{"n", c.n}, {"p_c", c.p_c}, {"p_conf", c.p_conf}};
    if (c.p_h1)
        j["p_h1"] = *c.p_h1;
    else
        j["p_h1"] = nullptr;
}

inline void to_json(json& j, const ExponentProfile& pr) {
    j = json{{"n", pr.n},
             {"p", pr.p},
             {"sigma", pr.sigma},
             {"s_c", pr.s_c},
             {"s_0", pr.s0},
             {"case", to_string(pr.kind)},
             {"inv_q", pr.inv_q},
             {"inv_r", pr.inv_r},
             {"inv_q0", pr.inv_q0},
             {"inv_r0", pr.inv_r0},
             {"inv_q1", pr.inv_q1},
             {"inv_r1", pr.inv_r1}};
    if (pr.inv_qt) j["inv_qt"] = *pr.inv_qt;
    if (pr.inv_r_alpha) j["inv_r_alpha"] = *pr.inv_r_alpha;
    if (pr.inv_r_beta) j["inv_r_beta"] = *pr.inv_r_beta;
}

inline void to_json(json& j, const RangeInterval& iv) {
    j = json{{"lo", iv.lo}};
    if (iv.hi)
        j["hi"] = *iv.hi;
    else
        j["hi"] = nullptr;
}

inline void to_json(json& j, const RangeReport& r) {
    j = json{{"n", r.n}, {"intervals", r.intervals}};
    if (r.a) j["a"] = *r.a;
    if (r.b) j["b"] = *r.b;
}

}  // namespace wavelab
