#pragma once

// JSON forms. Rationals are strings ("p/q"), quaternions are [w, x, y, z]
// and a polynomial is {"nvars": n, "terms": [[[e1, ..., en], [w, x, y, z]], ...]}
// with terms in graded-lex order.

#include <string>
#include <vector>

#include <json.hpp>

#include "qslice/error.hpp"
#include "qslice/poly.hpp"
#include "qslice/zeros.hpp"

namespace qslice::json {

using Json = nlohmann::ordered_json;

inline Json rational(const Rational& r) { return to_string(r); }

inline Rational rational_from(const Json& j) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long long>());
        return Rational(j.get<std::string>());
    } catch (const std::exception& e) {
        throw Error(ErrorCode::SyntaxError, std::string("bad rational in JSON: ") + e.what());
    }
}

inline Json quaternion(const Quaternion& q) { return Json::array({rational(q.w), rational(q.x), rational(q.y), rational(q.z)}); }

inline Quaternion quaternion_from(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw Error(ErrorCode::SyntaxError, "quaternion must be [w, x, y, z]");
    return {rational_from(j[0]), rational_from(j[1]), rational_from(j[2]), rational_from(j[3])};
}

inline Json point(std::span<const Quaternion> p) {
    Json out = Json::array();
    for (const auto& q : p) out.push_back(quaternion(q));
    return out;
}

inline Json poly(const SlicePoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back(Json::array({m, quaternion(c)}));
    return {{"nvars", p.nvars()}, {"terms", terms}};
}

inline SlicePoly poly_from(const Json& j) {
    try {
        SlicePoly p(j.at("nvars").get<std::size_t>());
        for (const auto& t : j.at("terms")) p.add_term(t.at(0).get<MultiIndex>(), quaternion_from(t.at(1)));
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::SyntaxError, std::string("bad polynomial JSON: ") + e.what());
    }
}

inline Json zero_config(const ZeroConfig& cfg) {
    const ZeroConfig c = cfg.canonical();
    Json iso = Json::array(), sph = Json::array();
    for (const auto& r : c.isolated) iso.push_back(quaternion(r));
    for (const auto& s : c.spherical) sph.push_back({{"re", rational(s.x)}, {"im2", rational(s.s)}});
    return {{"isolated", iso}, {"spheres", sph}};
}

}  // namespace qslice::json
