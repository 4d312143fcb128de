#pragma once

// Zero sets of one-variable slice polynomials: isolated roots and whole
// spheres, found sphere by sphere from the real factors of the
// symmetrization. Plus the sphere-vanishing test and the correspondence
// between the zeros of P and of its regular conjugate.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qslice/error.hpp"
#include "qslice/poly.hpp"
#include "qslice/quaternion.hpp"
#include "qslice/real_poly.hpp"

namespace qslice {

/// The sphere x + sqrt(s) S, zero set of q^2 - 2xq + x^2 + s.
struct SphereEntry {
    Rational x, s;

    bool contains(const Quaternion& q) const { return q.re() == x && q.im2() == s; }
    bool operator==(const SphereEntry&) const = default;
    friend bool operator<(const SphereEntry& a, const SphereEntry& b) {
        return a.x != b.x ? a.x < b.x : a.s < b.s;
    }
};

struct ZeroConfig {
    std::vector<Quaternion> isolated;
    std::vector<SphereEntry> spherical;

    bool empty() const { return isolated.empty() && spherical.empty(); }

    /// Sorted copy; equality compares canonical forms.
    ZeroConfig canonical() const {
        ZeroConfig c = *this;
        std::sort(c.isolated.begin(), c.isolated.end(), lex_less);
        std::sort(c.spherical.begin(), c.spherical.end());
        return c;
    }

    bool operator==(const ZeroConfig& o) const {
        const ZeroConfig a = canonical(), b = o.canonical();
        return a.isolated == b.isolated && a.spherical == b.spherical;
    }
};

/// Throws InvalidConfig if the configuration is not a valid zero set.
inline void validate(const ZeroConfig& cfg) {
    for (std::size_t a = 0; a < cfg.spherical.size(); ++a) {
        if (cfg.spherical[a].s <= 0) throw Error(ErrorCode::InvalidConfig, "spherical zero needs s > 0");
        for (std::size_t b = a + 1; b < cfg.spherical.size(); ++b)
            if (cfg.spherical[a] == cfg.spherical[b]) throw Error(ErrorCode::InvalidConfig, "repeated sphere");
    }
    for (std::size_t a = 0; a < cfg.isolated.size(); ++a) {
        for (std::size_t b = a + 1; b < cfg.isolated.size(); ++b)
            if (same_sphere(cfg.isolated[a], cfg.isolated[b]))
                throw Error(ErrorCode::InvalidConfig, "two isolated roots on one sphere");
        for (const auto& sph : cfg.spherical)
            if (sph.contains(cfg.isolated[a]))
                throw Error(ErrorCode::InvalidConfig, "isolated root lies on a spherical zero");
    }
}

inline SlicePoly sphere_polynomial(const SphereEntry& e) {
    SlicePoly p(1);
    p.add_term({2}, 1);
    p.add_term({1}, Quaternion(-2 * e.x));
    p.add_term({0}, Quaternion(e.x * e.x + e.s));
    return p;
}

namespace detail {

inline void require_one_var(const SlicePoly& p) {
    if (p.nvars() != 1) throw Error(ErrorCode::VariableCountMismatch, "expected a one-variable polynomial");
}

inline SlicePoly linear(const Quaternion& root) {
    SlicePoly p(1);
    p.add_term({1}, 1);
    p.add_term({0}, -root);
    return p;
}

inline Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

}  // namespace detail

/// P * (q - P(b)^-1 b P(b)), or P itself when it already vanishes at b.
inline SlicePoly append_zero(const SlicePoly& p, const Quaternion& b) {
    detail::require_one_var(p);
    const Quaternion v = eval(p, b);
    if (v.is_zero()) return p;
    return star_mul(p, detail::linear(conjugate_by(b, v)));
}

inline SlicePoly build_from_zero_config(const ZeroConfig& cfg, const std::vector<std::size_t>& order) {
    validate(cfg);
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    bool permutation = sorted.size() == cfg.isolated.size();
    for (std::size_t t = 0; permutation && t < sorted.size(); ++t) permutation = sorted[t] == t;
    if (!permutation) throw Error(ErrorCode::InvalidConfig, "order is not a permutation of the isolated roots");

    SlicePoly p = SlicePoly::constant(1, 1);
    for (const auto& sph : cfg.spherical) p = star_mul(p, sphere_polynomial(sph));
    for (std::size_t idx : order) p = append_zero(p, cfg.isolated[idx]);
    return p;
}

inline SlicePoly build_from_zero_config(const ZeroConfig& cfg) {
    std::vector<std::size_t> order(cfg.isolated.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return build_from_zero_config(cfg, order);
}

/// The candidate spheres of P: rational real roots (s = 0) and rational
/// quadratic factors of the square-free part of P^s.
inline std::vector<SphereEntry> candidate_spheres(const SlicePoly& p) {
    const auto sym = detail::RealPoly::from_slice(symmetrization(p));
    const auto parts = detail::split_rational(detail::square_free_part(sym));
    if (parts.rest.degree() > 0)
        throw Error(ErrorCode::IrrationalSphere,
                    "the symmetrization has a factor without rational sphere data of degree " +
                        std::to_string(parts.rest.degree()));
    std::vector<SphereEntry> out;
    for (const auto& x : parts.real_roots) out.push_back({x, 0});
    for (const auto& [x, s] : parts.spheres) out.push_back({x, s});
    std::sort(out.begin(), out.end());
    return out;
}

inline ZeroConfig roots_one_var(const SlicePoly& p) {
    detail::require_one_var(p);
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial vanishes everywhere");
    ZeroConfig cfg;
    for (const auto& sph : candidate_spheres(p)) {
        if (sph.s == 0) {
            if (!eval(p, Quaternion(sph.x)).is_zero())
                throw Error(ErrorCode::InternalError, "real root of the symmetrization is not a root");
            cfg.isolated.emplace_back(sph.x);
            continue;
        }
        const SlicePoly rem = divide_monic(p, sphere_polynomial(sph), 0).remainder;
        if (rem.is_zero()) {
            cfg.spherical.push_back(sph);
            continue;
        }
        const Quaternion alpha = rem.coefficient({1}), beta = rem.coefficient({0});
        if (alpha.is_zero()) continue;
        const Quaternion r = -(beta * quat_inv(alpha));
        if (sph.contains(r) && eval(p, r).is_zero()) cfg.isolated.push_back(r);
    }
    return cfg.canonical();
}

/// True iff P vanishes somewhere on the arranged sphere through a.
inline bool vanishes_on_sphere(const SlicePoly& p, const CommutingPoint& a) {
    return eval(symmetrization(p), a).is_zero();
}

/// A zero of P^c on the sphere of a zero b of P.
inline CommutingPoint conjugate_zero_partner(const SlicePoly& p, const CommutingPoint& b) {
    if (!eval(p, b).is_zero()) throw Error(ErrorCode::NotAZero, to_string(b) + " is not a zero of the polynomial");
    const CommutingPoint bbar = b.conj();
    const Quaternion v = eval(p, bbar);
    const CommutingPoint partner = v.is_zero() ? bbar : bbar.conjugated_by(v);
    if (!eval(regular_conjugate(p), partner).is_zero())
        throw Error(ErrorCode::InternalError, "conjugate partner is not a zero of the conjugate");
    return partner;
}

/// A rational point x + v of the sphere, with v found as a sum of three
/// squares. Searches from the largest first component down, so (0, 1) gives i.
inline Quaternion sphere_point(const SphereEntry& e) {
    if (e.s == 0) return Quaternion(e.x);
    if (e.s < 0) throw Error(ErrorCode::InvalidConfig, "sphere radius must be nonnegative");
    // v = (a, b, c) / d with a^2 + b^2 + c^2 = n d for s = n / d
    const Integer n = num(e.s), d = den(e.s), target = n * d;
    Integer t = target;
    while (t != 0 && t % 4 == 0) t /= 4;
    if (t % 8 == 7)
        throw Error(ErrorCode::IrrationalSphere, "sphere of radius^2 " + to_string(e.s) + " has no rational point");
    for (Integer a = detail::isqrt(target); a >= 0; --a) {
        const Integer ra = target - a * a;
        for (Integer b = detail::isqrt(ra); b >= 0; --b) {
            const Integer rb = ra - b * b;
            const Integer c = detail::isqrt(rb);
            if (c * c == rb) return {e.x, Rational(a, d), Rational(b, d), Rational(c, d)};
        }
    }
    throw Error(ErrorCode::InternalError, "three-square search failed");
}

inline std::string to_string(const SphereEntry& e) {
    return "{re: " + to_string(e.x) + ", im2: " + to_string(e.s) + "}";
}

inline std::string to_string(const ZeroConfig& cfg) {
    const ZeroConfig c = cfg.canonical();
    std::string out = "{isolated: [";
    for (std::size_t t = 0; t < c.isolated.size(); ++t) out += (t ? ", " : "") + to_string(c.isolated[t]);
    out += "], spheres: [";
    for (std::size_t t = 0; t < c.spherical.size(); ++t) out += (t ? ", " : "") + to_string(c.spherical[t]);
    return out + "]}";
}

}  // namespace qslice
