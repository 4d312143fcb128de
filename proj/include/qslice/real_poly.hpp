#pragma once

// Univariate polynomials with rational coefficients, used for the
// symmetrization of one-variable slice polynomials, which is real.

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "qslice/error.hpp"
#include "qslice/poly.hpp"
#include "qslice/rational.hpp"

namespace qslice::detail {

class RealPoly {
public:
    RealPoly() = default;
    explicit RealPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

    static RealPoly from_slice(const SlicePoly& p) {
        if (p.nvars() != 1) throw Error(ErrorCode::VariableCountMismatch, "expected a one-variable polynomial");
        std::vector<Rational> c;
        for (const auto& [m, a] : p.terms()) {
            if (!a.is_real()) throw Error(ErrorCode::InternalError, "polynomial does not have real coefficients");
            if (c.size() <= m[0]) c.resize(m[0] + 1);
            c[m[0]] = a.w;
        }
        return RealPoly(std::move(c));
    }

    SlicePoly to_slice() const {
        SlicePoly p(1);
        for (std::size_t e = 0; e < c_.size(); ++e) p.add_term({static_cast<std::uint32_t>(e)}, Quaternion(c_[e]));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    const Rational& lc() const { return c_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    RealPoly monic() const {
        if (is_zero()) return *this;
        std::vector<Rational> c = c_;
        const Rational l = lc();
        for (auto& x : c) x /= l;
        return RealPoly(std::move(c));
    }

    RealPoly derivative() const {
        std::vector<Rational> c;
        for (std::size_t e = 1; e < c_.size(); ++e) c.push_back(c_[e] * static_cast<long long>(e));
        return RealPoly(std::move(c));
    }

    friend RealPoly operator*(const RealPoly& a, const RealPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t r = 0; r < a.c_.size(); ++r)
            for (std::size_t s = 0; s < b.c_.size(); ++s) c[r + s] += a.c_[r] * b.c_[s];
        return RealPoly(std::move(c));
    }

    /// Euclidean division by a nonzero divisor.
    friend std::pair<RealPoly, RealPoly> divmod(const RealPoly& a, const RealPoly& b) {
        if (b.is_zero()) throw Error(ErrorCode::ZeroDivisor, "division by the zero polynomial");
        std::vector<Rational> rem = a.c_, quot;
        const long db = b.degree();
        if (a.degree() >= db) quot.resize(static_cast<std::size_t>(a.degree() - db + 1));
        for (long e = a.degree(); e >= db; --e) {
            const Rational f = rem[static_cast<std::size_t>(e)] / b.lc();
            if (f == 0) continue;
            quot[static_cast<std::size_t>(e - db)] = f;
            for (long t = 0; t <= db; ++t) rem[static_cast<std::size_t>(e - db + t)] -= f * b.c_[static_cast<std::size_t>(t)];
        }
        return {RealPoly(std::move(quot)), RealPoly(std::move(rem))};
    }

    bool operator==(const RealPoly&) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Monic gcd.
inline RealPoly gcd(RealPoly a, RealPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline RealPoly square_free_part(const RealPoly& p) {
    if (p.degree() < 1) return p.monic();
    return divmod(p, gcd(p, p.derivative())).first.monic();
}

using Float = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

inline Float to_float(const Rational& r) { return Float(num(r).str()) / Float(den(r).str()); }

/// Simultaneous approximation of all roots of a square-free polynomial.
inline std::vector<Complex> approximate_roots(const RealPoly& f) {
    const RealPoly m = f.monic();
    const long n = m.degree();
    std::vector<Float> c;
    for (const auto& r : m.coefficients()) c.push_back(to_float(r));

    Float bound = 0;
    for (long e = 0; e < n; ++e) bound = std::max<Float>(bound, abs(c[static_cast<std::size_t>(e)]));
    bound += 1;

    auto value = [&](const Complex& z) {
        Complex acc = 0;
        for (long e = n; e >= 0; --e) acc = acc * z + Complex(c[static_cast<std::size_t>(e)]);
        return acc;
    };

    std::vector<Complex> z(static_cast<std::size_t>(n));
    const Complex seed(Float("0.4"), Float("0.9"));
    Complex w = 1;
    for (auto& zk : z) {
        w *= seed;
        zk = w * bound;
    }
    const Float eps("1e-45");
    for (int iter = 0; iter < 2000; ++iter) {
        Float step = 0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            Complex denom = 1;
            for (std::size_t l = 0; l < z.size(); ++l)
                if (l != k) denom *= z[k] - z[l];
            if (denom == Complex(0)) denom = Complex(eps);
            const Complex delta = value(z[k]) / denom;
            z[k] -= delta;
            step = std::max<Float>(step, abs(delta) / (1 + abs(z[k])));
        }
        if (step < eps) break;
    }
    return z;
}

/// First continued-fraction convergent within `tol` of y.
inline std::optional<Rational> rational_near(const Float& y, const Float& tol) {
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Float rest = y;
    for (int iter = 0; iter < 120; ++iter) {
        const Float a = floor(rest);
        if (abs(a) > Float("1e18")) return std::nullopt;
        const Integer ai = a.convert_to<long long>();
        const Integer p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        p0 = p1, q0 = q1, p1 = p2, q1 = q2;
        const Rational approx(p1, q1);
        if (abs(to_float(approx) - y) <= tol * (1 + abs(y))) return approx;
        const Float frac = rest - a;
        if (frac == 0) return approx;
        rest = 1 / frac;
    }
    return std::nullopt;
}

struct LinearQuadraticFactors {
    std::vector<Rational> real_roots;
    std::vector<std::pair<Rational, Rational>> spheres;  // (x, s): q^2 - 2xq + x^2 + s, s > 0
    RealPoly rest;                                       // whatever did not split over Q
};

/// Splits a square-free polynomial into rational linear factors and
/// irreducible quadratics with rational data. Candidates come from the
/// numeric roots and are only accepted after exact division.
inline LinearQuadraticFactors split_rational(const RealPoly& squarefree) {
    LinearQuadraticFactors out;
    RealPoly f = squarefree.monic();
    if (f.degree() < 1) {
        out.rest = f;
        return out;
    }
    const Float tol("1e-32");
    for (const auto& z : approximate_roots(f)) {
        if (f.degree() < 1) break;
        const Float re = z.real(), im = z.imag();
        if (abs(im) <= tol * (1 + abs(re))) {
            auto x = rational_near(re, tol);
            if (!x || f(*x) != 0) continue;
            f = divmod(f, RealPoly({-*x, 1})).first;
            out.real_roots.push_back(*x);
        } else if (im > 0) {
            auto x = rational_near(re, tol);
            auto n = rational_near(re * re + im * im, tol);
            if (!x || !n || *n - *x * *x <= 0) continue;
            const RealPoly quad({*n, -2 * *x, 1});
            auto [q, r] = divmod(f, quad);
            if (!r.is_zero()) continue;
            f = std::move(q);
            out.spheres.emplace_back(*x, *n - *x * *x);
        }
    }
    out.rest = f;
    return out;
}

}  // namespace qslice::detail
