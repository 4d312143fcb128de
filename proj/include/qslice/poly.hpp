#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qslice/error.hpp"
#include "qslice/quaternion.hpp"

namespace qslice {

/// Exponents (l_1, ..., l_n) of the ordered monomial q_1^l_1 ... q_n^l_n.
using MultiIndex = std::vector<std::uint32_t>;

/// Degree of a polynomial; std::nullopt for the zero polynomial, which
/// std::optional orders below every natural number.
using Degree = std::optional<std::uint32_t>;

inline std::uint32_t total_degree(const MultiIndex& m) {
    std::uint32_t d = 0;
    for (auto e : m) d += e;
    return d;
}

/// Graded-lex, largest first: higher total degree first, ties broken by
/// comparing exponents from q_1 onwards.
struct GradedLexGreater {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        const auto da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

/// Element of (H[q_1..q_n], +, *): sum of q_1^l_1 ... q_n^l_n a_l with the
/// quaternion coefficient written on the right. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
class SlicePoly {
public:
    using Terms = std::map<MultiIndex, Quaternion, GradedLexGreater>;

    explicit SlicePoly(std::size_t nvars = 1) : nvars_(nvars) {
        if (nvars_ == 0) throw Error(ErrorCode::VariableCountMismatch, "polynomial needs at least one variable");
    }

    static SlicePoly constant(std::size_t nvars, const Quaternion& c) {
        return monomial(nvars, MultiIndex(nvars, 0), c);
    }

    /// q_{index+1}; index is 0-based.
    static SlicePoly variable(std::size_t nvars, std::size_t index) {
        if (index >= nvars)
            throw Error(ErrorCode::VariableCountMismatch, "variable index out of range");
        MultiIndex m(nvars, 0);
        m[index] = 1;
        return monomial(nvars, std::move(m), Quaternion(1));
    }

    static SlicePoly monomial(std::size_t nvars, MultiIndex m, const Quaternion& c) {
        SlicePoly p(nvars);
        p.add_term(std::move(m), c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(MultiIndex m, const Quaternion& c) {
        if (m.size() != nvars_)
            throw Error(ErrorCode::VariableCountMismatch, "multi-index length differs from variable count");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Quaternion coefficient(const MultiIndex& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Quaternion(0) : it->second;
    }

    Quaternion constant_term() const { return coefficient(MultiIndex(nvars_, 0)); }

    /// deg_{q_{var+1}} P
    Degree degree(std::size_t var) const {
        Degree d;
        for (const auto& [m, c] : terms_) d = std::max<Degree>(d, m.at(var));
        return d;
    }

    Degree total_degree() const {
        if (terms_.empty()) return std::nullopt;
        return qslice::total_degree(terms_.begin()->first);
    }

    bool is_constant() const { return terms_.empty() || total_degree() == 0u; }

    /// Coefficient of the graded-lex largest monomial; for one variable, the
    /// top-degree coefficient.
    const Quaternion& leading_coefficient() const {
        if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading coefficient");
        return terms_.begin()->second;
    }

    bool operator==(const SlicePoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    SlicePoly operator-() const {
        SlicePoly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    SlicePoly& operator+=(const SlicePoly& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SlicePoly& operator-=(const SlicePoly& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend SlicePoly operator+(SlicePoly a, const SlicePoly& b) { return a += b; }
    friend SlicePoly operator-(SlicePoly a, const SlicePoly& b) { return a -= b; }

    void check_same(const SlicePoly& o) const {
        if (nvars_ != o.nvars_)
            throw Error(ErrorCode::VariableCountMismatch,
                        std::to_string(nvars_) + " vs " + std::to_string(o.nvars_) + " variables");
    }

private:
    std::size_t nvars_;
    Terms terms_;
};

/// Slice product: coefficient of q^m is sum over r+s=m of a_r b_s, in that order.
inline SlicePoly star_mul(const SlicePoly& p, const SlicePoly& q) {
    p.check_same(q);
    SlicePoly out(p.nvars());
    MultiIndex m(p.nvars());
    for (const auto& [mp, a] : p.terms()) {
        for (const auto& [mq, b] : q.terms()) {
            for (std::size_t l = 0; l < m.size(); ++l) m[l] = mp[l] + mq[l];
            out.add_term(m, a * b);
        }
    }
    return out;
}

inline SlicePoly operator*(const SlicePoly& p, const SlicePoly& q) { return star_mul(p, q); }

/// c * P: every coefficient multiplied by c on the left.
inline SlicePoly left_scale(const Quaternion& c, const SlicePoly& p) {
    SlicePoly out(p.nvars());
    for (const auto& [m, a] : p.terms()) out.add_term(m, c * a);
    return out;
}

/// P * c: every coefficient multiplied by c on the right.
inline SlicePoly right_scale(const SlicePoly& p, const Quaternion& c) {
    SlicePoly out(p.nvars());
    for (const auto& [m, a] : p.terms()) out.add_term(m, a * c);
    return out;
}

inline SlicePoly star_pow(const SlicePoly& p, std::uint32_t e) {
    SlicePoly result = SlicePoly::constant(p.nvars(), 1);
    SlicePoly base = p;
    while (e) {
        if (e & 1u) result = star_mul(result, base);
        e >>= 1;
        if (e) base = star_mul(base, base);
    }
    return result;
}

/// P^c: coefficientwise quaternion conjugation.
inline SlicePoly regular_conjugate(const SlicePoly& p) {
    SlicePoly out(p.nvars());
    for (const auto& [m, a] : p.terms()) out.add_term(m, a.conj());
    return out;
}

/// P^s = P * P^c
inline SlicePoly symmetrization(const SlicePoly& p) { return star_mul(p, regular_conjugate(p)); }

inline bool is_real_coefficients(const SlicePoly& p) {
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [](const auto& t) { return t.second.is_real(); });
}

/// P(p_1, ..., p_n) = sum p_1^l_1 ... p_n^l_n a_l, factors kept in that order.
/// Valid at every point of H^n, commuting or not.
inline Quaternion eval(const SlicePoly& poly, std::span<const Quaternion> point) {
    if (point.size() != poly.nvars())
        throw Error(ErrorCode::VariableCountMismatch, "point dimension differs from variable count");
    std::vector<std::vector<Quaternion>> powers(point.size(), std::vector<Quaternion>{Quaternion(1)});
    auto power = [&](std::size_t l, std::uint32_t e) -> const Quaternion& {
        auto& tbl = powers[l];
        while (tbl.size() <= e) tbl.push_back(tbl.back() * point[l]);
        return tbl[e];
    };
    Quaternion sum(0);
    for (const auto& [m, a] : poly.terms()) {
        Quaternion t(1);
        for (std::size_t l = 0; l < m.size(); ++l)
            if (m[l]) t = t * power(l, m[l]);
        sum += t * a;
    }
    return sum;
}

inline Quaternion eval(const SlicePoly& poly, const CommutingPoint& point) {
    return eval(poly, point.components());
}

inline Quaternion eval(const SlicePoly& poly, const Quaternion& point) {
    return eval(poly, std::span<const Quaternion>(&point, 1));
}

/// (P*Q)(a) for a with commuting components, computed without forming P*Q:
/// 0 when P(a) = 0, otherwise P(a) * Q(P(a)^-1 a P(a)).
inline Quaternion eval_star_at_commuting(const SlicePoly& p, const SlicePoly& q, const CommutingPoint& a) {
    p.check_same(q);
    const Quaternion pa = eval(p, a);
    if (pa.is_zero()) return Quaternion(0);
    return pa * eval(q, a.conjugated_by(pa));
}

struct DivisionResult {
    SlicePoly quotient;
    SlicePoly remainder;
};

/// Left division P = D * quotient + remainder with deg_var(remainder) < deg_var(D).
/// The part of D of top degree in `var` (0-based) must be a single term
/// q_var^d c with c a nonzero constant quaternion. remainder == 0 iff P lies
/// in the right ideal generated by D.
inline DivisionResult divide_monic(const SlicePoly& p, const SlicePoly& d, std::size_t var) {
    p.check_same(d);
    if (var >= p.nvars()) throw Error(ErrorCode::VariableCountMismatch, "division variable out of range");
    if (d.is_zero()) throw Error(ErrorCode::ZeroDivisor, "division by the zero polynomial");

    const std::uint32_t dd = *d.degree(var);
    std::optional<Quaternion> lead;
    for (const auto& [m, c] : d.terms()) {
        if (m[var] != dd) continue;
        for (std::size_t l = 0; l < m.size(); ++l)
            if (l != var && m[l] != 0)
                throw Error(ErrorCode::NonConstantLeadingCoefficient,
                            "leading coefficient in the division variable is not constant");
        lead = c;
    }
    const Quaternion lead_inv = quat_inv(*lead);

    SlicePoly quotient(p.nvars());
    SlicePoly rem = p;
    MultiIndex shifted(p.nvars());
    for (;;) {
        // Pick a term of maximal degree in `var`; every other term of D has
        // smaller degree there, so each step strictly shrinks that layer.
        std::optional<MultiIndex> top;
        for (const auto& [m, c] : rem.terms())
            if (m[var] >= dd && (!top || m[var] > (*top)[var])) top = m;
        if (!top) break;

        MultiIndex shift = *top;
        shift[var] -= dd;
        const Quaternion factor = lead_inv * rem.coefficient(*top);
        quotient.add_term(shift, factor);
        for (const auto& [m, c] : d.terms()) {
            for (std::size_t l = 0; l < m.size(); ++l) shifted[l] = m[l] + shift[l];
            rem.add_term(shifted, -(c * factor));
        }
    }
    return {std::move(quotient), std::move(rem)};
}

}  // namespace qslice
