#pragma once

// Decision procedures for principal right ideals of H[q] and a few tools for
// ideals in several variables: membership by left division, reduction by a
// list of divisors, and bounded families of symmetrized combinations.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qslice/error.hpp"
#include "qslice/poly.hpp"
#include "qslice/zeros.hpp"

namespace qslice {

/// Degree-1 monic factors f_1, ..., f_d with H = f_1 * ... * f_d * lc(H).
inline std::vector<SlicePoly> factor_one_var(const SlicePoly& h) {
    detail::require_one_var(h);
    if (h.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
    SlicePoly m = right_scale(h, quat_inv(h.leading_coefficient()));
    std::vector<SlicePoly> factors;
    while (*m.degree(0) > 0) {
        const ZeroConfig z = roots_one_var(m);
        Quaternion r;
        if (!z.isolated.empty())
            r = z.isolated.front();
        else if (!z.spherical.empty())
            r = sphere_point(z.spherical.front());
        else
            throw Error(ErrorCode::InternalError, "nonconstant polynomial without zeros");
        auto [quot, rem] = divide_monic(m, detail::linear(r), 0);
        if (!rem.is_zero()) throw Error(ErrorCode::InternalError, "root did not split off a linear factor");
        factors.push_back(detail::linear(r));
        m = std::move(quot);
    }
    return factors;
}

struct RadicalResult {
    bool is_radical;
    SlicePoly minimal_generator;
};

/// The ideal is radical iff the monic polynomial of least degree vanishing on
/// the zero set has the same degree as H.
inline RadicalResult is_radical_principal_one_var(const SlicePoly& h) {
    detail::require_one_var(h);
    if (h.is_constant()) throw Error(ErrorCode::ConstantGenerator, "generator must be nonconstant");
    const SlicePoly m = build_from_zero_config(roots_one_var(h));
    if (!divide_monic(h, m, 0).remainder.is_zero())
        throw Error(ErrorCode::InternalError, "minimal generator does not divide the generator");
    return {m.degree(0) == h.degree(0), m};
}

struct PrincipalReport {
    SlicePoly generator;
    std::vector<SlicePoly> factors;
    bool is_proper = true;
    bool is_completely_prime = false;
    bool is_quasi_prime = false;
    bool is_radical = false;
    ZeroConfig zero_set;
    bool zero_set_irreducible = false;
    SlicePoly minimal_generator;
};

inline PrincipalReport quasi_prime_principal_one_var(const SlicePoly& h) {
    detail::require_one_var(h);
    if (h.is_zero()) throw Error(ErrorCode::ConstantGenerator, "the zero ideal is not classified");
    PrincipalReport r;
    r.generator = h;
    if (h.is_constant()) {
        r.is_proper = false;
        r.minimal_generator = SlicePoly::constant(1, 1);
        return r;
    }
    r.factors = factor_one_var(h);
    r.zero_set = roots_one_var(h);
    r.zero_set_irreducible = (r.zero_set.isolated.size() == 1 && r.zero_set.spherical.empty()) ||
                             (r.zero_set.isolated.empty() && r.zero_set.spherical.size() == 1);
    const auto radical = is_radical_principal_one_var(h);
    r.is_radical = radical.is_radical;
    r.minimal_generator = radical.minimal_generator;

    const std::uint32_t d = *h.degree(0);
    r.is_completely_prime = d == 1;
    if (d == 1) {
        r.is_quasi_prime = true;
    } else if (d == 2) {
        const SlicePoly m = right_scale(h, quat_inv(h.leading_coefficient()));
        if (is_real_coefficients(m)) {
            const Rational b = m.coefficient({1}).w, c = m.coefficient({0}).w;
            r.is_quasi_prime = b * b - 4 * c < 0;
        }
    }
    return r;
}

struct AssertIrreducible {};
struct Symmetrization {
    SlicePoly q;
};
using QuasiPrimeWitness = std::variant<AssertIrreducible, Symmetrization>;

enum class QuasiPrimeVerdict { QuasiPrime, ConditionalOnIrreducibility, ConditionalOnAssertion };

constexpr const char* to_string(QuasiPrimeVerdict v) {
    switch (v) {
        case QuasiPrimeVerdict::QuasiPrime: return "quasi prime";
        case QuasiPrimeVerdict::ConditionalOnIrreducibility: return "quasi prime if Q is irreducible";
        case QuasiPrimeVerdict::ConditionalOnAssertion: return "quasi prime if H is irreducible";
    }
    return "?";
}

inline QuasiPrimeVerdict quasi_prime_with_witness(const SlicePoly& h, const QuasiPrimeWitness& w) {
    if (h.is_constant()) throw Error(ErrorCode::ConstantGenerator, "generator must be nonconstant");
    if (std::holds_alternative<AssertIrreducible>(w))
        return h.total_degree() == 1u ? QuasiPrimeVerdict::QuasiPrime : QuasiPrimeVerdict::ConditionalOnAssertion;

    const SlicePoly& q = std::get<Symmetrization>(w).q;
    h.check_same(q);
    if (q == regular_conjugate(q)) throw Error(ErrorCode::WitnessMismatch, "witness satisfies Q = Q^c");
    const SlicePoly qs = symmetrization(q);
    const Quaternion c = quat_inv(qs.leading_coefficient()) * h.leading_coefficient();
    if (right_scale(qs, c) != h) throw Error(ErrorCode::WitnessMismatch, "generator is not a multiple of Q^s");
    return q.total_degree() == 1u ? QuasiPrimeVerdict::QuasiPrime : QuasiPrimeVerdict::ConditionalOnIrreducibility;
}

/// P in <H>, i.e. H left-divides P.
inline bool membership_principal_one_var(const SlicePoly& p, const SlicePoly& h) {
    detail::require_one_var(h);
    return divide_monic(p, h, 0).remainder.is_zero();
}

struct Divisor {
    SlicePoly poly;
    std::size_t var;  // zero-based
};

struct ReductionResult {
    SlicePoly remainder;
    std::vector<SlicePoly> quotients;  // P = sum D_t * Q_t + remainder
};

inline ReductionResult reduce_by_divisors(const SlicePoly& p, const std::vector<Divisor>& divisors) {
    ReductionResult out{p, {}};
    for (const auto& d : divisors) {
        auto [quot, rem] = divide_monic(out.remainder, d.poly, d.var);
        out.quotients.push_back(std::move(quot));
        out.remainder = std::move(rem);
    }
    return out;
}

namespace detail {

/// Exponent vectors of total degree <= bound, in ascending graded-lex order.
inline std::vector<MultiIndex> monomials_up_to(std::size_t nvars, std::uint32_t bound) {
    std::vector<MultiIndex> out;
    MultiIndex m(nvars, 0);
    for (;;) {
        if (total_degree(m) <= bound) out.push_back(m);
        std::size_t l = 0;
        while (l < nvars && m[l] == bound) m[l++] = 0;
        if (l == nvars) break;
        ++m[l];
    }
    std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) { return GradedLexGreater{}(b, a); });
    return out;
}

}  // namespace detail

/// Symmetrizations of gen_a * m * u and of (gen_a * m * u + gen_b * m' * u')
/// over monomials m of total degree <= bound and units u in {1, i, j, k}.
inline std::vector<SlicePoly> symmetrized_family(const std::vector<SlicePoly>& gens, std::uint32_t degree_bound) {
    if (gens.empty()) throw Error(ErrorCode::InvalidConfig, "no generators");
    const std::size_t n = gens.front().nvars();
    for (const auto& g : gens) g.check_same(gens.front());

    const Quaternion units[] = {Quaternion(1), Quaternion::i(), Quaternion::j(), Quaternion::k()};
    std::vector<SlicePoly> summands;
    for (const auto& g : gens)
        for (const auto& m : detail::monomials_up_to(n, degree_bound))
            for (const auto& u : units) summands.push_back(star_mul(g, SlicePoly::monomial(n, m, u)));

    std::vector<SlicePoly> family;
    auto push = [&family](SlicePoly p) {
        if (std::find(family.begin(), family.end(), p) == family.end()) family.push_back(std::move(p));
    };
    for (const auto& s : summands) push(symmetrization(s));
    for (std::size_t a = 0; a < summands.size(); ++a)
        for (std::size_t b = a + 1; b < summands.size(); ++b) push(symmetrization(summands[a] + summands[b]));
    return family;
}

inline bool vanishes_on_family(const std::vector<SlicePoly>& family, const CommutingPoint& a) {
    return std::all_of(family.begin(), family.end(), [&a](const SlicePoly& p) { return eval(p, a).is_zero(); });
}

inline bool sphere_in_symmetrized_variety(const std::vector<SlicePoly>& gens, const CommutingPoint& a,
                                          std::uint32_t degree_bound) {
    return vanishes_on_family(symmetrized_family(gens, degree_bound), a);
}

namespace detail {

/// Integer image of a list of quaternions after clearing denominators, if
/// every component stays below `limit` in absolute value.
struct IntQuat {
    std::int64_t w, x, y, z;
};

inline std::optional<std::vector<IntQuat>> scaled_integers(const std::vector<Quaternion>& qs, std::int64_t limit) {
    Integer l = 1;
    for (const auto& q : qs)
        for (const Rational* c : q.components()) l = lcm(l, den(*c));
    std::vector<IntQuat> out;
    auto fit = [&](const Rational& c, std::int64_t& slot) {
        const Integer v = num(c) * (l / den(c));
        if (abs(v) > limit) return false;
        slot = v.convert_to<std::int64_t>();
        return true;
    };
    for (const auto& q : qs) {
        IntQuat iq{};
        if (!fit(q.w, iq.w) || !fit(q.x, iq.x) || !fit(q.y, iq.y) || !fit(q.z, iq.z)) return std::nullopt;
        out.push_back(iq);
    }
    return out;
}

struct Wide {
    __int128 w = 0, x = 0, y = 0, z = 0;
    void add_product(const IntQuat& a, const IntQuat& b) {
        using W = __int128;
        w += W(a.w) * b.w - W(a.x) * b.x - W(a.y) * b.y - W(a.z) * b.z;
        x += W(a.w) * b.x + W(a.x) * b.w + W(a.y) * b.z - W(a.z) * b.y;
        y += W(a.w) * b.y - W(a.x) * b.z + W(a.y) * b.w + W(a.z) * b.x;
        z += W(a.w) * b.z + W(a.x) * b.y - W(a.y) * b.x + W(a.z) * b.w;
    }
    bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
};

}  // namespace detail

struct ViolationPair {
    SlicePoly p, q;
};

/// All polynomials of degree <= bound with coefficients from `coeffs`, ordered
/// by degree and then lexicographically on the coefficient indices read from
/// the top coefficient down.
inline std::vector<SlicePoly> enumerate_bounded(std::uint32_t bound, const std::vector<Quaternion>& coeffs) {
    struct Entry {
        long degree;
        std::vector<std::size_t> key;
        SlicePoly poly;
    };
    std::vector<Entry> entries;
    const std::size_t len = bound + 1, base = coeffs.size();
    if (base == 0) return {};
    std::vector<std::size_t> idx(len, 0);
    for (;;) {
        SlicePoly p(1);
        for (std::size_t e = 0; e < len; ++e) p.add_term({static_cast<std::uint32_t>(e)}, coeffs[idx[e]]);
        const auto deg = p.degree(0);
        entries.push_back({deg ? static_cast<long>(*deg) : -1, std::vector<std::size_t>(idx.rbegin(), idx.rend()), p});
        std::size_t e = 0;
        while (e < len && idx[e] + 1 == base) idx[e++] = 0;
        if (e == len) break;
        ++idx[e];
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.key < b.key;
    });
    std::vector<SlicePoly> out;
    for (auto& en : entries) out.push_back(std::move(en.poly));
    return out;
}

/// First (P, Q) in enumeration order with P*Q in <H>, P not in <H> and Q^s not
/// in <H>. P is the outer loop.
inline std::optional<ViolationPair> find_quasi_prime_violation(const SlicePoly& h, std::uint32_t deg_bound,
                                                               std::vector<Quaternion> coeff_set) {
    detail::require_one_var(h);
    std::vector<Quaternion> coeffs;
    for (auto& c : coeff_set)
        if (std::find(coeffs.begin(), coeffs.end(), c) == coeffs.end()) coeffs.push_back(std::move(c));
    if (h.is_zero()) throw Error(ErrorCode::ZeroDivisor, "generator is zero");
    if (h.is_constant()) return std::nullopt;

    const std::uint32_t dh = *h.degree(0);
    const std::vector<SlicePoly> polys = enumerate_bounded(deg_bound, coeffs);

    auto remainder_coeffs = [&](const SlicePoly& x) {
        const SlicePoly r = divide_monic(x, h, 0).remainder;
        std::vector<Quaternion> out(dh);
        for (std::uint32_t e = 0; e < dh; ++e) out[e] = r.coefficient({e});
        return out;
    };
    auto shifted = [](const SlicePoly& x, std::uint32_t k) {
        SlicePoly out(1);
        for (const auto& [m, c] : x.terms()) out.add_term({m[0] + k}, c);
        return out;
    };

    // rems[P][k] = coefficients of Rem(P q^k); Rem is right-linear, so
    // Rem(P*Q) = sum_k Rem(P q^k) b_k for Q = sum_k q^k b_k.
    std::vector<std::vector<std::vector<Quaternion>>> rems;
    std::vector<bool> p_in, qs_in;
    for (const auto& p : polys) {
        std::vector<std::vector<Quaternion>> rk;
        for (std::uint32_t k = 0; k <= deg_bound; ++k) rk.push_back(remainder_coeffs(shifted(p, k)));
        const bool in = std::all_of(rk[0].begin(), rk[0].end(), [](const Quaternion& c) { return c.is_zero(); });
        p_in.push_back(in);
        rems.push_back(std::move(rk));
        qs_in.push_back(divide_monic(symmetrization(p), h, 0).remainder.is_zero());
    }

    // Integer images for the fast path.
    constexpr std::int64_t kLimit = std::int64_t{1} << 40;
    const auto coeff_ints = detail::scaled_integers(coeffs, kLimit);
    std::vector<std::vector<std::size_t>> q_index(polys.size());
    for (std::size_t t = 0; t < polys.size(); ++t)
        for (std::uint32_t k = 0; k <= deg_bound; ++k) {
            const Quaternion c = polys[t].coefficient({k});
            q_index[t].push_back(static_cast<std::size_t>(std::find(coeffs.begin(), coeffs.end(), c) - coeffs.begin()));
        }

    for (std::size_t a = 0; a < polys.size(); ++a) {
        if (p_in[a]) continue;
        std::optional<std::vector<detail::IntQuat>> rem_ints;
        if (coeff_ints) {
            std::vector<Quaternion> flat;
            for (const auto& rk : rems[a]) flat.insert(flat.end(), rk.begin(), rk.end());
            rem_ints = detail::scaled_integers(flat, kLimit);
        }
        for (std::size_t b = 0; b < polys.size(); ++b) {
            if (qs_in[b]) continue;
            bool member = true;
            if (rem_ints) {
                for (std::uint32_t j = 0; j < dh && member; ++j) {
                    detail::Wide acc;
                    for (std::uint32_t k = 0; k <= deg_bound; ++k)
                        acc.add_product((*rem_ints)[k * dh + j], (*coeff_ints)[q_index[b][k]]);
                    member = acc.is_zero();
                }
            } else {
                for (std::uint32_t j = 0; j < dh && member; ++j) {
                    Quaternion acc(0);
                    for (std::uint32_t k = 0; k <= deg_bound; ++k) acc += rems[a][k][j] * polys[b].coefficient({k});
                    member = acc.is_zero();
                }
            }
            if (member) return ViolationPair{polys[a], polys[b]};
        }
    }
    return std::nullopt;
}

/// {0, 1, -1, i, -i, j, -j, k, -k}
inline std::vector<Quaternion> unit_coefficient_set() {
    const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
    return {Quaternion(0), Quaternion(1), Quaternion(-1), i, -i, j, -j, k, -k};
}

}  // namespace qslice
