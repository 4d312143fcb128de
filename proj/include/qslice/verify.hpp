#pragma once

// Checklist of worked examples and randomized identities, run by the
// `verify-paper` command and by the acceptance binary.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qslice/ideals.hpp"
#include "qslice/parser.hpp"
#include "qslice/poly.hpp"
#include "qslice/split.hpp"
#include "qslice/zeros.hpp"

namespace qslice {

using ProductFn = std::function<SlicePoly(const SlicePoly&, const SlicePoly&)>;

struct VerifyOptions {
    static constexpr std::uint64_t kDefaultSeed = 20240611;

    std::vector<std::string> only;  // ids ("A2") or tags ("red1"); empty runs everything
    std::uint64_t seed = kDefaultSeed;
    ProductFn product = star_mul;
};

struct VerifyItem {
    std::string id;
    std::string title;
    std::string expected;
    std::string actual;
    bool passed = false;
};

struct VerifyReport {
    std::vector<VerifyItem> items;

    bool all_passed() const {
        return std::all_of(items.begin(), items.end(), [](const VerifyItem& i) { return i.passed; });
    }
};

namespace detail {

/// Product with the coefficient order reversed, a_r b_s -> b_s a_r. Used as a
/// regression fixture: every check that depends on non-commutativity must fail.
inline SlicePoly transposed_star_mul(const SlicePoly& p, const SlicePoly& q) {
    p.check_same(q);
    SlicePoly out(p.nvars());
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms()) {
            MultiIndex m(mp.size());
            for (std::size_t l = 0; l < m.size(); ++l) m[l] = mp[l] + mq[l];
            out.add_term(m, cq * cp);
        }
    return out;
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rational(std::int64_t n = 5, std::int64_t d = 3) { return make_rational(integer(-n, n), integer(1, d)); }
    Quaternion quaternion(std::int64_t n = 5, std::int64_t d = 3) {
        return {rational(n, d), rational(n, d), rational(n, d), rational(n, d)};
    }
    Quaternion nonzero(std::int64_t n = 5, std::int64_t d = 3) {
        for (;;)
            if (Quaternion q = quaternion(n, d); !q.is_zero()) return q;
    }
    Quaternion imaginary(std::int64_t n = 3, std::int64_t d = 2) {
        for (;;)
            if (Quaternion q{0, rational(n, d), rational(n, d), rational(n, d)}; !q.is_zero()) return q;
    }
    SlicePoly poly(std::size_t nvars, std::uint32_t max_deg, std::size_t max_terms = 5) {
        SlicePoly p(nvars);
        const auto terms = integer(0, static_cast<std::int64_t>(max_terms));
        for (std::int64_t t = 0; t < terms; ++t) {
            MultiIndex m(nvars);
            for (auto& e : m) e = static_cast<std::uint32_t>(integer(0, max_deg));
            p.add_term(m, quaternion());
        }
        return p;
    }
    CommutingPoint commuting_point(std::size_t n) {
        const Quaternion v = imaginary();
        std::vector<Quaternion> comps;
        for (std::size_t l = 0; l < n; ++l) comps.push_back(Quaternion(rational()) + v * rational());
        return CommutingPoint(std::move(comps));
    }
    /// Spheres and isolated roots with distinct spheres; isolated roots are
    /// occasionally real.
    ZeroConfig zero_config(std::size_t max_spheres = 3, std::size_t max_isolated = 3) {
        ZeroConfig cfg;
        auto clash = [&cfg](const Rational& x, const Rational& s) {
            for (const auto& e : cfg.spherical)
                if (e.x == x && e.s == s) return true;
            for (const auto& r : cfg.isolated)
                if (r.re() == x && r.im2() == s) return true;
            return false;
        };
        const auto ns = integer(0, static_cast<std::int64_t>(max_spheres));
        for (std::int64_t t = 0; t < ns; ++t) {
            const Rational x = rational(3, 2), s = imaginary(2, 2).im2();
            if (!clash(x, s)) cfg.spherical.push_back({x, s});
        }
        const auto ni = integer(ns == 0 ? 1 : 0, static_cast<std::int64_t>(max_isolated));
        for (std::int64_t t = 0; t < ni; ++t) {
            const Quaternion r = integer(0, 4) == 0 ? Quaternion(rational(3, 2)) : Quaternion(rational(3, 2)) + imaginary(2, 2);
            if (!clash(r.re(), r.im2())) cfg.isolated.push_back(r);
        }
        return cfg;
    }

private:
    std::mt19937_64 rng_;
};

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string count_text(std::size_t ok, std::size_t total) {
    return std::to_string(ok) + "/" + std::to_string(total);
}

struct Run {
    const VerifyOptions& opt;

    SlicePoly mul(const SlicePoly& p, const SlicePoly& q) const { return opt.product(p, q); }
    SlicePoly poly(const std::string& text, std::size_t nvars = 0) const { return parse(text, nvars); }

    static Quaternion jtilde() { return parse_quaternion("-4/5 i + 3/5 j"); }

    std::vector<SlicePoly> red1_generators() const {
        const SlicePoly g1 = poly("q1 - q2");
        const SlicePoly g2 = mul(poly("q1 - i", 2), poly("q2", 2) - SlicePoly::constant(2, jtilde() * Rational(2)));
        return {g1, g2};
    }

    VerifyItem product_identity() const {
        const std::string got = format(mul(poly("q1+i"), poly("q1-i")));
        return {"A1", "product identity (q1+i)*(q1-i)", "q1^2 + 1", got, got == "q1^2 + 1"};
    }

    VerifyItem jtilde_chain() const {
        const Quaternion g = parse_quaternion("2j - i");
        const Quaternion got = quat_inv(g) * Quaternion::j() * g;
        return {"A2", "conjugate (2j-i)^-1 j (2j-i)", to_string(jtilde()), to_string(got), got == jtilde()};
    }

    VerifyItem red1_generators_vanish() const {
        const auto gens = red1_generators();
        const Quaternion i = Quaternion::i(), j2(0, 0, 2, 0);
        std::string actual;
        bool ok = true;
        for (const auto& pt : {CommutingPoint{i, i}, CommutingPoint{j2, j2}})
            for (const auto& g : gens) {
                const Quaternion v = eval(g, pt);
                if (!actual.empty()) actual += ", ";
                actual += to_string(v);
                ok = ok && v.is_zero();
            }
        return {"A2", "red1 generators at (i,i) and (2j,2j)", "0, 0, 0, 0", actual, ok};
    }

    VerifyItem red2_generators_vanish() const {
        const std::vector<SlicePoly> gens{poly("q1^2 + 1", 2), mul(poly("q1 - q2"), poly("q2 - i"))};
        const std::vector<Quaternion> rotations{
            parse_quaternion("1+k"),   parse_quaternion("2+j"),    parse_quaternion("1+i+j"),
            parse_quaternion("1+j+k"), parse_quaternion("3+i-k"),  parse_quaternion("1+2j"),
            parse_quaternion("2-i+k"), parse_quaternion("j+k"),    parse_quaternion("1+i+j+k"),
            parse_quaternion("5+2i-3j+k")};
        std::size_t ok = 0, total = 0;
        auto check = [&](std::span<const Quaternion> pt) {
            bool all = true;
            for (const auto& g : gens) all = all && eval(g, pt).is_zero();
            ok += all;
            ++total;
        };
        const CommutingPoint base{Quaternion::i(), Quaternion::i()};
        for (const auto& g : rotations) check(base.conjugated_by(g).components());
        const std::vector<Quaternion> ji{Quaternion::j(), Quaternion::i()};
        check(ji);
        return {"A3", "red2 generators on S_(i,i) and at (j,i)", count_text(total, total), count_text(ok, total),
                ok == total};
    }

    VerifyItem evaluation_formula() const {
        Sampler s(opt.seed ^ 0xA4);
        std::size_t ok = 0;
        const std::size_t total = 500;
        for (std::size_t n = 0; n < total; ++n) {
            const std::size_t nv = static_cast<std::size_t>(s.integer(1, 3));
            const SlicePoly p = s.poly(nv, 2), q = s.poly(nv, 2);
            const CommutingPoint a = s.commuting_point(nv);
            ok += eval(mul(p, q), a) == eval_star_at_commuting(p, q, a);
        }
        return {"A4", "evaluation of a product at commuting points", count_text(total, total), count_text(ok, total),
                ok == total};
    }

    VerifyItem splitting() const {
        Sampler s(opt.seed ^ 0xA5);
        std::size_t ok = 0;
        const std::size_t total = 200;
        for (std::size_t n = 0; n < total; ++n) {
            const std::size_t nv = static_cast<std::size_t>(s.integer(1, 3));
            const OrthoFrame f = n % 4 == 0 ? OrthoFrame::standard() : OrthoFrame::rotated(s.nonzero());
            const SlicePoly p = s.poly(nv, 3);
            std::vector<Quaternion> z;
            for (std::size_t l = 0; l < nv; ++l) z.push_back(f.embed({s.rational(), s.rational()}));
            const auto [F, G] = split(p, f);
            ok += eval_split_pair(F, G, f, z) == eval(p, z) && check_conjugate_split(p, f, z);
        }
        return {"A5", "splitting identities", count_text(total, total), count_text(ok, total), ok == total};
    }

    VerifyItem roots_and_correspondence() const {
        Sampler s(opt.seed ^ 0xA6);
        const std::size_t total = 100;
        std::size_t ok = 0;
        for (std::size_t n = 0; n < total; ++n) {
            const ZeroConfig cfg = s.zero_config();
            const SlicePoly p = build_from_zero_config(cfg);
            bool good = roots_one_var(p) == cfg;

            std::vector<Quaternion> probes;
            for (const auto& r : cfg.isolated) probes.push_back(conjugate_by(r, s.nonzero()));
            for (const auto& e : cfg.spherical) probes.push_back(conjugate_by(sphere_point(e), s.nonzero()));
            for (int t = 0; t < 3; ++t) probes.push_back(s.quaternion(3, 2));
            const SlicePoly ps = symmetrization(p);
            for (const auto& a : probes) {
                const CommutingPoint pt{a};
                bool on_zero = false;
                for (const auto& e : cfg.spherical) on_zero = on_zero || e.contains(a);
                for (const auto& r : cfg.isolated) on_zero = on_zero || same_sphere(r, a);
                const bool v = vanishes_on_sphere(p, pt);
                good = good && v == eval(ps, a).is_zero() && v == on_zero;
            }
            const SlicePoly pc = regular_conjugate(p);
            std::vector<Quaternion> zeros = cfg.isolated;
            for (const auto& e : cfg.spherical) zeros.push_back(conjugate_by(sphere_point(e), s.nonzero()));
            for (const auto& b : zeros) {
                const CommutingPoint partner = conjugate_zero_partner(p, CommutingPoint{b});
                good = good && eval(pc, partner).is_zero() && same_sphere(partner[0], b);
            }
            ok += good;
        }
        return {"A6", "zero sets of constructed polynomials", count_text(total, total), count_text(ok, total),
                ok == total};
    }

    VerifyItem principal_table() const {
        struct Row {
            const char* h;
            bool quasi_prime, completely_prime, radical;
            const char* minimal;
        };
        const Row rows[] = {
            {"q - i", true, true, true, "q1 - i"},
            {"q^2 + 1", true, false, true, "q1^2 + 1"},
            {"(q - 1)^2", false, false, false, "q1 - 1"},
            {"(q - i)*(q - 2j)", false, false, true, nullptr},
            {"(q - i)*(q - i)", false, false, false, "q1 - i"},
        };
        std::string expected, actual;
        bool ok = true;
        for (const auto& row : rows) {
            const PrincipalReport r = quasi_prime_principal_one_var(poly(row.h));
            auto line = [&row](bool qp, bool cp, bool rad, const std::string& m) {
                return std::string(row.h) + ": qp=" + yes_no(qp) + " cp=" + yes_no(cp) + " rad=" + yes_no(rad) +
                       (m.empty() ? "" : " min=" + m) + "; ";
            };
            expected += line(row.quasi_prime, row.completely_prime, row.radical, row.minimal ? row.minimal : "");
            actual += line(r.is_quasi_prime, r.is_completely_prime, r.is_radical,
                           row.minimal ? format(r.minimal_generator) : "");
            ok = ok && r.is_quasi_prime == row.quasi_prime && r.is_completely_prime == row.completely_prime &&
                 r.is_radical == row.radical && (!row.minimal || format(r.minimal_generator) == row.minimal);
        }
        for (const char* h : {"q - i", "q^2 + 1"}) {
            const bool none = !find_quasi_prime_violation(poly(h), 2, unit_coefficient_set()).has_value();
            expected += std::string("violation(") + h + ")=none; ";
            actual += std::string("violation(") + h + ")=" + (none ? "none" : "found") + "; ";
            ok = ok && none;
        }
        auto coeffs = unit_coefficient_set();
        coeffs.push_back(Quaternion(0, 0, 2, 0));
        coeffs.push_back(Quaternion(0, 0, -2, 0));
        const SlicePoly h = poly("(q - i)*(q - 2j)");
        const auto v = find_quasi_prime_violation(h, 1, coeffs);
        bool genuine = false;
        if (v)
            genuine = membership_principal_one_var(star_mul(v->p, v->q), h) && !membership_principal_one_var(v->p, h) &&
                      !membership_principal_one_var(symmetrization(v->q), h);
        expected += "violation((q - i)*(q - 2j))=pair";
        actual += "violation((q - i)*(q - 2j))=" +
                  (v ? "(" + format(v->p) + ", " + format(v->q) + ")" + (genuine ? "" : " invalid") : std::string("none"));
        ok = ok && genuine;
        return {"A7", "principal ideal decision table", expected, actual, ok};
    }

    VerifyItem red1_symmetrized_variety() const {
        const auto gens = red1_generators();
        const auto family = symmetrized_family(gens, 1);
        const Quaternion i = Quaternion::i(), j2(0, 0, 2, 0);
        std::vector<CommutingPoint> on{
            CommutingPoint{i, i},
            CommutingPoint{i, i}.conjugated_by(parse_quaternion("1+k")),
            CommutingPoint{i, i}.conjugated_by(parse_quaternion("2+j")),
            CommutingPoint{j2, j2}.conjugated_by(parse_quaternion("1+i+j")),
            CommutingPoint{j2, j2}.conjugated_by(parse_quaternion("3-i+2k")),
        };
        const std::vector<std::string> off_text{"i,2i", "j,-j", "1,1", "0,0", "2j,j", "1+i,1+i", "3k,3k", "i,0", "1+2i,1+2i", "1/2 k,1/2 k"};
        std::size_t ok = 0;
        for (const auto& pt : on) ok += vanishes_on_family(family, pt);
        for (const auto& t : off_text) ok += !vanishes_on_family(family, CommutingPoint(parse_point(t)));
        const std::size_t total = on.size() + off_text.size();
        return {"A8", "red1 symmetrized variety (5 on, 10 off)", count_text(total, total), count_text(ok, total),
                ok == total};
    }

    VerifyItem final_example() const {
        Sampler s(opt.seed ^ 0xA8);
        const SlicePoly p = mul(poly("q1", 2), poly("q2", 2)) + SlicePoly::constant(2, 1);
        const std::size_t total = 10;
        std::size_t ok = 0;
        for (std::size_t n = 0; n < total; ++n) {
            const Quaternion a = s.nonzero();
            ok += eval(p, CommutingPoint{a, -quat_inv(a)}).is_zero();
        }
        return {"A8", "q1*q2 + 1 at (a, -a^-1)", count_text(total, total), count_text(ok, total), ok == total};
    }

    VerifyItem sphere_products() const {
        const Quaternion a = parse_quaternion("1+2i"), b = parse_quaternion("3-j");
        const SlicePoly ga = symmetrization(poly("q1", 2) - SlicePoly::constant(2, a));
        const SlicePoly gb = symmetrization(poly("q2", 2) - SlicePoly::constant(2, b));
        const std::vector<Quaternion> rot{Quaternion(1), parse_quaternion("1+k"), parse_quaternion("2+j"),
                                          parse_quaternion("1+i+j")};
        std::size_t ok = 0, total = 0;
        for (const auto& g : rot)
            for (const auto& h : rot) {
                const std::vector<Quaternion> pt{conjugate_by(a, g), conjugate_by(b, h)};
                ok += eval(ga, pt).is_zero() && eval(gb, pt).is_zero();
                ++total;
            }
        const std::vector<SlicePoly> gens{ga, gb};
        const Quaternion b_on_slice = parse_quaternion("3-i");
        ok += sphere_in_symmetrized_variety(gens, CommutingPoint{a, b_on_slice}, 1);
        ok += !sphere_in_symmetrized_variety(gens, CommutingPoint{a, parse_quaternion("3+2i")}, 1);
        total += 2;
        return {"sxs", "generators of S_a x S_b", count_text(total, total), count_text(ok, total), ok == total};
    }
};

struct Check {
    const char* id;
    const char* title;
    std::vector<const char*> tags;
    VerifyItem (Run::*fn)() const;
};

inline const std::vector<Check>& checks() {
    static const std::vector<Check> table{
        {"A1", "product identity", {"product", "intro"}, &Run::product_identity},
        {"A2", "red1 conjugate chain", {"jtilde", "red1"}, &Run::jtilde_chain},
        {"A2", "red1 generators", {"red1"}, &Run::red1_generators_vanish},
        {"A3", "red2 generators", {"red2"}, &Run::red2_generators_vanish},
        {"A4", "evaluation formula", {"eval", "random"}, &Run::evaluation_formula},
        {"A5", "splitting identities", {"split", "random"}, &Run::splitting},
        {"A6", "zero sets", {"roots", "random"}, &Run::roots_and_correspondence},
        {"A7", "principal decision table", {"principal"}, &Run::principal_table},
        {"A8", "red1 symmetrized variety", {"red1", "simmalg"}, &Run::red1_symmetrized_variety},
        {"A8", "q1*q2 + 1 zeros", {"final"}, &Run::final_example},
        {"sxs", "S_a x S_b generators", {"sxs"}, &Run::sphere_products},
    };
    return table;
}

inline std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

inline bool selected(const Check& c, const std::vector<std::string>& only) {
    if (only.empty()) return true;
    for (const auto& raw : only) {
        const std::string key = lower(raw);
        if (key == lower(c.id)) return true;
        for (const char* t : c.tags)
            if (key == t) return true;
    }
    return false;
}

}  // namespace detail

/// Runs the selected checks. A check that throws is recorded as failed with
/// the error text as its actual value.
inline VerifyReport verify_paper(const VerifyOptions& opt = {}) {
    for (const auto& key : opt.only) {
        bool known = false;
        for (const auto& c : detail::checks()) known = known || detail::selected(c, {key});
        if (!known) throw Error(ErrorCode::InvalidConfig, "unknown check or tag '" + key + "'");
    }
    VerifyReport report;
    const detail::Run run{opt};
    for (const auto& c : detail::checks()) {
        if (!detail::selected(c, opt.only)) continue;
        try {
            report.items.push_back((run.*c.fn)());
        } catch (const Error& e) {
            report.items.push_back({c.id, c.title, "no error", e.what(), false});
        }
    }
    return report;
}

}  // namespace qslice
