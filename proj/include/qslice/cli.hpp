#pragma once

// Command-line front end. `run` parses argv with CLI11, dispatches to the
// library and writes to the given streams, so it can be driven from tests.
//
// Exit codes: 0 success, 1 negative verdict (quasiprime, verify-paper),
// 2 conditional verdict, 64 usage, 65 domain error, 70 internal error.

#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "qslice/ideals.hpp"
#include "qslice/json_io.hpp"
#include "qslice/parser.hpp"
#include "qslice/poly.hpp"
#include "qslice/quaternion.hpp"
#include "qslice/split.hpp"
#include "qslice/verify.hpp"
#include "qslice/zeros.hpp"

namespace qslice::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitConditional = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDomain = 65;
inline constexpr int kExitInternal = 70;

struct CommandInfo {
    std::string_view name;
    std::vector<std::string_view> operations;
};

/// Which library operation each command reaches.
inline const std::vector<CommandInfo>& command_table() {
    static const std::vector<CommandInfo> table{
        {"quat mul", {"quat_mul"}},
        {"quat inv", {"quat_inv"}},
        {"quat commutes", {"commutes"}},
        {"quat same-sphere", {"same_sphere"}},
        {"quat member", {"sphere_membership"}},
        {"format", {"parse", "format"}},
        {"mul", {"star_mul"}},
        {"conj", {"regular_conjugate"}},
        {"symm", {"symmetrization", "is_real_coefficients"}},
        {"eval", {"eval", "eval_star_at_commuting"}},
        {"divide", {"divide_monic"}},
        {"split", {"split", "eval_split_pair", "check_conjugate_split"}},
        {"roots", {"roots_one_var", "vanishes_on_sphere", "conjugate_zero_partner"}},
        {"factor", {"factor_one_var", "append_zero", "build_from_zero_config"}},
        {"quasiprime", {"quasi_prime_principal_one_var", "quasi_prime_with_witness"}},
        {"radical", {"is_radical_principal_one_var"}},
        {"membership", {"membership_principal_one_var"}},
        {"reduce", {"reduce_by_divisors"}},
        {"simmcheck", {"sphere_in_symmetrized_variety", "symmetrized_family"}},
        {"violation", {"find_quasi_prime_violation"}},
        {"verify-paper", {"verify_paper"}},
    };
    return table;
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

using json::Json;

struct Globals {
    std::size_t nvars = 0;
    bool json = false;
    std::uint64_t seed = VerifyOptions::kDefaultSeed;
    std::uint32_t degree_bound = 1;
    std::string coeff_set;
    std::vector<std::string> only;
};

/// Parses all texts into one ring: with --nvars absent the ring is the
/// largest one any of them needs.
inline std::vector<SlicePoly> polys(const std::vector<std::string>& texts, std::size_t nvars) {
    if (nvars == 0)
        for (const auto& t : texts) nvars = std::max(nvars, parse(t).nvars());
    std::vector<SlicePoly> out;
    for (const auto& t : texts) out.push_back(parse(t, nvars));
    return out;
}

inline std::string factors_text(const std::vector<SlicePoly>& fs) {
    std::string out;
    for (const auto& f : fs) out += (out.empty() ? "(" : "*(") + format(f) + ")";
    return out.empty() ? "1" : out;
}

inline Json factors_json(const std::vector<SlicePoly>& fs) {
    Json out = Json::array();
    for (const auto& f : fs) out.push_back(json::poly(f));
    return out;
}

inline ZeroConfig config_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::SyntaxError, std::string("bad configuration JSON: ") + e.what());
    }
    ZeroConfig cfg;
    auto quat = [](const Json& v) {
        return v.is_string() ? parse_quaternion(v.get<std::string>()) : json::quaternion_from(v);
    };
    try {
        if (j.contains("isolated"))
            for (const auto& v : j.at("isolated")) cfg.isolated.push_back(quat(v));
        if (j.contains("spheres"))
            for (const auto& v : j.at("spheres"))
                cfg.spherical.push_back({json::rational_from(v.at("re")), json::rational_from(v.at("im2"))});
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::SyntaxError, std::string("bad configuration JSON: ") + e.what());
    }
    return cfg;
}

inline std::vector<std::size_t> order_from_text(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(item, &used);
            if (used != item.size() || v == 0) throw std::invalid_argument(item);
            out.push_back(v - 1);
        } catch (const std::exception&) {
            throw UsageError("--order expects 1-based positions, got '" + item + "'");
        }
    }
    return out;
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(int argc, const char* const* argv) {
        CLI::App app{"Exact algebra of quaternionic slice polynomials"};
        app.name("qslice");
        app.require_subcommand(1);
        app.option_defaults()->always_capture_default();
        app.add_option("--nvars", g_.nvars, "number of variables (default: largest index used)");
        app.add_flag("--json", g_.json, "machine-readable output");
        app.add_option("--seed", g_.seed, "seed for randomized checks");
        app.add_option("--degree-bound", g_.degree_bound, "degree bound for simmcheck and violation");
        app.add_option("--coeff-set", g_.coeff_set, "comma-separated coefficients for violation");
        app.add_option("--only", g_.only, "verify-paper: ids or tags to run")->delimiter(',');
        app.fallthrough();

        register_commands(app);
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) return app.exit(e, out_, err_);
            err_ << "usage error: " << e.what() << "\n";
            return kExitUsage;
        }
        return action_();
    }

private:
    std::ostream& out_;
    std::ostream& err_;
    Globals g_;
    std::function<int()> action_;

    // option storage shared by the subcommands
    std::vector<std::string> args_;
    std::string at_, star_with_, frame_, partner_, sphere_of_, append_, build_, order_, witness_;
    std::vector<std::string> by_;
    std::size_t var_ = 1;
    bool is_real_ = false, list_ = false;

    CLI::App* command(CLI::App& parent, const std::string& name, const std::string& help, std::size_t min_args,
                      std::size_t max_args, const std::string& arg_name, std::function<int()> fn) {
        CLI::App* sub = parent.add_subcommand(name, help);
        sub->fallthrough();
        if (max_args > 0) {
            auto* opt = sub->add_option("args", args_, help)->type_name(arg_name);
            opt->expected(static_cast<int>(min_args), static_cast<int>(max_args));
            if (min_args > 0) opt->required();
        }
        sub->callback([this, fn] { action_ = fn; });
        return sub;
    }

    SlicePoly one(std::size_t nvars = 0) const { return parse(args_.at(0), nvars ? nvars : g_.nvars); }

    void emit(const Json& j, const std::string& text) const {
        if (g_.json)
            out_ << j.dump(2) << '\n';
        else
            out_ << text << '\n';
    }

    void emit_poly(const SlicePoly& p) const { emit(json::poly(p), format(p)); }
    void emit_bool(bool b) const { emit(Json{{"result", b}}, b ? "true" : "false"); }
    void emit_quat(const Quaternion& q) const { emit(json::quaternion(q), to_string(q)); }

    std::vector<Quaternion> point(const std::string& text) const { return parse_point(text); }

    void register_commands(CLI::App& app) {
        CLI::App* quat = app.add_subcommand("quat", "quaternion arithmetic");
        quat->require_subcommand(1);
        quat->fallthrough();
        command(*quat, "mul", "product a*b", 2, 2, "A B", [this] {
            emit_quat(parse_quaternion(args_[0]) * parse_quaternion(args_[1]));
            return kExitOk;
        });
        command(*quat, "inv", "inverse", 1, 1, "A", [this] {
            emit_quat(quat_inv(parse_quaternion(args_[0])));
            return kExitOk;
        });
        command(*quat, "commutes", "whether ab = ba", 2, 2, "A B", [this] {
            emit_bool(commutes(parse_quaternion(args_[0]), parse_quaternion(args_[1])));
            return kExitOk;
        });
        command(*quat, "same-sphere", "whether b is a conjugate of a", 2, 2, "A B", [this] {
            emit_bool(same_sphere(parse_quaternion(args_[0]), parse_quaternion(args_[1])));
            return kExitOk;
        });
        command(*quat, "member", "whether POINT lies on the sphere of --sphere-of", 1, 1, "POINT", [this] {
            const CommutingPoint p(point(args_[0])), a(point(sphere_of_));
            emit_bool(sphere_membership(p, SphereData::of(a)));
            return kExitOk;
        })->add_option("--sphere-of", sphere_of_, "commuting point whose sphere is tested")->required();

        command(app, "format", "parse and print in normal form", 1, 1, "P", [this] {
            emit_poly(one());
            return kExitOk;
        });
        command(app, "mul", "star product P1*P2*...", 1, 64, "P", [this] {
            const auto ps = polys(args_, g_.nvars);
            SlicePoly acc = ps.front();
            for (std::size_t t = 1; t < ps.size(); ++t) acc = star_mul(acc, ps[t]);
            emit_poly(acc);
            return kExitOk;
        });
        command(app, "conj", "regular conjugate", 1, 1, "P", [this] {
            emit_poly(regular_conjugate(one()));
            return kExitOk;
        });
        command(app, "symm", "symmetrization", 1, 1, "P", [this] {
            const SlicePoly p = one();
            if (is_real_)
                emit_bool(is_real_coefficients(p));
            else
                emit_poly(symmetrization(p));
            return kExitOk;
        })->add_flag("--is-real", is_real_, "only report whether P has real coefficients");

        auto* ev = command(app, "eval", "evaluate P at --at", 1, 1, "P", [this] {
            const auto a = point(at_);
            if (star_with_.empty()) {
                emit_quat(eval(one(), a));
            } else {
                const auto ps = polys({args_[0], star_with_}, g_.nvars);
                emit_quat(eval_star_at_commuting(ps[0], ps[1], CommutingPoint(a)));
            }
            return kExitOk;
        });
        ev->add_option("--at", at_, "point, comma-separated quaternions")->required();
        ev->add_option("--star-with", star_with_, "evaluate P*Q at a commuting point through P and Q");

        command(app, "divide", "left division of P by a monic D in one variable", 2, 2, "P D", [this] {
            const auto ps = polys(args_, g_.nvars);
            if (var_ == 0) throw UsageError("--var is 1-based");
            const auto [quot, rem] = divide_monic(ps[0], ps[1], var_ - 1);
            emit(Json{{"quotient", json::poly(quot)}, {"remainder", json::poly(rem)}},
                 "quotient: " + format(quot) + "\nremainder: " + format(rem));
            return kExitOk;
        })->add_option("--var", var_, "variable of D (1-based)");

        auto* sp = command(app, "split", "complex split P = F + G L on a slice", 1, 1, "P", [this] { return do_split(); });
        sp->add_option("--frame", frame_, "K,L (default i,j)");
        sp->add_option("--at", at_, "point of the slice: also evaluate both identities there");

        auto* ro = command(app, "roots", "zero set of a one-variable polynomial", 1, 1, "P", [this] { return do_roots(); });
        auto* sphere_opt = ro->add_option("--sphere-of", sphere_of_, "only test whether P vanishes on the sphere of a point");
        ro->add_option("--partner", partner_, "zero of P^c paired with the zero b of P")->excludes(sphere_opt);

        auto* fa = command(app, "factor", "linear factors of a one-variable polynomial", 0, 1, "H", [this] { return do_factor(); });
        auto* build_opt = fa->add_option("--build", build_, "JSON zero configuration to build a polynomial from");
        fa->add_option("--append", append_, "append the zero b to H")->excludes(build_opt);
        fa->add_option("--order", order_, "with --build: 1-based order of the isolated roots")->needs(build_opt);

        command(app, "quasiprime", "classify the principal ideal <H>", 1, 1, "H", [this] { return do_quasiprime(); })
            ->add_option("--witness", witness_, "irreducible | symm:Q");

        command(app, "radical", "whether <H> is radical", 1, 1, "H", [this] {
            const auto r = is_radical_principal_one_var(one());
            emit(Json{{"is_radical", r.is_radical}, {"minimal_generator", json::poly(r.minimal_generator)}},
                 std::string("radical: ") + (r.is_radical ? "true" : "false") +
                     "\nminimal generator: " + format(r.minimal_generator));
            return kExitOk;
        });
        command(app, "membership", "whether P lies in <H>", 2, 2, "P H", [this] {
            const auto ps = polys(args_, g_.nvars);
            emit_bool(membership_principal_one_var(ps[0], ps[1]));
            return kExitOk;
        });
        command(app, "reduce", "successive division by D@VAR", 1, 1, "P", [this] { return do_reduce(); })
            ->add_option("--by", by_, "divisor D@VAR (VAR 1-based), repeatable")
            ->required();

        auto* sc = command(app, "simmcheck", "whether the symmetrized family vanishes at --at", 1, 64, "GEN",
                           [this] { return do_simmcheck(); });
        auto* list_opt = sc->add_flag("--list", list_, "print the family instead");
        sc->add_option("--at", at_, "commuting point")->excludes(list_opt);

        command(app, "violation", "search for a quasi-prime violation", 1, 1, "H", [this] { return do_violation(); });
        command(app, "verify-paper", "run the verification checklist", 0, 0, "", [this] { return do_verify(); });
    }

    int do_split() {
        const OrthoFrame f = frame_.empty() ? OrthoFrame::standard() : [this] {
            const auto kl = point(frame_);
            if (kl.size() != 2) throw UsageError("--frame expects K,L");
            return OrthoFrame(kl[0], kl[1]);
        }();
        const SlicePoly p = one();
        const auto [F, G] = split(p, f);
        Json j{{"K", json::quaternion(f.K())}, {"L", json::quaternion(f.L())}, {"F", format(F)}, {"G", format(G)}};
        std::string text = "F: " + format(F) + "\nG: " + format(G);
        if (!at_.empty()) {
            const auto z = point(at_);
            const Quaternion v = eval_split_pair(F, G, f, z);
            const bool conj_ok = check_conjugate_split(p, f, z);
            j["value"] = json::quaternion(v);
            j["conjugate_identity"] = conj_ok;
            text += "\nvalue: " + to_string(v) + "\nconjugate identity: " + (conj_ok ? "holds" : "fails");
        }
        emit(j, text);
        return kExitOk;
    }

    int do_roots() {
        const SlicePoly p = one();
        if (!sphere_of_.empty()) {
            emit_bool(vanishes_on_sphere(p, CommutingPoint(point(sphere_of_))));
        } else if (!partner_.empty()) {
            const CommutingPoint c = conjugate_zero_partner(p, CommutingPoint(point(partner_)));
            emit(json::point(c.components()), to_string(c));
        } else {
            const ZeroConfig cfg = roots_one_var(p);
            emit(json::zero_config(cfg), to_string(cfg));
        }
        return kExitOk;
    }

    int do_factor() {
        if (!build_.empty()) {
            if (!args_.empty()) throw UsageError("factor --build takes no polynomial");
            const ZeroConfig cfg = config_from_json(build_);
            emit_poly(order_.empty() ? build_from_zero_config(cfg) : build_from_zero_config(cfg, order_from_text(order_)));
            return kExitOk;
        }
        if (args_.size() != 1) throw UsageError("factor needs exactly one polynomial");
        const SlicePoly h = one();
        if (!append_.empty()) {
            emit_poly(append_zero(h, parse_quaternion(append_)));
            return kExitOk;
        }
        const auto fs = factor_one_var(h);
        const Quaternion lc = h.leading_coefficient();
        emit(Json{{"factors", factors_json(fs)}, {"unit", json::quaternion(lc)}},
             factors_text(fs) + (lc == Quaternion(1) ? "" : "*(" + to_string(lc) + ")"));
        return kExitOk;
    }

    int do_quasiprime() {
        if (!witness_.empty()) {
            const SlicePoly h = one();
            QuasiPrimeWitness w = AssertIrreducible{};
            if (witness_.rfind("symm:", 0) == 0)
                w = Symmetrization{polys({args_[0], witness_.substr(5)}, g_.nvars)[1]};
            else if (witness_ != "irreducible")
                throw UsageError("--witness expects 'irreducible' or 'symm:Q'");
            const QuasiPrimeVerdict v = quasi_prime_with_witness(h, w);
            emit(Json{{"verdict", to_string(v)}}, to_string(v));
            return v == QuasiPrimeVerdict::QuasiPrime ? kExitOk : kExitConditional;
        }
        const PrincipalReport r = quasi_prime_principal_one_var(one());
        auto b = [](bool x) { return std::string(x ? "true" : "false"); };
        if (!r.is_proper) {
            emit(Json{{"generator", json::poly(r.generator)}, {"is_proper", false}},
                 "generator: " + format(r.generator) + "\nproper: false");
            return kExitConditional;
        }
        emit(Json{{"generator", json::poly(r.generator)},
                  {"is_proper", true},
                  {"is_quasi_prime", r.is_quasi_prime},
                  {"is_completely_prime", r.is_completely_prime},
                  {"is_radical", r.is_radical},
                  {"minimal_generator", json::poly(r.minimal_generator)},
                  {"zero_set", json::zero_config(r.zero_set)},
                  {"zero_set_irreducible", r.zero_set_irreducible},
                  {"factors", factors_json(r.factors)}},
             "generator: " + format(r.generator) + "\nproper: true\nquasi prime: " + b(r.is_quasi_prime) +
                 "\ncompletely prime: " + b(r.is_completely_prime) + "\nradical: " + b(r.is_radical) +
                 "\nminimal generator: " + format(r.minimal_generator) + "\nzero set: " + to_string(r.zero_set) +
                 "\nzero set irreducible: " + b(r.zero_set_irreducible) + "\nfactors: " + factors_text(r.factors));
        return r.is_quasi_prime ? kExitOk : kExitNegative;
    }

    int do_reduce() {
        std::vector<std::string> texts{args_[0]};
        std::vector<std::size_t> vars;
        for (const auto& b : by_) {
            const auto at = b.rfind('@');
            if (at == std::string::npos) throw UsageError("--by expects D@VAR, got '" + b + "'");
            const std::string v = b.substr(at + 1);
            std::size_t used = 0;
            unsigned long var = 0;
            try {
                var = std::stoul(v, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != v.size() || var == 0) throw UsageError("bad variable in --by '" + b + "'");
            texts.push_back(b.substr(0, at));
            vars.push_back(var - 1);
        }
        const auto ps = polys(texts, g_.nvars);
        std::vector<Divisor> ds;
        for (std::size_t t = 0; t < vars.size(); ++t) ds.push_back({ps[t + 1], vars[t]});
        const ReductionResult r = reduce_by_divisors(ps[0], ds);
        Json qs = Json::array();
        std::string text = "remainder: " + format(r.remainder);
        for (std::size_t t = 0; t < r.quotients.size(); ++t) {
            qs.push_back(json::poly(r.quotients[t]));
            text += "\nquotient " + std::to_string(t + 1) + ": " + format(r.quotients[t]);
        }
        emit(Json{{"remainder", json::poly(r.remainder)}, {"quotients", qs}}, text);
        return kExitOk;
    }

    int do_simmcheck() {
        const auto gens = polys(args_, g_.nvars);
        if (list_) {
            const auto family = symmetrized_family(gens, g_.degree_bound);
            Json j = Json::array();
            std::string text;
            for (const auto& p : family) {
                j.push_back(json::poly(p));
                text += (text.empty() ? "" : "\n") + format(p);
            }
            emit(j, text);
            return kExitOk;
        }
        if (at_.empty()) throw UsageError("simmcheck needs --at or --list");
        emit_bool(sphere_in_symmetrized_variety(gens, CommutingPoint(point(at_)), g_.degree_bound));
        return kExitOk;
    }

    int do_violation() {
        const auto coeffs = g_.coeff_set.empty() ? unit_coefficient_set() : point(g_.coeff_set);
        const auto v = find_quasi_prime_violation(one(1), g_.degree_bound, coeffs);
        if (!v)
            emit(Json{{"violation", nullptr}}, "none");
        else
            emit(Json{{"violation", {{"p", json::poly(v->p)}, {"q", json::poly(v->q)}}}},
                 "P: " + format(v->p) + "\nQ: " + format(v->q));
        return kExitOk;
    }

    int do_verify() {
        VerifyOptions opt;
        opt.only = g_.only;
        opt.seed = g_.seed;
        const VerifyReport r = verify_paper(opt);
        Json items = Json::array();
        std::string text;
        std::size_t passed = 0;
        for (const auto& it : r.items) {
            passed += it.passed;
            items.push_back({{"id", it.id}, {"title", it.title}, {"expected", it.expected}, {"actual", it.actual},
                             {"passed", it.passed}});
            text += std::string(it.passed ? "PASS " : "FAIL ") + it.id + " " + it.title + "\n  expected: " +
                    it.expected + "\n  actual:   " + it.actual + "\n";
        }
        text += std::to_string(passed) + "/" + std::to_string(r.items.size()) + " passed";
        emit(Json{{"items", items}, {"all_passed", r.all_passed()}}, text);
        return r.all_passed() ? kExitOk : kExitNegative;
    }
};

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        detail::Runner runner(out, err);
        return runner.run(argc, argv);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::InternalError ? kExitInternal : kExitDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace qslice::cli
