#pragma once

// Expression syntax for H[q_1..q_n]:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' nat)?
//   primary := rational unit? | unit | var | '(' expr ')'
//   unit    := 'i' | 'j' | 'k'
//   var     := 'q' nat?            ("q" alone means q1)
//   rational:= nat ('/' posint)?
//
// '*' is always the slice product. A rational may be followed directly by an
// imaginary unit ("3/5 j"); any other juxtaposition is rejected. Whitespace is
// insignificant and error offsets are 1-based.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qslice/error.hpp"
#include "qslice/poly.hpp"
#include "qslice/quaternion.hpp"

namespace qslice {

inline constexpr std::uint32_t kMaxExponent = 1u << 16;
inline constexpr std::size_t kMaxVariables = 1u << 12;

struct ExprNode {
    enum class Kind { Sum, Difference, StarProduct, Power, Negate, Variable, Literal };

    Kind kind;
    std::vector<ExprNode> children;
    std::uint32_t value = 0;  // exponent (Power) or 1-based index (Variable)
    Quaternion literal;
    std::size_t offset = 0;   // 1-based start in the source text
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprNode parse() {
        ExprNode e = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

    std::size_t max_variable() const { return max_var_; }

private:
    [[noreturn]] void fail(const std::string& msg, ErrorCode code = ErrorCode::SyntaxError) const {
        throw ParseError(code, pos_ + 1, msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    std::string digits() {
        std::string out;
        while (pos_ < text_.size() && is_digit(text_[pos_])) out += text_[pos_++];
        return out;
    }

    ExprNode node(ExprNode::Kind kind, std::size_t offset) {
        ExprNode n{kind, {}, 0, Quaternion(0), offset};
        return n;
    }

    ExprNode binary(ExprNode::Kind kind, ExprNode lhs, ExprNode rhs, std::size_t offset) {
        ExprNode n = node(kind, offset);
        n.children.push_back(std::move(lhs));
        n.children.push_back(std::move(rhs));
        return n;
    }

    ExprNode expr() {
        ExprNode lhs = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            const std::size_t at = pos_ + 1;
            ++pos_;
            lhs = binary(c == '+' ? ExprNode::Kind::Sum : ExprNode::Kind::Difference, std::move(lhs), term(), at);
        }
        return lhs;
    }

    ExprNode term() {
        ExprNode lhs = unary();
        while (peek() == '*') {
            const std::size_t at = pos_ + 1;
            ++pos_;
            lhs = binary(ExprNode::Kind::StarProduct, std::move(lhs), unary(), at);
        }
        return lhs;
    }

    ExprNode unary() {
        if (peek() == '-') {
            ExprNode n = node(ExprNode::Kind::Negate, pos_ + 1);
            ++pos_;
            n.children.push_back(unary());
            return n;
        }
        return power();
    }

    ExprNode power() {
        ExprNode base = primary();
        if (peek() != '^') return base;
        ExprNode n = node(ExprNode::Kind::Power, pos_ + 1);
        ++pos_;
        skip_ws();
        const std::string ds = digits();
        if (ds.empty()) fail("expected a nonnegative integer exponent");
        if (ds.size() > 9 || std::stoul(ds) > kMaxExponent)
            throw ParseError(ErrorCode::ExponentOverflow, n.offset, "exponent exceeds " + std::to_string(kMaxExponent));
        n.value = static_cast<std::uint32_t>(std::stoul(ds));
        n.children.push_back(std::move(base));
        return n;
    }

    static Quaternion unit(char c) {
        switch (c) {
        case 'i': return Quaternion::i();
        case 'j': return Quaternion::j();
        default: return Quaternion::k();
        }
    }

    ExprNode primary() {
        const char c = peek();
        const std::size_t at = pos_ + 1;
        if (c == '\0') fail("unexpected end of input");
        if (c == '(') {
            ++pos_;
            ExprNode inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (is_digit(c)) {
            Rational value{Integer(digits())};
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                const std::string ds = digits();
                if (ds.empty()) fail("expected a denominator");
                Integer d(ds);
                if (d == 0) fail("zero denominator");
                value /= Rational(d);
            }
            ExprNode n = node(ExprNode::Kind::Literal, at);
            const char u = peek();
            if (u == 'i' || u == 'j' || u == 'k') {
                ++pos_;
                n.literal = unit(u) * value;
            } else {
                n.literal = Quaternion(value);
            }
            return n;
        }
        if (c == 'i' || c == 'j' || c == 'k') {
            ++pos_;
            ExprNode n = node(ExprNode::Kind::Literal, at);
            n.literal = unit(c);
            return n;
        }
        if (c == 'q') {
            ++pos_;
            const std::string ds = digits();
            std::size_t index = 1;
            if (!ds.empty()) {
                if (ds.size() > 6 || std::stoul(ds) > kMaxVariables)
                    throw ParseError(ErrorCode::VariableIndexTooLarge, at, "variable index too large");
                index = std::stoul(ds);
                if (index == 0) throw ParseError(ErrorCode::SyntaxError, at, "variable indices start at 1");
            }
            ExprNode n = node(ExprNode::Kind::Variable, at);
            n.value = static_cast<std::uint32_t>(index);
            max_var_ = std::max(max_var_, index);
            return n;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t max_var_ = 0;
};

inline SlicePoly fold(const ExprNode& n, std::size_t nvars) {
    using K = ExprNode::Kind;
    switch (n.kind) {
    case K::Sum: return fold(n.children[0], nvars) + fold(n.children[1], nvars);
    case K::Difference: return fold(n.children[0], nvars) - fold(n.children[1], nvars);
    case K::StarProduct: return star_mul(fold(n.children[0], nvars), fold(n.children[1], nvars));
    case K::Power: return star_pow(fold(n.children[0], nvars), n.value);
    case K::Negate: return -fold(n.children[0], nvars);
    case K::Variable: return SlicePoly::variable(nvars, n.value - 1);
    case K::Literal: return SlicePoly::constant(nvars, n.literal);
    }
    throw Error(ErrorCode::InternalError, "unknown expression node");
}

inline std::size_t max_variable(const ExprNode& n) {
    std::size_t m = n.kind == ExprNode::Kind::Variable ? n.value : 0;
    for (const auto& c : n.children) m = std::max(m, max_variable(c));
    return m;
}

inline const ExprNode* find_variable_above(const ExprNode& n, std::size_t limit) {
    if (n.kind == ExprNode::Kind::Variable && n.value > limit) return &n;
    for (const auto& c : n.children)
        if (auto* hit = find_variable_above(c, limit)) return hit;
    return nullptr;
}

}  // namespace detail

inline ExprNode parse_expr(std::string_view text) { return detail::Parser(text).parse(); }

/// Parses `text` into H[q_1..q_nvars]. With nvars == 0 the count is the
/// largest index mentioned (at least 1).
inline SlicePoly parse(std::string_view text, std::size_t nvars = 0) {
    const ExprNode ast = parse_expr(text);
    const std::size_t used = detail::max_variable(ast);
    if (nvars == 0) {
        nvars = std::max<std::size_t>(used, 1);
    } else if (used > nvars) {
        const ExprNode* bad = detail::find_variable_above(ast, nvars);
        throw ParseError(ErrorCode::VariableIndexTooLarge, bad->offset,
                         "q" + std::to_string(bad->value) + " exceeds " + std::to_string(nvars) + " variables");
    }
    return detail::fold(ast, nvars);
}

/// A variable-free expression, e.g. "-4/5 i + 3/5 j" or "(2j-i)^2".
inline Quaternion parse_quaternion(std::string_view text) {
    const ExprNode ast = parse_expr(text);
    if (const ExprNode* v = detail::find_variable_above(ast, 0))
        throw ParseError(ErrorCode::SyntaxError, v->offset, "variable in a quaternion literal");
    return detail::fold(ast, 1).constant_term();
}

/// Comma-separated quaternion literals.
inline std::vector<Quaternion> parse_point(std::string_view text) {
    std::vector<Quaternion> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        const std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        try {
            out.push_back(parse_quaternion(piece));
        } catch (const ParseError& e) {
            throw ParseError(e.code(), e.offset() + start, e.message());
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

namespace detail {

inline std::size_t nonzero_components(const Quaternion& q) {
    std::size_t n = 0;
    for (const Rational* c : q.components()) n += (*c != 0);
    return n;
}

inline std::string monomial_text(const MultiIndex& m) {
    std::string out;
    for (std::size_t l = 0; l < m.size(); ++l) {
        if (m[l] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'q' + std::to_string(l + 1);
        if (m[l] > 1) out += '^' + std::to_string(m[l]);
    }
    return out;
}

}  // namespace detail

/// Canonical text: terms in graded-lex order (largest first), each written
/// `q1^l1*q2^l2*(coef)`; unit coefficients are elided and a coefficient with
/// a single negative component is pulled out as a minus sign.
/// parse(format(P), P.nvars()) == P.
inline std::string format(const SlicePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        const bool single = detail::nonzero_components(c) == 1;
        const bool negative = single && (c.w < 0 || c.x < 0 || c.y < 0 || c.z < 0);
        const Quaternion body = negative ? -c : c;
        const std::string mono = detail::monomial_text(m);
        std::string text;
        if (mono.empty())
            text = single ? to_string(body) : "(" + to_string(body) + ")";
        else if (body.is_one())
            text = mono;
        else
            text = mono + "*(" + to_string(body) + ")";
        if (out.empty())
            out = (negative ? "-" : "") + text;
        else
            out += (negative ? " - " : " + ") + text;
    }
    return out;
}

inline std::string to_string(const SlicePoly& p) { return format(p); }

}  // namespace qslice
