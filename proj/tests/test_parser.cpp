#include <gtest/gtest.h>

#include "qslice/parser.hpp"
#include "test_support.hpp"

using namespace qslice;

namespace {

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();

SlicePoly terms(std::size_t nv, std::initializer_list<std::pair<MultiIndex, Quaternion>> ts) {
    SlicePoly p(nv);
    for (const auto& [m, c] : ts) p.add_term(m, c);
    return p;
}

ErrorCode code_of(const std::string& text, std::size_t nvars = 0, std::size_t* offset = nullptr) {
    try {
        parse(text, nvars);
    } catch (const ParseError& e) {
        if (offset) *offset = e.offset();
        return e.code();
    }
    return ErrorCode::InternalError;
}

}  // namespace

TEST(Parse, ProductIdentity) {
    EXPECT_EQ(parse("(q1+i)*(q1-i)"), terms(1, {{{2}, 1}, {{0}, 1}}));
}

TEST(Parse, Red1Generators) {
    EXPECT_EQ(parse("q1 - q2"), terms(2, {{{1, 0}, 1}, {{0, 1}, -1}}));
    const Quaternion two_jt = Quaternion(0, -8, 6, 0) / Rational(5);
    const SlicePoly expected = terms(2, {{{1, 1}, 1},
                                         {{1, 0}, -two_jt},
                                         {{0, 1}, -I},
                                         {{0, 0}, Quaternion(8, 0, 0, 6) / Rational(5)}});
    EXPECT_EQ(parse("(q1-i)*(q2 - (-8/5 i + 6/5 j))"), expected);
}

TEST(Parse, ZeroAndConstants) {
    EXPECT_TRUE(parse("0").is_zero());
    EXPECT_EQ(parse("0").nvars(), 1u);
    EXPECT_EQ(parse("3/6"), SlicePoly::constant(1, make_rational(1, 2)));
    EXPECT_EQ(parse("2j - i"), SlicePoly::constant(1, Quaternion(0, -1, 2, 0)));
}

TEST(Parse, NvarsHandling) {
    EXPECT_EQ(parse("q1", 3).nvars(), 3u);
    EXPECT_EQ(parse("q3").nvars(), 3u);
    EXPECT_EQ(parse("q"), parse("q1"));
    std::size_t off = 0;
    EXPECT_EQ(code_of("q1 + q3", 2, &off), ErrorCode::VariableIndexTooLarge);
    EXPECT_EQ(off, 6u);
}

TEST(Parse, Precedence) {
    // '^' binds tighter than unary '-', which binds tighter than '*'.
    EXPECT_EQ(parse("-q1^2"), terms(1, {{{2}, -1}}));
    EXPECT_EQ(parse("(-q1)^2"), terms(1, {{{2}, 1}}));
    EXPECT_EQ(parse("-q1*q2"), terms(2, {{{1, 1}, -1}}));
    EXPECT_EQ(parse("q1 - q2*q1"), terms(2, {{{1, 0}, 1}, {{1, 1}, -1}}));
    EXPECT_EQ(parse("2*q1^2 + 1"), terms(1, {{{2}, 2}, {{0}, 1}}));
    EXPECT_EQ(parse("q1 - 1 - 1"), terms(1, {{{1}, 1}, {{0}, -2}}));
    EXPECT_EQ(parse("i^2"), SlicePoly::constant(1, -1));
    EXPECT_EQ(parse("(q1+i)^0"), SlicePoly::constant(1, 1));
}

TEST(Parse, ConstantPlacementRegression) {
    // A constant star a bare monomial commutes through it.
    EXPECT_EQ(parse("i*q1"), parse("q1*i"));
    EXPECT_EQ(parse("i*q1"), terms(1, {{{1}, I}}));
    // but not through a polynomial with quaternion coefficients
    EXPECT_NE(parse("i*(q1+j)"), parse("(q1+j)*i"));
}

TEST(Parse, SyntaxErrors) {
    std::size_t off = 0;
    EXPECT_EQ(code_of("q1 q2", 0, &off), ErrorCode::SyntaxError);
    EXPECT_EQ(off, 4u);
    EXPECT_EQ(code_of("2 q1", 0, &off), ErrorCode::SyntaxError);
    EXPECT_EQ(off, 3u);
    EXPECT_EQ(code_of("i j"), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of("(q1 + 1"), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of("q1 +"), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of("1/0"), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of("q0"), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of("x"), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of("q1^"), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of("q1^-1"), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of("q1^99999999999"), ErrorCode::ExponentOverflow);
    EXPECT_EQ(code_of("q99999999"), ErrorCode::VariableIndexTooLarge);
    EXPECT_EQ(code_of(""), ErrorCode::SyntaxError);
}

TEST(Parse, QuaternionPoints) {
    const auto pt = parse_point("i, 2j - i ,-4/5 i + 3/5 j");
    ASSERT_EQ(pt.size(), 3u);
    EXPECT_EQ(pt[0], I);
    EXPECT_EQ(pt[1], Quaternion(0, -1, 2, 0));
    EXPECT_EQ(pt[2], Quaternion(0, -4, 3, 0) / Rational(5));
    try {
        parse_point("i, q1");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 4u);
    }
}

TEST(Format, Examples) {
    EXPECT_EQ(format(parse("q1^2+1")), "q1^2 + 1");
    EXPECT_EQ(format(SlicePoly(2)), "0");
    EXPECT_EQ(format(parse("(q1-i)*(q1-j)")), "q1^2 + q1*(-i - j) + k");
    EXPECT_EQ(format(parse("q1*q2^3 - 2*q2 + (1 + i)")), "q1*q2^3 - q2*(2) + (1 + i)");
    EXPECT_EQ(format(parse("-q1 - 3/5 k")), "-q1 - 3/5 k");
    EXPECT_EQ(format(parse("q1*(-4/5 i + 3/5 j)")), "q1*(-4/5 i + 3/5 j)");
}

TEST(FormatProperty, RoundTrip) {
    testgen::Gen gen(41);
    for (int n = 0; n < 500; ++n) {
        const std::size_t nv = static_cast<std::size_t>(gen.integer(1, 3));
        const SlicePoly p = gen.poly(nv, 4, 6);
        const std::string text = format(p);
        ASSERT_EQ(parse(text, nv), p) << text;
        ASSERT_EQ(format(parse(text, nv)), text);
    }
}
