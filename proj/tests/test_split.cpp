#include <gtest/gtest.h>

#include "qslice/parser.hpp"
#include "qslice/split.hpp"
#include "test_support.hpp"

using namespace qslice;

namespace {

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();

ComplexPolyOnSlice cpoly(const Quaternion& unit, std::initializer_list<std::pair<std::uint32_t, SliceComplex>> ts) {
    ComplexPolyOnSlice p(1, unit);
    for (const auto& [e, c] : ts) p.add_term({e}, c);
    return p;
}

// Frames used by the random checks: the standard one, a rotated one with
// K = (3i + 4j)/5, and two generic rotations.
std::vector<OrthoFrame> frames() {
    return {OrthoFrame::standard(), OrthoFrame(Quaternion(0, 3, 4, 0) / Rational(5), K),
            OrthoFrame::rotated(Quaternion(1, 2, 0, 1)), OrthoFrame::rotated(Quaternion(2, -1, 3, 1))};
}

std::vector<Quaternion> slice_point(testgen::Gen& gen, const OrthoFrame& f, std::size_t n) {
    std::vector<Quaternion> z;
    for (std::size_t l = 0; l < n; ++l) z.push_back(f.embed({gen.rational(), gen.rational()}));
    return z;
}

}  // namespace

TEST(OrthoFrame, Validation) {
    EXPECT_NO_THROW(OrthoFrame(I, J));
    EXPECT_NO_THROW(OrthoFrame(Quaternion(0, 3, 4, 0) / Rational(5), K));
    for (auto [k, l] : {std::pair{I, I}, std::pair{I, Quaternion(0, 1, 1, 0)}, std::pair{Quaternion(0, 2, 0, 0), J},
                        std::pair{Quaternion(1), J}}) {
        try {
            OrthoFrame f(k, l);
            FAIL() << to_string(k) << ", " << to_string(l);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidFrame);
        }
    }
}

TEST(OrthoFrame, RotatedFrameIsOrthonormal) {
    const OrthoFrame f = OrthoFrame::rotated(Quaternion(1, 2, 0, 1));
    EXPECT_EQ(f.K().norm2(), 1);
    EXPECT_EQ(im_dot(f.K(), f.L()), 0);
    EXPECT_EQ(f.KL() * f.KL(), Quaternion(-1));
}

TEST(Split, Examples) {
    const OrthoFrame f = OrthoFrame::standard();
    auto [F1, G1] = split(parse("q*j"), f);
    EXPECT_TRUE(F1.is_zero());
    EXPECT_EQ(G1, cpoly(I, {{1, {1, 0}}}));

    auto [F2, G2] = split(parse("q*(1+k)"), f);
    EXPECT_EQ(F2, cpoly(I, {{1, {1, 0}}}));
    EXPECT_EQ(G2, cpoly(I, {{1, {0, 1}}}));

    for (const auto& fr : frames()) {
        auto [F3, G3] = split(parse("q^2+1"), fr);
        EXPECT_EQ(F3, cpoly(fr.K(), {{2, {1, 0}}, {0, {1, 0}}}));
        EXPECT_TRUE(G3.is_zero());
    }
}

TEST(Split, EvaluationExample) {
    const OrthoFrame f = OrthoFrame::standard();
    const SlicePoly p = parse("q*(1+k)");
    const auto [F, G] = split(p, f);
    const Quaternion z(2, 3, 0, 0);
    const std::vector<Quaternion> pt{z};
    // (2+3i) + (2+3i) i j
    const Quaternion expected = z + z * I * J;
    EXPECT_EQ(eval_split_pair(F, G, f, pt), expected);
    EXPECT_EQ(eval(p, z), expected);
}

TEST(Split, ConjugateExample) {
    const OrthoFrame f = OrthoFrame::standard();
    const SlicePoly p = parse("q*(1+k)");
    const Quaternion z(2, 3, 0, 0);
    const std::vector<Quaternion> pt{z};
    EXPECT_TRUE(check_conjugate_split(p, f, pt));
    EXPECT_EQ(eval(regular_conjugate(p), z), z - z * K);
    const SlicePoly r = parse("3*q^2 - 2");
    const std::vector<Quaternion> real_pt{Quaternion(make_rational(1, 2))};
    EXPECT_TRUE(check_conjugate_split(r, f, real_pt));
}

TEST(Split, PointOffSlice) {
    const OrthoFrame f = OrthoFrame::standard();
    const auto [F, G] = split(parse("q"), f);
    const std::vector<Quaternion> pt{J};
    try {
        eval_split_pair(F, G, f, pt);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PointOffSlice);
    }
    EXPECT_THROW(check_conjugate_split(parse("q"), f, pt), Error);
}

TEST(Split, Format) {
    const auto [F, G] = split(parse("q*(1+k) - 2*j"), OrthoFrame::standard());
    EXPECT_EQ(format(F), "z1*(1+0K)");
    EXPECT_EQ(format(G), "z1*(0+1K) + (-2+0K)");
}

TEST(SplitProperty, ReproducesEvaluation) {
    testgen::Gen gen(51);
    const auto fs = frames();
    for (int n = 0; n < 200; ++n) {
        const std::size_t nv = static_cast<std::size_t>(gen.integer(1, 2));
        const OrthoFrame& f = fs[static_cast<std::size_t>(n) % fs.size()];
        const SlicePoly p = gen.poly(nv, 3);
        const auto z = slice_point(gen, f, nv);
        const auto [F, G] = split(p, f);
        ASSERT_EQ(eval_split_pair(F, G, f, z), eval(p, z));
        ASSERT_TRUE(check_conjugate_split(p, f, z));
    }
}

TEST(SplitProperty, Linear) {
    testgen::Gen gen(52);
    const auto fs = frames();
    for (int n = 0; n < 100; ++n) {
        const std::size_t nv = static_cast<std::size_t>(gen.integer(1, 3));
        const OrthoFrame& f = fs[static_cast<std::size_t>(n) % fs.size()];
        const SlicePoly p = gen.poly(nv, 3), q = gen.poly(nv, 3);
        const auto sp = split(p, f), sq = split(q, f), sum = split(p + q, f);
        ComplexPolyOnSlice F = sp.F, G = sp.G;
        for (const auto& [m, c] : sq.F.terms()) F.add_term(m, c);
        for (const auto& [m, c] : sq.G.terms()) G.add_term(m, c);
        ASSERT_EQ(sum.F, F);
        ASSERT_EQ(sum.G, G);
    }
}
