#pragma once

// Splitting of a slice polynomial over a slice C_K: every coefficient is
// written alpha + beta L with alpha, beta in C_K, which gives P = F + G L on
// C_K^n for two complex polynomials F and G.

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qslice/error.hpp"
#include "qslice/poly.hpp"
#include "qslice/quaternion.hpp"

namespace qslice {

/// u + v K, with K the frame's first unit.
struct SliceComplex {
    Rational u, v;

    bool is_zero() const { return u == 0 && v == 0; }
    SliceComplex conj() const { return {u, -v}; }

    friend SliceComplex operator+(const SliceComplex& a, const SliceComplex& b) { return {a.u + b.u, a.v + b.v}; }
    friend SliceComplex operator*(const SliceComplex& a, const SliceComplex& b) {
        return {a.u * b.u - a.v * b.v, a.u * b.v + a.v * b.u};
    }
    bool operator==(const SliceComplex&) const = default;
};

class OrthoFrame {
public:
    /// Throws InvalidFrame unless K^2 = L^2 = -1 and KL = -LK.
    OrthoFrame(Quaternion K, Quaternion L) : K_(std::move(K)), L_(std::move(L)) {
        const Quaternion minus_one(-1);
        if (K_ * K_ != minus_one || L_ * L_ != minus_one)
            throw Error(ErrorCode::InvalidFrame, "frame units must square to -1");
        if (K_ * L_ != -(L_ * K_)) throw Error(ErrorCode::InvalidFrame, "frame units must anticommute");
    }

    static OrthoFrame standard() { return {Quaternion::i(), Quaternion::j()}; }

    /// Rotate the standard frame: K = g i g^-1, L = g j g^-1.
    static OrthoFrame rotated(const Quaternion& g) {
        const Quaternion gi = quat_inv(g);
        return {g * Quaternion::i() * gi, g * Quaternion::j() * gi};
    }

    const Quaternion& K() const { return K_; }
    const Quaternion& L() const { return L_; }
    Quaternion KL() const { return K_ * L_; }

    Quaternion embed(const SliceComplex& c) const { return Quaternion(c.u) + K_ * c.v; }

    /// Coordinates of a point of C_K; throws PointOffSlice otherwise.
    SliceComplex project(const Quaternion& z) const {
        SliceComplex c{z.re(), im_dot(z, K_)};
        if (embed(c) != z) throw Error(ErrorCode::PointOffSlice, to_string(z) + " is not on the slice of " + to_string(K_));
        return c;
    }

private:
    Quaternion K_, L_;
};

class ComplexPolyOnSlice {
public:
    using Terms = std::map<MultiIndex, SliceComplex, GradedLexGreater>;

    ComplexPolyOnSlice(std::size_t nvars, Quaternion K) : nvars_(nvars), K_(std::move(K)) {}

    std::size_t nvars() const { return nvars_; }
    const Quaternion& unit() const { return K_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MultiIndex& m, const SliceComplex& c) {
        auto& slot = terms_[m];
        slot = slot + c;
        if (slot.is_zero()) terms_.erase(m);
    }

    SliceComplex coefficient(const MultiIndex& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? SliceComplex{} : it->second;
    }

    /// Evaluation in the commutative field C_K.
    SliceComplex operator()(std::span<const SliceComplex> z) const {
        if (z.size() != nvars_) throw Error(ErrorCode::VariableCountMismatch, "point has the wrong number of components");
        SliceComplex total{};
        for (const auto& [m, c] : terms_) {
            SliceComplex t = c;
            for (std::size_t l = 0; l < nvars_; ++l)
                for (std::uint32_t e = 0; e < m[l]; ++e) t = t * z[l];
            total = total + t;
        }
        return total;
    }

    bool operator==(const ComplexPolyOnSlice& o) const {
        return nvars_ == o.nvars_ && K_ == o.K_ && terms_ == o.terms_;
    }

private:
    std::size_t nvars_;
    Quaternion K_;
    Terms terms_;
};

struct SplitPair {
    ComplexPolyOnSlice F, G;
};

/// Coordinates of a in the orthonormal basis {1, K, L, KL}.
inline std::pair<SliceComplex, SliceComplex> split_coefficient(const Quaternion& a, const OrthoFrame& frame) {
    const Quaternion kl = frame.KL();
    SliceComplex alpha{dot(a, Quaternion(1)), dot(a, frame.K())};
    SliceComplex beta{dot(a, frame.L()), dot(a, kl)};
    if (frame.embed(alpha) + frame.embed(beta) * frame.L() != a)
        throw Error(ErrorCode::InternalError, "basis change did not reproduce the coefficient");
    return {alpha, beta};
}

inline SplitPair split(const SlicePoly& p, const OrthoFrame& frame) {
    SplitPair out{ComplexPolyOnSlice(p.nvars(), frame.K()), ComplexPolyOnSlice(p.nvars(), frame.K())};
    for (const auto& [m, a] : p.terms()) {
        const auto [alpha, beta] = split_coefficient(a, frame);
        out.F.add_term(m, alpha);
        out.G.add_term(m, beta);
    }
    return out;
}

namespace detail {

inline std::vector<SliceComplex> project_point(std::span<const Quaternion> z, const OrthoFrame& frame) {
    std::vector<SliceComplex> out;
    out.reserve(z.size());
    for (const auto& c : z) out.push_back(frame.project(c));
    return out;
}

}  // namespace detail

/// F(z) + G(z) L.
inline Quaternion eval_split_pair(const ComplexPolyOnSlice& F, const ComplexPolyOnSlice& G, const OrthoFrame& frame,
                                  std::span<const Quaternion> z) {
    const auto zc = detail::project_point(z, frame);
    return frame.embed(F(zc)) + frame.embed(G(zc)) * frame.L();
}

/// conj(F(conj z)) - G(z) L, the value the conjugate polynomial must take.
inline Quaternion conjugate_split_value(const ComplexPolyOnSlice& F, const ComplexPolyOnSlice& G,
                                        const OrthoFrame& frame, std::span<const Quaternion> z) {
    const auto zc = detail::project_point(z, frame);
    std::vector<SliceComplex> zbar;
    for (const auto& c : zc) zbar.push_back(c.conj());
    return frame.embed(F(zbar).conj()) - frame.embed(G(zc)) * frame.L();
}

inline bool check_conjugate_split(const SlicePoly& p, const OrthoFrame& frame, std::span<const Quaternion> z) {
    const auto [F, G] = split(p, frame);
    const Quaternion expected = conjugate_split_value(F, G, frame, z);
    return eval(regular_conjugate(p), z) == expected;
}

inline std::string to_string(const SliceComplex& c, const std::string& unit = "K") {
    return "(" + to_string(c.u) + (c.v < 0 ? "-" : "+") + to_string(c.v < 0 ? Rational(-c.v) : c.v) + unit + ")";
}

/// Complex text form: terms like "z1^2*(u+vK)", with K spelled out below.
inline std::string format(const ComplexPolyOnSlice& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::size_t l = 0; l < m.size(); ++l) {
            if (m[l] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "z" + std::to_string(l + 1);
            if (m[l] > 1) mono += "^" + std::to_string(m[l]);
        }
        out += mono.empty() ? to_string(c) : mono + "*" + to_string(c);
    }
    return out;
}

}  // namespace qslice
