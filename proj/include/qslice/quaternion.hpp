#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qslice/error.hpp"
#include "qslice/rational.hpp"

namespace qslice {

/// Exact rational quaternion w + x i + y j + z k.
struct Quaternion {
    Rational w, x, y, z;

    Quaternion() = default;
    Quaternion(Rational w_, Rational x_ = 0, Rational y_ = 0, Rational z_ = 0)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    Quaternion(int w_) : w(w_) {}

    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    bool operator==(const Quaternion&) const = default;

    bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
    bool is_real() const { return x == 0 && y == 0 && z == 0; }
    bool is_one() const { return w == 1 && is_real(); }

    Rational re() const { return w; }
    Quaternion im() const { return {0, x, y, z}; }
    /// |Im(q)|^2
    Rational im2() const { return x * x + y * y + z * z; }
    Rational norm2() const { return w * w + im2(); }
    Quaternion conj() const { return {w, -x, -y, -z}; }

    std::array<const Rational*, 4> components() const { return {&w, &x, &y, &z}; }

    Quaternion operator-() const { return {-w, -x, -y, -z}; }

    Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    Quaternion& operator*=(const Rational& s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
    Quaternion& operator/=(const Rational& s) {
        if (s == 0) throw Error(ErrorCode::ZeroDivision, "quaternion divided by zero");
        w /= s; x /= s; y /= s; z /= s;
        return *this;
    }

    friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend Quaternion operator*(Quaternion a, const Rational& s) { return a *= s; }
    friend Quaternion operator*(const Rational& s, Quaternion a) { return a *= s; }
    friend Quaternion operator/(Quaternion a, const Rational& s) { return a /= s; }

    // Hamilton product
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
};

inline Quaternion quat_mul(const Quaternion& a, const Quaternion& b) { return a * b; }

/// conj(a) / |a|^2; throws ZeroDivision for a = 0.
inline Quaternion quat_inv(const Quaternion& a) {
    if (a.is_zero()) throw Error(ErrorCode::ZeroDivision, "inverse of zero quaternion");
    return a.conj() / a.norm2();
}

/// Euclidean inner product on R^4.
inline Rational dot(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Inner product of imaginary parts.
inline Rational im_dot(const Quaternion& a, const Quaternion& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// g^-1 a g
inline Quaternion conjugate_by(const Quaternion& a, const Quaternion& g) {
    return quat_inv(g) * a * g;
}

// ab = ba iff the imaginary parts are parallel, i.e. their cross product vanishes.
inline bool commutes(const Quaternion& a, const Quaternion& b) {
    return a.y * b.z == a.z * b.y && a.z * b.x == a.x * b.z && a.x * b.y == a.y * b.x;
}

inline bool same_sphere(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.im2() == b.im2();
}

/// Lexicographic order on (w, x, y, z); used only for canonical listings.
inline bool lex_less(const Quaternion& a, const Quaternion& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

/// Canonical text `w + x i + y j + z k`: zero components dropped, unit
/// coefficients elided, later negative components written with a binary minus.
inline std::string to_string(const Quaternion& q) {
    std::string out;
    auto emit = [&out](const Rational& c, const char* unit) {
        if (c == 0) return;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (*unit == '\0') {
            out += to_string(mag);
        } else if (mag == 1) {
            out += unit;
        } else {
            out += to_string(mag);
            out += ' ';
            out += unit;
        }
    };
    emit(q.w, "");
    emit(q.x, "i");
    emit(q.y, "j");
    emit(q.z, "k");
    return out.empty() ? "0" : out;
}

/// A point of H^n whose components pairwise commute, i.e. a point of some C_K^n.
class CommutingPoint {
public:
    CommutingPoint() = default;
    explicit CommutingPoint(std::vector<Quaternion> components) : comps_(std::move(components)) {
        for (std::size_t l = 0; l < comps_.size(); ++l)
            for (std::size_t m = l + 1; m < comps_.size(); ++m)
                if (!commutes(comps_[l], comps_[m]))
                    throw Error(ErrorCode::NonCommutingPoint,
                                "components " + std::to_string(l + 1) + " and " +
                                    std::to_string(m + 1) + " do not commute");
    }
    CommutingPoint(std::initializer_list<Quaternion> components)
        : CommutingPoint(std::vector<Quaternion>(components)) {}

    std::size_t size() const { return comps_.size(); }
    const Quaternion& operator[](std::size_t l) const { return comps_[l]; }
    std::span<const Quaternion> components() const { return comps_; }

    bool operator==(const CommutingPoint&) const = default;

    /// Componentwise quaternion conjugate (the conjugate point in C_K^n).
    CommutingPoint conj() const {
        std::vector<Quaternion> out;
        out.reserve(comps_.size());
        for (const auto& c : comps_) out.push_back(c.conj());
        return CommutingPoint(std::move(out), unchecked{});
    }

    /// Simultaneous rotation (g^-1 a_1 g, ..., g^-1 a_n g); stays commuting.
    CommutingPoint conjugated_by(const Quaternion& g) const {
        const Quaternion gi = quat_inv(g);
        std::vector<Quaternion> out;
        out.reserve(comps_.size());
        for (const auto& c : comps_) out.push_back(gi * c * g);
        return CommutingPoint(std::move(out), unchecked{});
    }

private:
    struct unchecked {};
    CommutingPoint(std::vector<Quaternion> components, unchecked) : comps_(std::move(components)) {}

    std::vector<Quaternion> comps_;
};

inline std::string to_string(const CommutingPoint& p) {
    std::string out = "(";
    for (std::size_t l = 0; l < p.size(); ++l) {
        if (l) out += ", ";
        out += to_string(p[l]);
    }
    return out + ")";
}

/// Exact description of an arranged spherical set S_a. Each coordinate keeps
/// (Re, |Im|^2); `gram` holds <Im a_l, Im a_m> so that the relative sign
/// pattern of the imaginary parts is fixed without ever forming the unit J_a.
struct SphereData {
    std::vector<Rational> re;
    std::vector<Rational> im2;
    std::vector<Rational> gram;  // row-major n x n, diagonal equals im2
    std::optional<CommutingPoint> representative;

    std::size_t size() const { return re.size(); }
    bool is_real_point() const {
        for (const auto& s : im2)
            if (s != 0) return false;
        return true;
    }

    static SphereData of(const CommutingPoint& a) {
        SphereData s;
        const std::size_t n = a.size();
        s.gram.resize(n * n);
        for (std::size_t l = 0; l < n; ++l) {
            s.re.push_back(a[l].re());
            s.im2.push_back(a[l].im2());
            for (std::size_t m = 0; m < n; ++m) s.gram[l * n + m] = im_dot(a[l], a[m]);
        }
        s.representative = a;
        return s;
    }

    /// One-variable sphere {x + J sqrt(s)}; no rational representative is assumed.
    static SphereData single(Rational x, Rational s) {
        if (s < 0) throw Error(ErrorCode::InvalidConfig, "negative squared imaginary modulus");
        SphereData d;
        d.re.push_back(std::move(x));
        d.im2.push_back(s);
        d.gram.push_back(std::move(s));
        return d;
    }
};

inline bool sphere_membership(const CommutingPoint& p, const SphereData& sphere) {
    const std::size_t n = sphere.size();
    if (p.size() != n) return false;
    for (std::size_t l = 0; l < n; ++l) {
        if (p[l].re() != sphere.re[l]) return false;
        for (std::size_t m = l; m < n; ++m)
            if (im_dot(p[l], p[m]) != sphere.gram[l * n + m]) return false;
    }
    return true;
}

}  // namespace qslice
