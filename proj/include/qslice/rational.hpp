#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "qslice/error.hpp"

namespace qslice {

// Expression templates are disabled so that `auto` always yields a value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rational& r) { return den(r) == 1; }

inline int sign(const Rational& r) { return r.sign(); }

inline Rational make_rational(long long p, long long q = 1) {
    if (q == 0) throw Error(ErrorCode::ZeroDivision, "rational with zero denominator");
    return Rational(p) / Rational(q);
}

/// Lowest-terms text, `p/q` or `p`.
inline std::string to_string(const Rational& r) { return r.str(); }

inline Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return Integer(0);
    return boost::multiprecision::lcm(a, b);
}

}  // namespace qslice
