#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace friezelab {

/// Arbitrary-precision integer (GMP backed, no expression templates).
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Exact rational number.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline BigInt numerator_of(const Rational& q) { return BigInt(boost::multiprecision::numerator(q)); }
inline BigInt denominator_of(const Rational& q) { return BigInt(boost::multiprecision::denominator(q)); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

}  // namespace friezelab
