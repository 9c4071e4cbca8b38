#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ergo/errors.hpp"

namespace ergo {

/// Exact rational arithmetic. cpp_rational keeps values in lowest terms with
/// positive denominator, which is exactly the canonical form we need:
/// denominators grow without bound under repeated piecewise-affine maps.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw InvalidRange("zero denominator");
  return Rational(num, den);
}

/// Parses "p/q", plain integers and finite decimals ("0.25") exactly.
Rational parse_rational(const std::string& s);

/// Formats as "p/q" ("p" when integral). Inverse of parse_rational.
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

}  // namespace ergo
