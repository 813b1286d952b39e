#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace avgdeg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Exact value of a finite double (every double is a dyadic rational).
inline Rational exact_rational(double x) {
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  Rational r{BigInt(static_cast<std::int64_t>(std::ldexp(mant, 53)))};
  exp -= 53;
  if (exp >= 0) return r * Rational{BigInt(1) << exp};
  return r / Rational{BigInt(1) << -exp};
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace avgdeg
