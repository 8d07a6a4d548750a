#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "curvsym/error.hpp"

namespace curvsym {

using Int = boost::multiprecision::cpp_int;

// Exact rational numbers, kept canonical by the backend:
// gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Int num, Int den) {
  if (den == 0)
    throw Error(errc::zero_denominator, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline double to_double(const Rational& q) { return static_cast<double>(q); }

inline std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1)
    s += "/" + denominator(q).str();
  return s;
}

inline Rational rational_gcd(const Rational& a, const Rational& b) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  return Rational(gcd(numerator(a), numerator(b)),
                  lcm(denominator(a), denominator(b)));
}

inline Rational rational_pow(const Rational& base, unsigned exp) {
  Rational result = 1;
  Rational b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp != 0) b *= b;
  }
  return result;
}

} // namespace curvsym
