#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace bianchi {

// Exact scalars. cpp_rational keeps values reduced to lowest terms with a
// positive denominator, which is the equality contract everything else
// relies on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// The (num, den) constructor of cpp_rational misbehaves in boost 1.74;
// division canonicalizes correctly, so build rationals through it.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  return Rational(num) / Rational(den);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Representative of a mod n in [0, n). Requires n > 0.
inline BigInt floor_mod(const BigInt& a, const BigInt& n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return r;
}

inline BigInt int_pow(BigInt base, unsigned exp) {
  BigInt r = 1;
  while (exp > 0) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
  }
}

}  // namespace bianchi
