#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace beltrami {

// Arbitrary precision integers and rationals. cpp_rational keeps the
// invariants this library relies on: reduced fraction, positive denominator,
// canonical zero 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binary float with 50 decimal digits of precision, used as the single
// intermediate when rounding exact values to double.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline int rat_sign(const Rational& q) { return q.sign(); }

inline double rat_to_double(const Rational& q) {
  return static_cast<double>(static_cast<BigFloat>(q));
}

// Renders "p/q" with the denominator always present.
inline std::string rat_to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

// Parses "p/q" or a bare integer "p". Returns nullopt on malformed input.
std::optional<Rational> rat_parse(std::string_view text);

inline Rational rat_pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  Rational acc = base;
  for (unsigned k = exponent; k != 0; k >>= 1) {
    if (k & 1) out *= acc;
    if (k > 1) acc *= acc;
  }
  return out;
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Integer int_pow(Integer base, unsigned exponent) {
  Integer out(1);
  for (unsigned k = exponent; k != 0; k >>= 1) {
    if (k & 1) out *= base;
    if (k > 1) base *= base;
  }
  return out;
}

inline Rational factorial_rational(unsigned n) {
  Integer out(1);
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return Rational(out);
}

}  // namespace beltrami
