#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <ostream>
#include <string>

#include "beltrami/rational.hpp"

namespace beltrami {

// Element r + s*sqrt(Radicand) of the real quadratic field Q(sqrt(Radicand)).
// Radicand must be a positive non-square, so the representation is unique and
// ordering questions reduce to integer arithmetic.
template <int Radicand>
class Quadratic {
  static_assert(Radicand > 1, "radicand must be a positive non-square");

 public:
  Quadratic() = default;
  Quadratic(Rational rational_part, Rational radical_part)
      : r_(std::move(rational_part)), s_(std::move(radical_part)) {}
  explicit Quadratic(Rational rational_part) : r_(std::move(rational_part)) {}
  explicit Quadratic(long value) : r_(value) {}

  static Quadratic zero() { return Quadratic(); }
  static Quadratic one() { return Quadratic(Rational(1)); }
  static Quadratic sqrt_radicand() { return Quadratic(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return r_; }
  const Rational& radical_part() const { return s_; }

  bool is_zero() const { return r_.is_zero() && s_.is_zero(); }
  bool is_rational() const { return s_.is_zero(); }

  // Galois conjugate: sqrt(Radicand) -> -sqrt(Radicand).
  Quadratic conjugate() const { return Quadratic(r_, -s_); }

  // Field norm r^2 - Radicand*s^2; zero only for the zero element.
  Rational norm() const { return r_ * r_ - Radicand * s_ * s_; }

  // Exact sign. With mixed signs on the two parts, |r| vs |s|*sqrt(Radicand)
  // is decided by comparing r^2 against Radicand*s^2.
  int sign() const {
    const int sr = r_.sign();
    const int ss = s_.sign();
    if (ss == 0) return sr;
    if (sr == 0) return ss;
    if (sr == ss) return sr;
    const Rational lhs = r_ * r_;
    const Rational rhs = Radicand * s_ * s_;
    if (lhs == rhs) return 0;  // impossible for non-square radicand, kept for safety
    return lhs > rhs ? sr : ss;
  }

  Quadratic operator-() const { return Quadratic(-r_, -s_); }

  Quadratic& operator+=(const Quadratic& o) {
    r_ += o.r_;
    s_ += o.s_;
    return *this;
  }
  Quadratic& operator-=(const Quadratic& o) {
    r_ -= o.r_;
    s_ -= o.s_;
    return *this;
  }
  Quadratic& operator*=(const Quadratic& o) {
    const Rational r = r_ * o.r_ + Radicand * s_ * o.s_;
    const Rational s = r_ * o.s_ + s_ * o.r_;
    r_ = r;
    s_ = s;
    return *this;
  }
  Quadratic& operator/=(const Quadratic& o) { return *this *= o.inverse(); }

  friend Quadratic operator+(Quadratic a, const Quadratic& b) { return a += b; }
  friend Quadratic operator-(Quadratic a, const Quadratic& b) { return a -= b; }
  friend Quadratic operator*(Quadratic a, const Quadratic& b) { return a *= b; }
  friend Quadratic operator/(Quadratic a, const Quadratic& b) { return a /= b; }

  Quadratic inverse() const {
    const Rational n = norm();
    if (n.is_zero()) throw std::domain_error("Quadratic::inverse: division by zero");
    return Quadratic(r_ / n, -s_ / n);
  }

  Quadratic pow(unsigned exponent) const {
    Quadratic out = one();
    Quadratic acc = *this;
    for (unsigned k = exponent; k != 0; k >>= 1) {
      if (k & 1) out *= acc;
      if (k > 1) acc *= acc;
    }
    return out;
  }

  bool operator==(const Quadratic& o) const { return r_ == o.r_ && s_ == o.s_; }
  std::strong_ordering operator<=>(const Quadratic& o) const {
    const int c = (*this - o).sign();
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Rounded once from a 50 digit intermediate, so the double is the correctly
  // rounded value of r + s*sqrt(Radicand).
  double to_double() const {
    static const BigFloat root = sqrt(BigFloat(Radicand));
    const BigFloat value = static_cast<BigFloat>(r_) + static_cast<BigFloat>(s_) * root;
    return static_cast<double>(value);
  }

  // Canonical text form "p/q + (r/s)√R".
  std::string str() const {
    return rat_to_string(r_) + " + (" + rat_to_string(s_) + ")√" + std::to_string(Radicand);
  }

  friend std::ostream& operator<<(std::ostream& os, const Quadratic& q) { return os << q.str(); }

 private:
  Rational r_;
  Rational s_;
};

using GoldenNumber = Quadratic<5>;
using RootThreeNumber = Quadratic<3>;

// Parses the canonical form "p/q + (r/s)√R"; also accepts bare "p/q".
template <int Radicand>
std::optional<Quadratic<Radicand>> quadratic_parse(std::string_view text) {
  const std::string radical = std::string("√") + std::to_string(Radicand);
  const auto strip = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  std::string_view body = strip(text);
  const size_t plus = body.find(" + (");
  if (plus == std::string_view::npos) {
    const auto r = rat_parse(body);
    if (!r) return std::nullopt;
    return Quadratic<Radicand>(*r);
  }
  std::string_view head = strip(body.substr(0, plus));
  std::string_view tail = body.substr(plus + 4);
  const size_t close = tail.find(')');
  if (close == std::string_view::npos) return std::nullopt;
  std::string_view coeff = strip(tail.substr(0, close));
  std::string_view suffix = strip(tail.substr(close + 1));
  if (suffix != radical) return std::nullopt;
  const auto r = rat_parse(head);
  const auto s = rat_parse(coeff);
  if (!r || !s) return std::nullopt;
  return Quadratic<Radicand>(*r, *s);
}

// Golden ratio phi = (1 + sqrt(5))/2 and friends. phi satisfies phi^2 = phi + 1,
// 1/phi = phi - 1, phi + 1/phi = sqrt(5).
inline const GoldenNumber& golden_ratio() {
  static const GoldenNumber phi(Rational(1, 2), Rational(1, 2));
  return phi;
}
inline const GoldenNumber& golden_ratio_inverse() {
  static const GoldenNumber inv(Rational(-1, 2), Rational(1, 2));
  return inv;
}
inline const GoldenNumber& root_five() {
  static const GoldenNumber root(Rational(0), Rational(1));
  return root;
}

inline GoldenNumber gn(long rational_part) { return GoldenNumber(Rational(rational_part)); }
inline GoldenNumber gn(const Rational& rational_part) { return GoldenNumber(rational_part); }
inline GoldenNumber gn(const Rational& rational_part, const Rational& radical_part) {
  return GoldenNumber(rational_part, radical_part);
}

}  // namespace beltrami
