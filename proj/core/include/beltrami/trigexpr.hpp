#pragma once

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "beltrami/linear_form.hpp"
#include "beltrami/polynomial.hpp"

namespace beltrami {

enum class TrigKind { One, Sin, Cos };

inline const char* trig_kind_name(TrigKind kind) {
  switch (kind) {
    case TrigKind::One: return "one";
    case TrigKind::Sin: return "sin";
    case TrigKind::Cos: return "cos";
  }
  return "?";
}

template <class Scalar>
struct TrigTermKey {
  TrigKind kind;
  LinearForm<Scalar> argument;

  bool operator==(const TrigTermKey& o) const = default;
  std::strong_ordering operator<=>(const TrigTermKey& o) const {
    if (kind != o.kind) {
      return static_cast<int>(kind) < static_cast<int>(o.kind) ? std::strong_ordering::less
                                                               : std::strong_ordering::greater;
    }
    return argument <=> o.argument;
  }
};

// Finite sum of terms P(x) * {1, sin, cos}(b.x) in canonical form: arguments
// carry a positive leading coefficient (sin flips absorb their sign into the
// polynomial), zero arguments collapse to the polynomial kind, and zero
// polynomials are dropped. Equality of canonical forms is map equality;
// arguments that are rational multiples of each other stay distinct keys.
template <class Scalar>
class TrigExpr {
 public:
  using Key = TrigTermKey<Scalar>;
  using TermMap = std::map<Key, Polynomial<Scalar>>;

  explicit TrigExpr(int dimension = 3) : dim_(dimension) {
    if (dimension < 1 || dimension > 3) {
      throw std::invalid_argument("TrigExpr: dimension must be 1, 2 or 3");
    }
  }

  static TrigExpr from_polynomial(Polynomial<Scalar> p) {
    TrigExpr e(p.dimension());
    e.add_term(TrigKind::One, LinearForm<Scalar>(p.dimension()), std::move(p));
    return e;
  }
  static TrigExpr constant(int dimension, Scalar value) {
    return from_polynomial(Polynomial<Scalar>::constant(dimension, std::move(value)));
  }
  static TrigExpr sin(const LinearForm<Scalar>& argument) {
    TrigExpr e(argument.dimension());
    e.add_term(TrigKind::Sin, argument,
               Polynomial<Scalar>::constant(argument.dimension(), Scalar(1)));
    return e;
  }
  static TrigExpr cos(const LinearForm<Scalar>& argument) {
    TrigExpr e(argument.dimension());
    e.add_term(TrigKind::Cos, argument,
               Polynomial<Scalar>::constant(argument.dimension(), Scalar(1)));
    return e;
  }

  int dimension() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  // Canonicalizing insertion; merges with an existing term for the same key.
  void add_term(TrigKind kind, LinearForm<Scalar> argument, Polynomial<Scalar> poly) {
    if (argument.dimension() != dim_ || poly.dimension() != dim_) {
      throw std::invalid_argument("TrigExpr::add_term: dimension mismatch");
    }
    if (poly.is_zero()) return;
    if (kind == TrigKind::One) {
      argument = LinearForm<Scalar>(dim_);
    } else if (argument.is_zero()) {
      if (kind == TrigKind::Sin) return;  // sin(0) = 0
      kind = TrigKind::One;               // cos(0) = 1
    } else if (argument.leading_sign() < 0) {
      argument = -argument;
      if (kind == TrigKind::Sin) poly = -poly;
    }
    const Key key{kind, std::move(argument)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, std::move(poly));
      return;
    }
    it->second += poly;
    if (it->second.is_zero()) terms_.erase(it);
  }

  TrigExpr operator-() const {
    TrigExpr out(dim_);
    for (const auto& [k, p] : terms_) out.terms_.emplace(k, -p);
    return out;
  }
  TrigExpr& operator+=(const TrigExpr& o) {
    require_same_dimension(o);
    for (const auto& [k, p] : o.terms_) add_canonical(k, p);
    return *this;
  }
  TrigExpr& operator-=(const TrigExpr& o) {
    require_same_dimension(o);
    for (const auto& [k, p] : o.terms_) add_canonical(k, -p);
    return *this;
  }
  friend TrigExpr operator+(TrigExpr a, const TrigExpr& b) { return a += b; }
  friend TrigExpr operator-(TrigExpr a, const TrigExpr& b) { return a -= b; }

  TrigExpr scaled(const Scalar& factor) const {
    TrigExpr out(dim_);
    if (factor.is_zero()) return out;
    for (const auto& [k, p] : terms_) out.terms_.emplace(k, p.scaled(factor));
    return out;
  }
  TrigExpr scaled(const Polynomial<Scalar>& factor) const {
    TrigExpr out(dim_);
    for (const auto& [k, p] : terms_) out.add_canonical(k, p.multiplied(factor));
    return out;
  }

  // Product via the product-to-sum rewriting, staying in canonical form.
  TrigExpr multiplied(const TrigExpr& o) const {
    require_same_dimension(o);
    TrigExpr out(dim_);
    const Scalar half = Scalar(1) / Scalar(2);
    for (const auto& [ka, pa] : terms_) {
      for (const auto& [kb, pb] : o.terms_) {
        Polynomial<Scalar> prod = pa.multiplied(pb);
        if (ka.kind == TrigKind::One) {
          out.add_term(kb.kind, kb.argument, std::move(prod));
          continue;
        }
        if (kb.kind == TrigKind::One) {
          out.add_term(ka.kind, ka.argument, std::move(prod));
          continue;
        }
        const LinearForm<Scalar> sum = ka.argument + kb.argument;
        const LinearForm<Scalar> diff = ka.argument - kb.argument;
        const Polynomial<Scalar> h = prod.scaled(half);
        if (ka.kind == TrigKind::Sin && kb.kind == TrigKind::Sin) {
          out.add_term(TrigKind::Cos, diff, h);
          out.add_term(TrigKind::Cos, sum, -h);
        } else if (ka.kind == TrigKind::Sin && kb.kind == TrigKind::Cos) {
          out.add_term(TrigKind::Sin, sum, h);
          out.add_term(TrigKind::Sin, diff, h);
        } else if (ka.kind == TrigKind::Cos && kb.kind == TrigKind::Sin) {
          out.add_term(TrigKind::Sin, sum, h);
          out.add_term(TrigKind::Sin, diff, -h);
        } else {
          out.add_term(TrigKind::Cos, diff, h);
          out.add_term(TrigKind::Cos, sum, h);
        }
      }
    }
    return out;
  }

  TrigExpr derivative(int axis) const {
    if (axis < 0 || axis >= dim_) throw std::invalid_argument("TrigExpr::derivative: bad axis");
    TrigExpr out(dim_);
    for (const auto& [k, p] : terms_) {
      out.add_term(k.kind, k.argument, p.derivative(axis));
      if (k.kind == TrigKind::One) continue;
      const Scalar& b = k.argument.coefficient(axis);
      if (b.is_zero()) continue;
      if (k.kind == TrigKind::Sin) {
        out.add_term(TrigKind::Cos, k.argument, p.scaled(b));
      } else {
        out.add_term(TrigKind::Sin, k.argument, p.scaled(-b));
      }
    }
    return out;
  }

  TrigExpr laplacian() const {
    TrigExpr out(dim_);
    for (int axis = 0; axis < dim_; ++axis) out += derivative(axis).derivative(axis);
    return out;
  }

  // Residual of the Helmholtz equation: laplacian(e) + e.
  TrigExpr helmholtz_residual() const { return laplacian() + *this; }

  // Substitution x -> matrix*x applied to the polynomial and the argument of
  // every term.
  TrigExpr substituted(const std::vector<std::vector<Scalar>>& matrix) const {
    TrigExpr out(dim_);
    for (const auto& [k, p] : terms_) {
      out.add_term(k.kind,
                   k.kind == TrigKind::One ? k.argument : k.argument.substituted(matrix),
                   p.substituted(matrix));
    }
    return out;
  }

  TrigExpr sign_flipped(const std::array<int, 3>& signs) const {
    TrigExpr out(dim_);
    for (const auto& [k, p] : terms_) {
      out.add_term(k.kind, k.argument.sign_flipped(signs), p.sign_flipped(signs));
    }
    return out;
  }

  TrigExpr variables_permuted(const std::array<int, 3>& permutation) const {
    TrigExpr out(dim_);
    for (const auto& [k, p] : terms_) {
      out.add_term(k.kind, k.argument.variables_permuted(permutation),
                   p.variables_permuted(permutation));
    }
    return out;
  }

  // Applies the Galois conjugation of the coefficient field to every scalar.
  TrigExpr coefficients_conjugated() const {
    TrigExpr out(dim_);
    for (const auto& [k, p] : terms_) {
      LinearForm<Scalar> arg(dim_);
      for (int i = 0; i < dim_; ++i) arg.set_coefficient(i, k.argument.coefficient(i).conjugate());
      Polynomial<Scalar> poly(dim_);
      for (const auto& [e, c] : p.terms()) poly.add_term(e, c.conjugate());
      out.add_term(k.kind, std::move(arg), std::move(poly));
    }
    return out;
  }

  // Taylor polynomial: all terms of total degree <= degree, exact coefficients.
  Polynomial<Scalar> taylor(int degree) const {
    if (degree < 0) throw std::invalid_argument("TrigExpr::taylor: negative degree");
    Polynomial<Scalar> out(dim_);
    for (const auto& [k, p] : terms_) {
      if (k.kind == TrigKind::One) {
        out += p.truncated(degree);
        continue;
      }
      const Polynomial<Scalar> arg = k.argument.as_polynomial();
      Polynomial<Scalar> series(dim_);
      Polynomial<Scalar> arg_power = Polynomial<Scalar>::constant(dim_, Scalar(1));
      int parity = k.kind == TrigKind::Sin ? 1 : 0;
      for (int n = 0; n <= degree; ++n) {
        if (n > 0) arg_power = arg_power.multiplied(arg, degree);
        if ((n & 1) != parity) continue;
        const int half = k.kind == TrigKind::Sin ? (n - 1) / 2 : n / 2;
        Rational c = Rational(1) / factorial_rational(static_cast<unsigned>(n));
        if (half & 1) c = -c;
        series += arg_power.scaled(Scalar(c));
      }
      out += p.multiplied(series, degree);
    }
    return out.truncated(degree);
  }

  // One-variable expression obtained by substituting x = s*direction.
  TrigExpr restricted_to_line(const std::vector<Scalar>& direction) const {
    if (static_cast<int>(direction.size()) != dim_) {
      throw std::invalid_argument("TrigExpr::restricted_to_line: dimension mismatch");
    }
    TrigExpr out(1);
    for (const auto& [k, p] : terms_) {
      LinearForm<Scalar> arg(1);
      if (k.kind != TrigKind::One) arg.set_coefficient(0, k.argument.along_direction(direction));
      out.add_term(k.kind, std::move(arg), p.restricted_to_line(direction));
    }
    return out;
  }

  double evaluated(const std::vector<double>& point) const {
    if (static_cast<int>(point.size()) != dim_) {
      throw std::invalid_argument("TrigExpr::evaluated: point dimension mismatch");
    }
    double out = 0.0;
    for (const auto& [k, p] : terms_) {
      double poly = 0.0;
      for (const auto& [e, c] : p.terms()) {
        double term = to_double_value(c);
        for (int i = 0; i < dim_; ++i) {
          for (int j = 0; j < e.at(static_cast<size_t>(i)); ++j) term *= point[static_cast<size_t>(i)];
        }
        poly += term;
      }
      if (k.kind == TrigKind::One) {
        out += poly;
        continue;
      }
      double arg = 0.0;
      for (int i = 0; i < dim_; ++i) {
        arg += to_double_value(k.argument.coefficient(i)) * point[static_cast<size_t>(i)];
      }
      out += poly * (k.kind == TrigKind::Sin ? std::sin(arg) : std::cos(arg));
    }
    return out;
  }

  bool operator==(const TrigExpr& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  // Deterministic text form: terms in canonical key order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, p] : terms_) {
      if (!out.empty()) out += " + ";
      out += "[" + p.str() + "]";
      if (k.kind != TrigKind::One) {
        out += std::string("*") + trig_kind_name(k.kind) + "(" + k.argument.str() + ")";
      }
    }
    return out;
  }

 private:
  void add_canonical(const Key& key, Polynomial<Scalar> poly) {
    if (poly.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, std::move(poly));
      return;
    }
    it->second += poly;
    if (it->second.is_zero()) terms_.erase(it);
  }
  void require_same_dimension(const TrigExpr& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("TrigExpr: dimension mismatch");
  }

  static double to_double_value(const Rational& c) { return rat_to_double(c); }
  template <int Radicand>
  static double to_double_value(const Quadratic<Radicand>& c) {
    return c.to_double();
  }

  int dim_;
  TermMap terms_;
};

}  // namespace beltrami
