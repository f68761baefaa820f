#pragma once

#include <array>
#include <optional>

#include "beltrami/linalg.hpp"
#include "beltrami/polynomial.hpp"
#include "beltrami/vector_field.hpp"

namespace beltrami {

// Quotient of polynomials. Never reduced; equality is decided by cross
// multiplication, so representations are free to grow and stay exact.
template <class Scalar>
struct RatFunc {
  Polynomial<Scalar> num{3};
  Polynomial<Scalar> den{3};

  RatFunc() { den = Polynomial<Scalar>::constant(3, Scalar(1)); }
  RatFunc(Polynomial<Scalar> n, Polynomial<Scalar> d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  }
  static RatFunc from_polynomial(Polynomial<Scalar> p) {
    RatFunc out;
    out.num = std::move(p);
    return out;
  }

  bool is_zero() const { return num.is_zero(); }

  RatFunc operator-() const { return RatFunc(-num, den); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den == b.den) return RatFunc(a.num + b.num, a.den);
    return RatFunc(a.num.multiplied(b.den) + b.num.multiplied(a.den), a.den.multiplied(b.den));
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num.multiplied(b.num), a.den.multiplied(b.den));
  }

  RatFunc scaled(const Scalar& f) const { return RatFunc(num.scaled(f), den); }

  // Quotient rule; denominator becomes den^2 without reduction.
  RatFunc derivative(int axis) const {
    return RatFunc(num.derivative(axis).multiplied(den) - num.multiplied(den.derivative(axis)),
                   den.multiplied(den));
  }

  RatFunc substituted(const std::vector<std::vector<Scalar>>& matrix) const {
    return RatFunc(num.substituted(matrix), den.substituted(matrix));
  }

  double evaluated(const std::vector<double>& point) const {
    const auto eval = [&](const Polynomial<Scalar>& p) {
      double acc = 0.0;
      for (const auto& [e, c] : p.terms()) {
        double term = scalar_to_double(c);
        for (int i = 0; i < p.dimension(); ++i) {
          for (int k = 0; k < e.at(static_cast<size_t>(i)); ++k) term *= point.at(static_cast<size_t>(i));
        }
        acc += term;
      }
      return acc;
    };
    return eval(num) / eval(den);
  }

 private:
  static double scalar_to_double(const Rational& c) { return rat_to_double(c); }
  template <int Radicand>
  static double scalar_to_double(const Quadratic<Radicand>& c) {
    return c.to_double();
  }
};

// Equality as rational functions: num_a * den_b = num_b * den_a.
template <class Scalar>
bool rf_equal(const RatFunc<Scalar>& a, const RatFunc<Scalar>& b) {
  return a.num.multiplied(b.den) == b.num.multiplied(a.den);
}

template <class Scalar>
struct RatVectorField {
  std::array<RatFunc<Scalar>, 3> c;

  const RatFunc<Scalar>& component(int i) const { return c.at(static_cast<size_t>(i)); }

  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

  friend RatVectorField operator+(const RatVectorField& a, const RatVectorField& b) {
    return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]}};
  }
  friend RatVectorField operator-(const RatVectorField& a, const RatVectorField& b) {
    return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]}};
  }

  RatVectorField scaled_by(const RatFunc<Scalar>& f) const {
    return {{f * c[0], f * c[1], f * c[2]}};
  }

  RatVectorField curl() const {
    return {{c[2].derivative(1) - c[1].derivative(2),
             c[0].derivative(2) - c[2].derivative(0),
             c[1].derivative(0) - c[0].derivative(1)}};
  }

  RatVectorField cross(const RatVectorField& o) const {
    return {{c[1] * o.c[2] - c[2] * o.c[1],
             c[2] * o.c[0] - c[0] * o.c[2],
             c[0] * o.c[1] - c[1] * o.c[0]}};
  }

  RatFunc<Scalar> norm_squared() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2]; }

  // g^{-1} o v o g for an invertible matrix given as rows.
  RatVectorField conjugated(const std::vector<std::vector<Scalar>>& g) const {
    const auto inv = small_matrix_inverse(g);
    std::array<RatFunc<Scalar>, 3> moved{c[0].substituted(g), c[1].substituted(g),
                                         c[2].substituted(g)};
    RatVectorField out;
    for (size_t i = 0; i < 3; ++i) {
      RatFunc<Scalar> acc = moved[0].scaled(inv[i][0]);
      acc = acc + moved[1].scaled(inv[i][1]);
      acc = acc + moved[2].scaled(inv[i][2]);
      out.c[i] = std::move(acc);
    }
    return out;
  }

  std::vector<double> evaluated(const std::vector<double>& point) const {
    return {c[0].evaluated(point), c[1].evaluated(point), c[2].evaluated(point)};
  }
};

template <class Scalar>
bool rf_equal(const RatVectorField<Scalar>& a, const RatVectorField<Scalar>& b) {
  return rf_equal(a.c[0], b.c[0]) && rf_equal(a.c[1], b.c[1]) && rf_equal(a.c[2], b.c[2]);
}

using RationalFunction = RatFunc<Rational>;
using RationalVectorField = RatVectorField<Rational>;
using GoldenRatFunc = RatFunc<GoldenNumber>;
using GoldenRatVectorField = RatVectorField<GoldenNumber>;

GoldenRatVectorField rf_lift(const RationalVectorField& v);

// Fails (nullopt) when any coefficient has a nonzero radical part.
std::optional<RationalVectorField> rf_lower(const GoldenRatVectorField& v);

// scale * sum over elements of g^{-1} o v o g. The average of a field with
// rational coefficients over a subgroup of the rotation group may pick up
// irrational intermediates; a result that is not rational again is an error.
RationalVectorField rf_group_average(const RationalVectorField& v, const MatrixGroup& group,
                                     const Rational& scale);

// Stereographic image on R^3 of the unit-curvature Sasakian structure field:
// (8(xz-y), 8(x+yz), 4(1+z^2-x^2-y^2)) / (1+x^2+y^2+z^2)^2.
RationalVectorField sasakian_field();

// 4 / (1 + x^2 + y^2 + z^2), the length of the Sasakian field.
RationalFunction sasakian_length();

// Average of the Sasakian field over {I, beta, beta^2} scaled by 1/4:
// components (U(x,y,z), U(y,z,x), U(z,x,y)).
RationalVectorField cyclic_averaged_field();

// The component U of the averaged field, entered directly.
RationalFunction cyclic_averaged_component();

}  // namespace beltrami
