#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "beltrami/construct.hpp"

namespace beltrami {

using NumericPoint = std::vector<double>;

bool point_is_finite(const NumericPoint& p);

// Double-precision form of a trig vector field: every exact coefficient is
// rounded once at construction, evaluation is pure double arithmetic.
class CompiledField {
 public:
  template <class Scalar>
  explicit CompiledField(const std::vector<TrigExpr<Scalar>>& components) {
    if (components.empty()) throw std::invalid_argument("CompiledField: no components");
    dim_ = components.front().dimension();
    for (const auto& expr : components) {
      if (expr.dimension() != dim_) {
        throw std::invalid_argument("CompiledField: mixed component dimensions");
      }
      std::vector<Term> compiled;
      for (const auto& [key, poly] : expr.terms()) {
        Term term;
        term.kind = key.kind;
        term.arg.fill(0.0);
        for (int j = 0; j < dim_; ++j) {
          term.arg[static_cast<size_t>(j)] = scalar_to_double(key.argument.coefficient(j));
        }
        for (const auto& [e, c] : poly.terms()) {
          term.monomials.emplace_back(e, scalar_to_double(c));
        }
        compiled.push_back(std::move(term));
      }
      components_.push_back(std::move(compiled));
    }
  }

  template <class Scalar>
  explicit CompiledField(const VectorFieldExpr<Scalar>& f)
      : CompiledField(f.components()) {}

  int dimension() const { return dim_; }
  NumericPoint eval(const NumericPoint& p) const;

 private:
  struct Term {
    TrigKind kind = TrigKind::One;
    std::array<double, 3> arg{};
    std::vector<std::pair<Exponents, double>> monomials;
  };

  static double scalar_to_double(const Rational& c) { return rat_to_double(c); }
  template <int Radicand>
  static double scalar_to_double(const Quadratic<Radicand>& c) {
    return c.to_double();
  }

  int dim_;
  std::vector<std::vector<Term>> components_;
};

// One-shot evaluation; throws std::invalid_argument on dimension mismatch or
// a non-finite input point.
template <class Scalar>
NumericPoint eval_field(const VectorFieldExpr<Scalar>& v, const NumericPoint& p) {
  if (static_cast<int>(p.size()) != v.dimension()) {
    throw std::invalid_argument("eval_field: dimension mismatch");
  }
  if (!point_is_finite(p)) throw std::invalid_argument("eval_field: non-finite input point");
  return v.evaluated(p);
}

struct OrbitSample {
  double t = 0.0;
  NumericPoint x;
};

struct OrbitRecord {
  NumericPoint initial;
  double step = 0.0;
  std::string integrator = "rk4";
  bool overflow = false;
  std::vector<OrbitSample> samples;
};

// Classical fixed-step fourth-order Runge-Kutta for dx/dt = v(x); one sample
// per step, the final partial step shortened to land exactly on t_end. If the
// state turns non-finite the record is truncated and flagged.
OrbitRecord rk4_orbit(const CompiledField& v, const NumericPoint& x0, double t_end, double h);
OrbitRecord rk4_orbit(const GoldenField& v, const NumericPoint& x0, double t_end, double h);

// Scalar amplitude of the curl eigenfield I on the line s*(phi,1,0):
// I(phi s, s, 0) = (phi*Upsilon(s), Upsilon(s), 0) with
// Upsilon(s) = -s sqrt(5) (1 - phi cos s + phi^{-1} cos(phi s)).
double upsilon(double s);
double upsilon_factor(double s);

struct RootScan {
  std::vector<double> roots;
  std::vector<std::pair<double, double>> brackets;
};

// Sign-change scan on a uniform grid followed by bisection; exact grid-point
// zeros are recorded directly. Roots are refined until the bracket width
// drops below 1e-12.
RootScan scan_roots(const std::function<double(double)>& f, double s_min, double s_max,
                    double scan_step);

enum class LineClass { F, V, E };

const char* line_class_name(LineClass c);

// Representatives (phi,1,0), (1,1,1), (1,0,0) with orbit sizes 12, 20, 30.
Vec3G line_class_representative(LineClass c);

struct LineZeroReport {
  LineClass line_class = LineClass::F;
  Vec3G direction;
  std::vector<double> roots;
  std::vector<std::pair<double, double>> brackets;
};

// Roots of Upsilon on [s_min, s_max]; report carries the class-F
// representative direction.
LineZeroReport upsilon_roots(double s_min, double s_max, double scan_step);

// Double-precision form of the scalar function s -> <field(s*d), d>, the
// collinear amplitude of a rotation-symmetric field along the line s*d.
class CompiledLineFunction {
 public:
  CompiledLineFunction(const GoldenField& field, const Vec3G& direction);
  double operator()(double s) const;

 private:
  CompiledField amplitude_;
};

// Zero maps on the whole orbit of a line class: one report per signed
// canonical direction (12/20/30), all carrying the roots computed for the
// class representative. Roots are in the representative parameterization
// s -> s * representative; the zero matching root r on a reported line lies
// at distance r*|representative| along that line's unit direction.
std::vector<LineZeroReport> line_zero_map(const GoldenField& field, LineClass cls, double s_max,
                                          double scan_step = 1e-2);

struct LimsupSample {
  int n = 0;
  double s = 0.0;
  double ratio = 0.0;
};

// Ratios Upsilon(s)/s at s = pi * Fib(3n); along this sequence the ratio
// approaches its supremum 2*sqrt(5)/phi = 5 - sqrt(5) from below.
std::vector<LimsupSample> limsup_probe(const std::vector<int>& n_range);

}  // namespace beltrami
