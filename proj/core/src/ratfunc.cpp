#include "beltrami/ratfunc.hpp"

namespace beltrami {

namespace {

Polynomial<GoldenNumber> lift_poly(const Polynomial<Rational>& p) {
  Polynomial<GoldenNumber> out(p.dimension());
  for (const auto& [e, c] : p.terms()) out.add_term(e, GoldenNumber(c));
  return out;
}

std::optional<Polynomial<Rational>> lower_poly(const Polynomial<GoldenNumber>& p) {
  Polynomial<Rational> out(p.dimension());
  for (const auto& [e, c] : p.terms()) {
    if (!c.radical_part().is_zero()) return std::nullopt;
    out.add_term(e, c.rational_part());
  }
  return out;
}

using RPoly = Polynomial<Rational>;

RPoly rvar(int axis) { return RPoly::variable(3, axis); }

RPoly rconst(long long v) { return RPoly::constant(3, Rational(v)); }

// (1 + x^2 + y^2 + z^2)^2
RPoly denominator_square() {
  const RPoly r2 = rconst(1) + rvar(0).pow(2) + rvar(1).pow(2) + rvar(2).pow(2);
  return r2.multiplied(r2);
}

}  // namespace

GoldenRatVectorField rf_lift(const RationalVectorField& v) {
  GoldenRatVectorField out;
  for (size_t i = 0; i < 3; ++i)
    out.c[i] = GoldenRatFunc(lift_poly(v.c[i].num), lift_poly(v.c[i].den));
  return out;
}

std::optional<RationalVectorField> rf_lower(const GoldenRatVectorField& v) {
  RationalVectorField out;
  for (size_t i = 0; i < 3; ++i) {
    auto n = lower_poly(v.c[i].num);
    auto d = lower_poly(v.c[i].den);
    if (!n || !d) return std::nullopt;
    out.c[i] = RationalFunction(std::move(*n), std::move(*d));
  }
  return out;
}

RationalVectorField rf_group_average(const RationalVectorField& v, const MatrixGroup& group,
                                     const Rational& scale) {
  const GoldenRatVectorField lifted = rf_lift(v);
  GoldenRatVectorField acc;
  bool first = true;
  for (const auto& g : group.elements) {
    GoldenRatVectorField term = lifted.conjugated(g.rows());
    if (first) {
      acc = std::move(term);
      first = false;
    } else {
      acc = acc + term;
    }
  }
  for (size_t i = 0; i < 3; ++i) acc.c[i] = acc.c[i].scaled(GoldenNumber(scale));
  auto lowered = rf_lower(acc);
  if (!lowered) throw std::domain_error("rf_group_average: result has irrational coefficients");
  return *lowered;
}

RationalVectorField sasakian_field() {
  const RPoly x = rvar(0), y = rvar(1), z = rvar(2);
  const RPoly den = denominator_square();
  RPoly n0 = (x.multiplied(z) - y).scaled(Rational(8));
  RPoly n1 = (x + y.multiplied(z)).scaled(Rational(8));
  RPoly n2 = (rconst(1) + z.pow(2) - x.pow(2) - y.pow(2)).scaled(Rational(4));
  return {{RationalFunction(std::move(n0), den), RationalFunction(std::move(n1), den),
           RationalFunction(std::move(n2), den)}};
}

RationalFunction sasakian_length() {
  const RPoly r2 = rconst(1) + rvar(0).pow(2) + rvar(1).pow(2) + rvar(2).pow(2);
  return RationalFunction(rconst(4), r2);
}

RationalFunction cyclic_averaged_component() {
  const RPoly x = rvar(0), y = rvar(1), z = rvar(2);
  RPoly num = x.multiplied(y).scaled(Rational(2)) + x.multiplied(z).scaled(Rational(2)) -
              y.scaled(Rational(2)) + z.scaled(Rational(2)) + rconst(1) + x.pow(2) - y.pow(2) -
              z.pow(2);
  return RationalFunction(std::move(num), denominator_square());
}

RationalVectorField cyclic_averaged_field() {
  const RationalFunction u = cyclic_averaged_component();
  const auto permuted = [&](const std::array<int, 3>& perm) {
    return RationalFunction(u.num.variables_permuted(perm), u.den.variables_permuted(perm));
  };
  // U(y,z,x) sends x->y, y->z, z->x; U(z,x,y) is the square of that cycle.
  return {{u, permuted({1, 2, 0}), permuted({2, 0, 1})}};
}

}  // namespace beltrami
