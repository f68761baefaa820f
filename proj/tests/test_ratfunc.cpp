#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "beltrami/ratfunc.hpp"

namespace {

using namespace beltrami;

using RatPoly = Polynomial<Rational>;

RatPoly rp_monomial(const Exponents& e, Rational c) {
  return RatPoly::monomial(3, e, std::move(c));
}

// 1 + x^2 + y^2 + z^2.
RatPoly one_plus_r2() {
  RatPoly p = RatPoly::constant(3, Rational(1));
  p.add_term({2, 0, 0}, Rational(1));
  p.add_term({0, 2, 0}, Rational(1));
  p.add_term({0, 0, 2}, Rational(1));
  return p;
}

}  // namespace

TEST_CASE("rational function equality is cross-multiplied") {
  const RationalFunction b(rp_monomial({1, 0, 0}, Rational(1)), one_plus_r2());
  const RationalFunction doubled(rp_monomial({1, 0, 0}, Rational(2)),
                                 one_plus_r2().scaled(Rational(2)));
  CHECK(rf_equal(b, doubled));
  CHECK_FALSE(rf_equal(b, RationalFunction::from_polynomial(rp_monomial({1, 0, 0}, Rational(1)))));
  CHECK_THROWS_AS(RationalFunction(rp_monomial({1, 0, 0}, Rational(1)), RatPoly(3)),
                  std::domain_error);
}

TEST_CASE("quotient-rule derivative") {
  // d/dx [x / (1+r^2)] = (1 + r^2 - 2x^2) / (1+r^2)^2.
  const RationalFunction f(rp_monomial({1, 0, 0}, Rational(1)), one_plus_r2());
  RatPoly num = one_plus_r2();
  num.add_term({2, 0, 0}, Rational(-2));
  const RationalFunction expected(num, one_plus_r2().multiplied(one_plus_r2()));
  CHECK(rf_equal(f.derivative(0), expected));
}

TEST_CASE("known closed form of the base field") {
  const RationalVectorField b = sasakian_field();
  const RatPoly den = one_plus_r2().multiplied(one_plus_r2());

  RatPoly n0 = rp_monomial({1, 0, 1}, Rational(8));
  n0.add_term({0, 1, 0}, Rational(-8));
  RatPoly n1 = rp_monomial({1, 0, 0}, Rational(8));
  n1.add_term({0, 1, 1}, Rational(8));
  RatPoly n2 = RatPoly::constant(3, Rational(4));
  n2.add_term({0, 0, 2}, Rational(4));
  n2.add_term({2, 0, 0}, Rational(-4));
  n2.add_term({0, 2, 0}, Rational(-4));

  CHECK(rf_equal(b.component(0), RationalFunction(n0, den)));
  CHECK(rf_equal(b.component(1), RationalFunction(n1, den)));
  CHECK(rf_equal(b.component(2), RationalFunction(n2, den)));

  // Pointwise length: |B| = 4/(1+r^2).
  const std::vector<double> p{0.3, -0.7, 1.1};
  const auto v = b.evaluated(p);
  const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  CHECK(len == doctest::Approx(sasakian_length().evaluated(p)).epsilon(1e-12));
}

TEST_CASE("curl eigen-identities of the two examples") {
  const RationalVectorField b = sasakian_field();
  const RationalVectorField f = cyclic_averaged_field();
  const RationalFunction mult = sasakian_length();  // 4/(1+r^2)

  CHECK(rf_equal(b.curl(), b.scaled_by(mult)));
  CHECK(rf_equal(f.curl(), f.scaled_by(mult)));
  CHECK(b.cross(b.curl()).is_zero());

  // Norm identity pinning the irrational-scale variant: |F|^2 = 3/(1+r^2)^2,
  // so curl F = (4/sqrt3)|F| F reduces to the rational identity above.
  const RationalFunction f_norm(RatPoly::constant(3, Rational(3)),
                                one_plus_r2().multiplied(one_plus_r2()));
  CHECK(rf_equal(f.norm_squared(), f_norm));
}

TEST_CASE("constant fields have zero curl") {
  RationalVectorField c;
  c.c[0] = RationalFunction::from_polynomial(RatPoly::constant(3, Rational(7)));
  c.c[1] = RationalFunction::from_polynomial(RatPoly::constant(3, Rational(-2)));
  c.c[2] = RationalFunction::from_polynomial(RatPoly::constant(3, Rational(1, 3)));
  CHECK(c.curl().is_zero());
}

TEST_CASE("group averages") {
  const RationalVectorField b = sasakian_field();

  // Average over the trivial group returns the field.
  const MatrixGroup trivial = generate_group({Mat3G::identity()});
  CHECK(rf_equal(rf_group_average(b, trivial, Rational(1)), b));

  // The Klein average annihilates the field.
  CHECK(rf_group_average(b, klein_group(), Rational(1)).is_zero());

  // The cyclic average (scale 1/4) reproduces the named field, whose first
  // component is the directly entered closed form.
  const MatrixGroup cyclic = generate_group({rotation_beta()});
  const RationalVectorField averaged = rf_group_average(b, cyclic, Rational(1, 4));
  CHECK(rf_equal(averaged, cyclic_averaged_field()));
  CHECK(rf_equal(averaged.c[0], cyclic_averaged_component()));

  // A full-group average is invariant under conjugation by group elements.
  const auto rows = rotation_beta().rows();
  std::vector<std::vector<Rational>> beta_rows(3, std::vector<Rational>(3));
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) beta_rows[i][j] = rows[i][j].rational_part();
  }
  CHECK(rf_equal(averaged.conjugated(beta_rows), averaged));
}

TEST_CASE("irrational averages are rejected") {
  // gamma has entries outside Q; averaging over a subgroup containing it
  // leaves radical parts behind.
  const MatrixGroup five_fold = generate_group({rotation_gamma()});
  CHECK(five_fold.order() == 5);
  CHECK_THROWS_AS(rf_group_average(sasakian_field(), five_fold, Rational(1, 5)),
                  std::domain_error);
}

TEST_CASE("lift and lower round trip") {
  const RationalVectorField b = sasakian_field();
  const auto lifted = rf_lift(b);
  const auto lowered = rf_lower(lifted);
  REQUIRE(lowered.has_value());
  CHECK(rf_equal(*lowered, b));

  // A field with a genuine radical coefficient does not lower.
  GoldenRatVectorField irr = lifted;
  irr.c[0] = irr.c[0].scaled(root_five());
  CHECK_FALSE(rf_lower(irr).has_value());
}
