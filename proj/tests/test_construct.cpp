#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "beltrami/construct.hpp"
#include "beltrami/dynamics.hpp"

namespace {

using namespace beltrami;

const GoldenNumber kPhi = golden_ratio();
const GoldenNumber kPhiInv = golden_ratio_inverse();
const GoldenNumber kHalf = gn(Rational(1, 2));

// Basis vectors restricted to the named columns, as a square matrix; the
// chart is valid iff this matrix is invertible.
std::vector<std::vector<GoldenNumber>> chart_matrix(const AnsatzSpace& space,
                                                    const std::vector<size_t>& columns) {
  std::vector<std::vector<GoldenNumber>> m;
  for (const auto& dir : space.solution.basis) {
    std::vector<GoldenNumber> row;
    for (size_t c : columns) row.push_back(dir[c]);
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

TEST_CASE("the form table") {
  const SymmetryForms& forms = symmetry_forms();

  // First family member is (1/2, phi/2, 1/(2 phi)).
  const GoldenForm& l00 = forms.form(0, 0);
  CHECK(l00.coefficient(0) == kHalf);
  CHECK(l00.coefficient(1) == kPhi * kHalf);
  CHECK(l00.coefficient(2) == kPhiInv * kHalf);

  // Index a > 0 flips the sign of coordinate a-1 within the x family.
  for (int a = 1; a <= 3; ++a) {
    for (int i = 0; i < 3; ++i) {
      const GoldenNumber expected =
          (i == a - 1) ? -l00.coefficient(i) : l00.coefficient(i);
      CHECK(forms.form(0, a).coefficient(i) == expected);
    }
  }

  // The y and z families are cyclic coefficient shifts: l_{y,0}(x,y,z) =
  // l_{x,0}(y,z,x), and the quoted table value for l_{y,2}.
  const GoldenForm& l10 = forms.form(1, 0);
  CHECK(l10.coefficient(0) == l00.coefficient(2));
  CHECK(l10.coefficient(1) == l00.coefficient(0));
  CHECK(l10.coefficient(2) == l00.coefficient(1));
  const GoldenForm& l12 = forms.form(1, 2);
  CHECK(l12.coefficient(0) == kPhiInv * kHalf);
  CHECK(l12.coefficient(1) == kHalf);
  CHECK(l12.coefficient(2) == -(kPhi * kHalf));

  // All twelve coefficient vectors are unit length.
  for (int w = 0; w < 3; ++w) {
    for (int a = 0; a < 4; ++a) CHECK(forms.form(w, a).norm_squared() == gn(1));
  }

  // The quoted orthogonal pairs and the orthonormal triple.
  CHECK(forms.form(0, 0).dot(forms.form(2, 2)) == gn(0));
  CHECK(forms.form(0, 0).dot(forms.form(1, 1)) == gn(0));
  CHECK(forms.form(0, 2).dot(forms.form(2, 1)) == gn(0));
  CHECK(forms.form(0, 2).dot(forms.form(1, 0)) == gn(0));
  CHECK(forms.form(2, 1).dot(forms.form(1, 0)) == gn(0));

  // Axis forms are the plain coordinates.
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(forms.axis[i].coefficient(j) == gn(i == j ? 1 : 0));
  }
}

TEST_CASE("ansatz assembly") {
  CHECK(build_ansatz(AnsatzParams::zero()).is_zero());

  // The even-half parameters rebuild the catalog component exactly.
  CHECK(build_ansatz(AnsatzParams::even_field_params()) == catalog().V.component(0));

  // Parameter slots act linearly: the ansatz of a sum is the sum of ansatze.
  AnsatzParams p1 = AnsatzParams::unit(0);
  AnsatzParams p5 = AnsatzParams::unit(5);
  AnsatzParams sum = AnsatzParams::zero();
  sum.v[0] = gn(1);
  sum.v[5] = gn(1);
  CHECK(build_ansatz(p1) + build_ansatz(p5) == build_ansatz(sum));
}

TEST_CASE("cyclic fields") {
  GoldenForm z(3);
  z.set_coefficient(2, gn(1));
  const GoldenField f = cyclic_field(GoldenTrig::sin(z));
  CHECK(f.component(0) == GoldenTrig::sin(z));
  {
    GoldenForm x(3);
    x.set_coefficient(0, gn(1));
    CHECK(f.component(1) == GoldenTrig::sin(x));
  }

  // Rebuilding V from its first component reproduces the catalog field, and
  // a cyclic field commutes with conjugation by the cyclic rotation.
  const GoldenField v = cyclic_field(catalog().V.component(0));
  CHECK(v == catalog().V);
  CHECK(v.conjugated(rotation_beta().rows()) == v);
}

TEST_CASE("constraint pipeline dimensions") {
  const AnsatzSpace start = initial_ansatz_space();
  CHECK(start.dimension() == 11);

  const AnsatzSpace s1 = constraint_stage(start, ConstraintStage::taylor_match);
  CHECK(s1.dimension() == 5);
  const AnsatzSpace s2 = constraint_stage(s1, ConstraintStage::divergence_zero);
  CHECK(s2.dimension() == 3);
  const AnsatzSpace s3 = constraint_stage(s2, ConstraintStage::gamma_invariance);
  CHECK(s3.dimension() == 1);

  // Stages are order-enforced.
  CHECK_THROWS_AS(constraint_stage(start, ConstraintStage::divergence_zero),
                  std::invalid_argument);
  CHECK_THROWS_AS(constraint_stage(s1, ConstraintStage::gamma_invariance),
                  std::invalid_argument);

  // full_pipeline is the composition of the three stages.
  const AnsatzSpace full = full_pipeline();
  CHECK(full.dimension() == 1);
  CHECK(full.contains(params_with_leading(s3, gn(768))));
}

TEST_CASE("quoted free-coefficient sets are valid charts") {
  // The solver's deterministic pivot order reports its own free columns; the
  // quoted sets {a,b,c,d,f} and {a,b,d} must still be usable as coordinates,
  // i.e. the basis restricted to those columns is invertible.
  const AnsatzSpace s1 = constraint_stage(initial_ansatz_space(), ConstraintStage::taylor_match);
  CHECK_NOTHROW(small_matrix_inverse(chart_matrix(s1, {0, 1, 2, 3, 5})));

  const AnsatzSpace s2 = constraint_stage(s1, ConstraintStage::divergence_zero);
  CHECK_NOTHROW(small_matrix_inverse(chart_matrix(s2, {0, 1, 3})));
}

TEST_CASE("the final one-parameter family") {
  const AnsatzSpace space = full_pipeline();

  // In the denominator-free scaling, b(a) = 1920 + 384*sqrt5 - (3/2 + sqrt5/2)a:
  // b(0) = 1920 + 384*sqrt5 and b(768) = 768.
  const AnsatzParams at_zero = params_with_leading(space, gn(0));
  CHECK(at_zero.v[1] == gn(Rational(1920), Rational(384)));
  const AnsatzParams at_768 = params_with_leading(space, gn(768));
  CHECK(at_768.v[1] == gn(768));

  // That distinguished point is 384 times the double-scale parameters, hence
  // 768 times the catalog's even-half parameters.
  const AnsatzParams dbl = AnsatzParams::double_scale_params();
  const AnsatzParams even = AnsatzParams::even_field_params();
  for (size_t i = 0; i < 11; ++i) {
    CHECK(at_768.v[i] == dbl.v[i] * gn(384));
    CHECK(dbl.v[i] == even.v[i] * gn(2));
  }

  // Its degree-6 Taylor head is the canonical head exactly.
  const GoldenField f = cyclic_field(build_ansatz(dbl));
  CHECK(f.component(0).taylor(6) == canonical_head().scaled(gn(Rational(1, 384))));
  CHECK(f.component(0).taylor(5).is_zero());
}

TEST_CASE("homogeneous solution spaces") {
  const AnsatzSpace space = icosahedral_solution_space();
  CHECK(space.dimension() == 2);
  CHECK(space.contains(AnsatzParams::even_field_params()));
  CHECK(space.contains(AnsatzParams::higher_order_params()));
  CHECK_FALSE(space.contains(AnsatzParams::unit(2)));

  CHECK(constants_only_solution_space().dimension() == 0);
}

TEST_CASE("taylor heads with their catalog normalizations") {
  const FieldCatalog& cat = catalog();

  CHECK(cat.V.component(0).taylor(6) == cat.M[0].scaled(gn(Rational(1, 768))));
  CHECK(cat.W.component(0).taylor(5) == cat.N[0].scaled(gn(Rational(1, 768))));
  CHECK(cat.V0.component(0).taylor(10) == cat.P[0].scaled(gn(Rational(1, 23224320))));
  CHECK(cat.V0.component(0).taylor(9).is_zero());

  // Q is the curl of P; the cyclic structure links the components.
  const auto q = poly_curl(cat.P);
  for (size_t i = 0; i < 3; ++i) CHECK(q[i] == cat.Q[i]);
  CHECK(cat.M[1] == cat.M[0].variables_permuted({1, 2, 0}));
  CHECK(cat.M[2] == cat.M[0].variables_permuted({2, 0, 1}));
}

TEST_CASE("head polynomial identities") {
  const FieldCatalog& cat = catalog();

  // x*w_x + y*w_y + z*w_z = 0: the head field is tangent to spheres.
  GoldenPoly radial(3);
  for (int i = 0; i < 3; ++i) {
    radial += GoldenPoly::variable(3, i).multiplied(cat.M[static_cast<size_t>(i)]);
  }
  CHECK(radial.is_zero());

  // r^2 and the sextic invariant are first integrals of the head flow.
  GoldenPoly r2(3);
  r2.add_term({2, 0, 0}, gn(1));
  r2.add_term({0, 2, 0}, gn(1));
  r2.add_term({0, 0, 2}, gn(1));
  const GoldenField m_field = polynomial_field(cat.M);
  CHECK(is_first_integral(r2, m_field));

  const GoldenNumber phi2 = kPhi * kPhi;
  const auto quadratic_factor = [&](int i, int j) {
    GoldenPoly p(3);
    Exponents ei{0, 0, 0}, ej{0, 0, 0};
    ei.at(static_cast<size_t>(i)) = 2;
    ej.at(static_cast<size_t>(j)) = 2;
    p.add_term(ei, phi2);
    p.add_term(ej, gn(-1));
    return p;
  };
  const GoldenPoly sextic =
      quadratic_factor(0, 1).multiplied(quadratic_factor(1, 2)).multiplied(quadratic_factor(2, 0));
  CHECK(is_first_integral(sextic, m_field));
  CHECK_FALSE(is_first_integral(GoldenPoly::variable(3, 0), m_field));
}

TEST_CASE("head fields vanish on all 62 symmetry lines") {
  const FieldCatalog& cat = catalog();
  const MatrixGroup ico = icosahedral_group();
  size_t total = 0;
  for (const Vec3G& seed :
       {Vec3G{kPhi, gn(1), gn(0)}, Vec3G{gn(1), gn(1), gn(1)}, Vec3G{gn(1), gn(0), gn(0)}}) {
    for (const Vec3G& dir : orbit_of_line(ico, seed)) {
      const std::vector<GoldenNumber> d{dir.v[0], dir.v[1], dir.v[2]};
      for (const auto& component : cat.M) CHECK(component.restricted_to_line(d).is_zero());
      ++total;
    }
  }
  CHECK(total == 62);
}

TEST_CASE("eigenfield family") {
  const FieldCatalog& cat = catalog();

  // I = V + W and Y = V0 + W0 are the catalog sums.
  CHECK(cat.I == cat.V + cat.W);
  CHECK(cat.Y == cat.V0 + cat.W0);

  // I + a*Y stays a curl eigenfield for random rational a.
  std::mt19937 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const Rational a(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 6) + 1);
    const GoldenField family = cat.I + cat.Y.scaled(gn(a));
    CHECK(family.curl() == family);
  }
}

TEST_CASE("unit-coefficient trigonometric flows") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto coeff = [&rng] {
      return gn(Rational(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 4) + 1));
    };
    const GoldenField f = abc_flow(coeff(), coeff(), coeff());
    CHECK(f.curl() == f);
  }
  CHECK(catalog().ABC == abc_flow(gn(1), gn(1), gn(1)));
}

TEST_CASE("catalog registry") {
  const auto& names = catalog_names();
  const std::vector<std::string> expected{"V",  "W", "I",   "V0",          "W0",
                                          "Y",  "M", "N",   "P",           "Q",
                                          "D",  "ABC",      "B_sasakian",  "F_averaged"};
  CHECK(names == expected);

  CHECK(catalog_trig_entry("V").has_value());
  CHECK(catalog_trig_entry("Q").has_value());
  CHECK_FALSE(catalog_trig_entry("D").has_value());
  CHECK_FALSE(catalog_trig_entry("B_sasakian").has_value());
  CHECK_FALSE(catalog_trig_entry("nope").has_value());

  // Wrapped polynomial entries evaluate like the raw polynomials.
  const auto m_field = catalog_trig_entry("M");
  REQUIRE(m_field.has_value());
  const std::vector<double> p{0.4, -1.2, 0.9};
  const auto direct = polynomial_field(catalog().M).evaluated(p);
  const auto wrapped = m_field->evaluated(p);
  for (size_t i = 0; i < 3; ++i) CHECK(wrapped[i] == direct[i]);
}
