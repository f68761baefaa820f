#include "beltrami/construct.hpp"

#include <set>
#include <utility>

namespace beltrami {

namespace {

GoldenNumber half() { return gn(Rational(1, 2)); }

GoldenForm form3(GoldenNumber cx, GoldenNumber cy, GoldenNumber cz) {
  return GoldenForm(std::vector<GoldenNumber>{std::move(cx), std::move(cy), std::move(cz)});
}

SymmetryForms make_symmetry_forms() {
  SymmetryForms out;
  out.axis = {form3(gn(1), gn(0), gn(0)), form3(gn(0), gn(1), gn(0)), form3(gn(0), gn(0), gn(1))};
  const GoldenNumber base[3] = {half(), golden_ratio() * half(), golden_ratio_inverse() * half()};
  for (int a = 0; a < 4; ++a) {
    std::array<GoldenNumber, 3> c{base[0], base[1], base[2]};
    if (a > 0) c[static_cast<size_t>(a - 1)] = -c[static_cast<size_t>(a - 1)];
    // Family x directly; families y and z shift the coefficient triple
    // cyclically: (c1,c2,c3) -> (c3,c1,c2) -> (c2,c3,c1).
    out.family[0][static_cast<size_t>(a)] = form3(c[0], c[1], c[2]);
    out.family[1][static_cast<size_t>(a)] = form3(c[2], c[0], c[1]);
    out.family[2][static_cast<size_t>(a)] = form3(c[1], c[2], c[0]);
  }
  return out;
}

// The three sign-flip images used by the sine blocks, in fixed order.
constexpr std::array<std::array<int, 3>, 4> kFlips = {
    {{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}}};

// Form indices paired with flip i for family w; identical for the cosine
// blocks (with signs +,-,-,+) and the sine blocks (signs +,+,+,-).
constexpr std::array<std::array<int, 4>, 3> kBlockOrder = {
    {{0, 3, 2, 1}, {0, 2, 1, 3}, {0, 1, 3, 2}}};

constexpr std::array<int, 4> kCosSigns = {1, -1, -1, 1};
constexpr std::array<int, 4> kSinSigns = {1, 1, 1, -1};

std::vector<std::vector<GoldenNumber>> diagonal_rows(int sx, int sy, int sz) {
  return {{gn(sx), gn(0), gn(0)}, {gn(0), gn(sy), gn(0)}, {gn(0), gn(0), gn(sz)}};
}

// ---------------------------------------------------------------------------
// Constraint machinery. The ansatz is linear in its eleven coefficients, so
// every functional constraint is harvested from the canonical forms of the
// eleven unit-coefficient instances: an expression vanishes iff every stored
// polynomial coefficient vanishes.

struct AnsatzBasis {
  std::array<GoldenTrig, 11> g;
  std::array<GoldenField, 11> field;
};

const AnsatzBasis& ansatz_basis() {
  static const AnsatzBasis basis = [] {
    AnsatzBasis out;
    for (size_t i = 0; i < 11; ++i) {
      out.g[i] = build_ansatz(AnsatzParams::unit(i));
      out.field[i] = cyclic_field(out.g[i]);
    }
    return out;
  }();
  return basis;
}

void append_poly_rows(LinearSystemG& sys, const std::array<GoldenPoly, 11>& polys,
                      const GoldenPoly* target) {
  std::set<Exponents> monomials;
  for (const auto& p : polys) {
    for (const auto& [e, c] : p.terms()) monomials.insert(e);
  }
  if (target != nullptr) {
    for (const auto& [e, c] : target->terms()) monomials.insert(e);
  }
  for (const auto& e : monomials) {
    std::vector<GoldenNumber> row;
    row.reserve(11);
    for (const auto& p : polys) row.push_back(p.coefficient(e));
    sys.add_row(std::move(row), target == nullptr ? gn(0) : target->coefficient(e));
  }
}

void append_expr_rows(LinearSystemG& sys, const std::array<GoldenTrig, 11>& exprs) {
  std::set<std::pair<TrigTermKey<GoldenNumber>, Exponents>> keys;
  for (const auto& expr : exprs) {
    for (const auto& [key, poly] : expr.terms()) {
      for (const auto& [e, c] : poly.terms()) keys.insert({key, e});
    }
  }
  for (const auto& [key, e] : keys) {
    std::vector<GoldenNumber> row;
    row.reserve(11);
    for (const auto& expr : exprs) {
      const auto it = expr.terms().find(key);
      row.push_back(it == expr.terms().end() ? gn(0) : it->second.coefficient(e));
    }
    sys.add_row(std::move(row), gn(0));
  }
}

void append_taylor_match_rows(LinearSystemG& sys) {
  std::array<GoldenPoly, 11> heads;
  for (size_t i = 0; i < 11; ++i) heads[i] = ansatz_basis().g[i].taylor(6);
  const GoldenPoly target = canonical_head();
  append_poly_rows(sys, heads, &target);
}

void append_divergence_rows(LinearSystemG& sys) {
  std::array<GoldenTrig, 11> divs;
  for (size_t i = 0; i < 11; ++i) divs[i] = ansatz_basis().field[i].divergence();
  append_expr_rows(sys, divs);
}

// The first row of gamma^T contracted with the field composed with gamma
// must reproduce the first component; the two other components follow by the
// cyclic structure.
void append_gamma_rows(LinearSystemG& sys) {
  const auto rows = rotation_gamma().rows();
  const GoldenNumber w0 = half();
  const GoldenNumber w1 = golden_ratio() * half();
  const GoldenNumber w2 = golden_ratio_inverse() * half();
  std::array<GoldenTrig, 11> residuals;
  for (size_t i = 0; i < 11; ++i) {
    const GoldenField& f = ansatz_basis().field[i];
    GoldenTrig r = f.component(0).substituted(rows).scaled(w0);
    r += f.component(1).substituted(rows).scaled(w1);
    r += f.component(2).substituted(rows).scaled(w2);
    r -= ansatz_basis().g[i];
    residuals[i] = std::move(r);
  }
  append_expr_rows(sys, residuals);
}

AnsatzSpace solved_space(ConstraintStage stage, LinearSystemG equations) {
  AnsatzSpace out;
  out.stage = stage;
  out.solution = solve_linear(equations);
  out.equations = std::move(equations);
  if (!out.solution.consistent) {
    throw std::runtime_error(std::string("constraint_stage: inconsistent system at ") +
                             constraint_stage_name(stage));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms, entered independently of the ansatz.

using K = TrigKind;

GoldenTrig axis_sin(int axis, const GoldenPoly& pre) {
  GoldenForm f(3);
  f.set_coefficient(axis, gn(1));
  return GoldenTrig::sin(f).scaled(pre);
}

GoldenTrig axis_cos(int axis, const GoldenPoly& pre) {
  GoldenForm f(3);
  f.set_coefficient(axis, gn(1));
  return GoldenTrig::cos(f).scaled(pre);
}

// pre * k1(c1 x) * k2(c2 y) * k3(c3 z), expanded to canonical form.
GoldenTrig triple(const GoldenPoly& pre, K k1, const GoldenNumber& c1, K k2,
                  const GoldenNumber& c2, K k3, const GoldenNumber& c3) {
  const auto factor = [](K k, int axis, const GoldenNumber& c) {
    GoldenForm f(3);
    f.set_coefficient(axis, c);
    return k == K::Sin ? GoldenTrig::sin(f) : GoldenTrig::cos(f);
  };
  return factor(k1, 0, c1).multiplied(factor(k2, 1, c2)).multiplied(factor(k3, 2, c3)).scaled(pre);
}

GoldenPoly gvar(int axis, const GoldenNumber& coeff) {
  return GoldenPoly::variable(3, axis, coeff);
}

GoldenTrig even_component_closed() {
  const GoldenNumber p = golden_ratio(), q = golden_ratio_inverse(), h = half();
  const GoldenNumber ph = p * h, qh = q * h;
  GoldenTrig v = triple(gvar(0, gn(2)), K::Sin, h, K::Sin, ph, K::Sin, qh);
  v += triple(gvar(0, -(p + p)), K::Sin, qh, K::Sin, h, K::Sin, ph);
  v += triple(gvar(0, q + q), K::Sin, ph, K::Sin, qh, K::Sin, h);
  v += axis_sin(2, gvar(1, gn(1)));
  v += triple(gvar(1, gn(2)), K::Cos, h, K::Cos, ph, K::Sin, qh);
  v += triple(gvar(1, gn(-2)), K::Cos, qh, K::Cos, h, K::Sin, ph);
  v += axis_sin(1, gvar(2, gn(1)));
  v += triple(gvar(2, gn(-2)), K::Cos, h, K::Sin, ph, K::Cos, qh);
  v += triple(gvar(2, gn(2)), K::Cos, ph, K::Sin, qh, K::Cos, h);
  return v;
}

GoldenTrig odd_component_closed() {
  const GoldenNumber p = golden_ratio(), q = golden_ratio_inverse(), h = half();
  const GoldenNumber ph = p * h, qh = q * h;
  const GoldenNumber r5 = root_five();
  const GoldenNumber p2 = p * p, q2 = q * q;
  GoldenTrig w = axis_cos(1, gvar(0, gn(1)));
  w += axis_cos(2, gvar(0, gn(-1)));
  w += triple(gvar(0, -r5), K::Cos, h, K::Cos, ph, K::Cos, qh);
  w += triple(gvar(0, p), K::Cos, qh, K::Cos, h, K::Cos, ph);
  w += triple(gvar(0, q), K::Cos, ph, K::Cos, qh, K::Cos, h);
  w += triple(gvar(1, -q2), K::Sin, h, K::Sin, ph, K::Cos, qh);
  w += triple(gvar(1, -p2), K::Sin, qh, K::Sin, h, K::Cos, ph);
  w += triple(gvar(1, r5), K::Sin, ph, K::Sin, qh, K::Cos, h);
  w += triple(gvar(2, -p2), K::Sin, h, K::Cos, ph, K::Sin, qh);
  w += triple(gvar(2, -q2), K::Sin, ph, K::Cos, qh, K::Sin, h);
  w += triple(gvar(2, r5), K::Sin, qh, K::Cos, h, K::Sin, ph);
  return w;
}

GoldenTrig higher_even_component_closed() {
  const GoldenNumber p = golden_ratio(), q = golden_ratio_inverse(), h = half();
  const GoldenNumber ph = p * h, qh = q * h;
  const GoldenNumber r5 = root_five();
  GoldenTrig v = triple(gvar(0, gn(2)), K::Sin, h, K::Sin, ph, K::Sin, qh);
  v += triple(gvar(0, -(p + p)), K::Sin, qh, K::Sin, h, K::Sin, ph);
  v += triple(gvar(0, q + q), K::Sin, ph, K::Sin, qh, K::Sin, h);
  v += axis_sin(2, gvar(1, p + p));
  v += triple(gvar(1, gn(7) - r5), K::Cos, h, K::Cos, ph, K::Sin, qh);
  v += triple(gvar(1, gn(2) * p * p), K::Cos, qh, K::Cos, h, K::Sin, ph);
  v += triple(gvar(1, r5 + r5), K::Cos, ph, K::Cos, qh, K::Sin, h);
  v += axis_sin(1, gvar(2, -(q + q)));
  v += triple(gvar(2, -(gn(7) + r5)), K::Cos, h, K::Sin, ph, K::Cos, qh);
  v += triple(gvar(2, gn(-2) * q * q), K::Cos, ph, K::Sin, qh, K::Cos, h);
  v += triple(gvar(2, -(r5 + r5)), K::Cos, qh, K::Sin, h, K::Cos, ph);
  return v;
}

GoldenPoly head_poly(std::initializer_list<std::pair<Exponents, GoldenNumber>> entries) {
  GoldenPoly p(3);
  for (const auto& [e, c] : entries) p.add_term(e, c);
  return p;
}

std::array<GoldenPoly, 3> degree6_heads() {
  const GoldenPoly first = canonical_head();
  const GoldenPoly second = head_poly({{{{5, 0, 1}}, gn(5, -1)},
                                       {{{1, 0, 5}}, gn(5, 1)},
                                       {{{3, 0, 3}}, gn(-20)},
                                       {{{3, 2, 1}}, gn(10, 10)},
                                       {{{1, 2, 3}}, gn(10, -10)},
                                       {{{1, 4, 1}}, gn(-10)}});
  const GoldenPoly third = head_poly({{{{1, 5, 0}}, gn(5, -1)},
                                      {{{5, 1, 0}}, gn(5, 1)},
                                      {{{3, 3, 0}}, gn(-20)},
                                      {{{1, 3, 2}}, gn(10, 10)},
                                      {{{3, 1, 2}}, gn(10, -10)},
                                      {{{1, 1, 4}}, gn(-10)}});
  return {first, second, third};
}

std::array<GoldenPoly, 3> degree5_heads() {
  const GoldenPoly first = head_poly({{{{1, 4, 0}}, gn(35, -5)},
                                      {{{1, 0, 4}}, gn(-35, -5)},
                                      {{{1, 2, 2}}, gn(0, 60)},
                                      {{{3, 2, 0}}, gn(-70, -10)},
                                      {{{3, 0, 2}}, gn(70, -10)},
                                      {{{5, 0, 0}}, gn(0, 2)}});
  return {first, first.variables_permuted({1, 2, 0}), first.variables_permuted({2, 0, 1})};
}

std::array<GoldenPoly, 3> degree10_heads() {
  const GoldenPoly first = head_poly({{{{8, 1, 1}}, gn(-18)},
                                      {{{6, 3, 1}}, gn(84, 84)},
                                      {{{6, 1, 3}}, gn(84, -84)},
                                      {{{4, 5, 1}}, gn(-126, -126)},
                                      {{{4, 1, 5}}, gn(-126, 126)},
                                      {{{2, 7, 1}}, gn(36, 108)},
                                      {{{2, 1, 7}}, gn(36, -108)},
                                      {{{2, 5, 3}}, gn(0, -504)},
                                      {{{2, 3, 5}}, gn(0, 504)},
                                      {{{0, 9, 1}}, gn(9, -5)},
                                      {{{0, 1, 9}}, gn(9, 5)},
                                      {{{0, 7, 3}}, gn(-120, 24)},
                                      {{{0, 3, 7}}, gn(-120, -24)},
                                      {{{0, 5, 5}}, gn(252)}});
  return {first, first.variables_permuted({1, 2, 0}), first.variables_permuted({2, 0, 1})};
}

// ---------------------------------------------------------------------------
// Planar field with six-fold dihedral symmetry, over Q(sqrt3).

using DihedralTrig = TrigExpr<RootThreeNumber>;

DihedralTrig planar_component(bool swapped) {
  using R3 = RootThreeNumber;
  const R3 one(Rational(1)), h(Rational(1, 2));
  const R3 r3(Rational(0), Rational(1));
  const R3 r3h = r3 * h;
  const int u = swapped ? 1 : 0;
  const int w = swapped ? 0 : 1;
  const auto form = [&](int axis, const R3& c) {
    LinearForm<R3> f(2);
    f.set_coefficient(axis, c);
    return f;
  };
  DihedralTrig t = -DihedralTrig::cos(form(w, one));
  t += DihedralTrig::sin(form(u, h)).multiplied(DihedralTrig::sin(form(w, r3h))).scaled(r3);
  t += DihedralTrig::cos(form(u, r3h)).multiplied(DihedralTrig::cos(form(w, h)));
  return t;
}

DihedralField planar_field() {
  return DihedralField({planar_component(false), planar_component(true)});
}

// ---------------------------------------------------------------------------
// Catalog construction with cross-checks.

[[noreturn]] void catalog_fail(const std::string& entry, const std::string& predicate) {
  throw std::logic_error("catalog entry " + entry + ": " + predicate);
}

void check(bool ok, const char* entry, const char* predicate) {
  if (!ok) catalog_fail(entry, predicate);
}

std::array<GoldenPoly, 3> scaled_heads(const std::array<GoldenPoly, 3>& h, const Rational& s) {
  return {h[0].scaled(gn(s)), h[1].scaled(gn(s)), h[2].scaled(gn(s))};
}

std::array<GoldenPoly, 3> field_taylor(const GoldenField& f, int degree) {
  return {f.component(0).taylor(degree), f.component(1).taylor(degree),
          f.component(2).taylor(degree)};
}

bool heads_equal(const std::array<GoldenPoly, 3>& a, const std::array<GoldenPoly, 3>& b) {
  return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
}

bool heads_zero(const std::array<GoldenPoly, 3>& a) {
  return a[0].is_zero() && a[1].is_zero() && a[2].is_zero();
}

FieldCatalog build_catalog() {
  FieldCatalog cat;

  cat.V = cyclic_field(even_component_closed());
  check(cyclic_field(build_ansatz(AnsatzParams::even_field_params())) == cat.V, "V",
        "ansatz reconstruction does not match the entered closed form");

  cat.W = cyclic_field(odd_component_closed());
  check(cat.V.curl() == cat.W, "W", "curl of V does not match the entered closed form");
  check(cat.W.curl() == cat.V, "W", "curl of W does not equal V");
  check(cat.W.divergence().is_zero(), "W", "divergence does not vanish");
  check(cat.V.divergence().is_zero(), "V", "divergence does not vanish");

  cat.I = cat.V + cat.W;
  check(cat.I.curl() == cat.I, "I", "curl eigenfield identity fails");

  cat.V0 = cyclic_field(higher_even_component_closed());
  check(cyclic_field(build_ansatz(AnsatzParams::higher_order_params())) == cat.V0, "V0",
        "ansatz reconstruction does not match the entered closed form");
  check(cat.V0.divergence().is_zero(), "V0", "divergence does not vanish");

  cat.W0 = cat.V0.curl();
  check(cat.W0.curl() == cat.V0, "W0", "curl of W0 does not equal V0");

  cat.Y = cat.V0 + cat.W0;
  check(cat.Y.curl() == cat.Y, "Y", "curl eigenfield identity fails");

  cat.M = degree6_heads();
  check(cat.M[1] == cat.M[0].variables_permuted({1, 2, 0}) &&
            cat.M[2] == cat.M[0].variables_permuted({2, 0, 1}),
        "M", "entered components are not cyclic shifts of the first");
  check(heads_zero(field_taylor(cat.V, 5)), "M", "V has terms below degree 6");
  check(heads_equal(field_taylor(cat.V, 6), scaled_heads(cat.M, Rational(1, 768))), "M",
        "degree-6 Taylor head of V is not M/768");

  cat.N = degree5_heads();
  check(heads_zero(field_taylor(cat.W, 4)), "N", "W has terms below degree 5");
  check(heads_equal(field_taylor(cat.W, 5), scaled_heads(cat.N, Rational(1, 768))), "N",
        "degree-5 Taylor head of W is not N/768");
  check(heads_equal(poly_curl(cat.M), cat.N), "N", "curl of M does not equal N");
  check(heads_zero(poly_curl(cat.N)), "N", "curl of N does not vanish");

  cat.P = degree10_heads();
  check(heads_zero(field_taylor(cat.V0, 9)), "P", "V0 has terms below degree 10");
  check(heads_equal(field_taylor(cat.V0, 10), scaled_heads(cat.P, Rational(1, 23224320))), "P",
        "degree-10 Taylor head of V0 is not P/23224320");

  cat.Q = poly_curl(cat.P);
  check(!heads_zero(cat.Q), "Q", "curl of P vanishes");
  check(heads_zero(field_taylor(cat.W0, 8)), "Q", "W0 has terms below degree 9");
  check(heads_equal(field_taylor(cat.W0, 9), scaled_heads(cat.Q, Rational(1, 23224320))), "Q",
        "degree-9 Taylor head of W0 is not Q/23224320");

  cat.D = planar_field();
  {
    using R3 = RootThreeNumber;
    check(cat.D.component(1) == cat.D.component(0).variables_permuted({1, 0, 2}), "D",
          "second component is not the variable swap of the first");
    check(cat.D.component(0).helmholtz_residual().is_zero() &&
              cat.D.component(1).helmholtz_residual().is_zero(),
          "D", "components do not solve the Helmholtz equation");
    check(cat.D.divergence().is_zero(), "D", "divergence does not vanish");
    const std::vector<std::vector<R3>> swap_rows = {{R3(Rational(0)), R3(Rational(1))},
                                                    {R3(Rational(1)), R3(Rational(0))}};
    const R3 mh(Rational(-1, 2));
    const R3 r3h(Rational(0), Rational(1, 2));
    const std::vector<std::vector<R3>> rot_rows = {{mh, -r3h}, {r3h, mh}};
    check(cat.D.conjugated(swap_rows) == cat.D && cat.D.conjugated(rot_rows) == cat.D, "D",
          "dihedral invariance fails");
    Polynomial<R3> h0(2), h1(2);
    h0.add_term({1, 1, 0}, R3(Rational(2)));
    h0.add_term({2, 0, 0}, R3(Rational(-1)));
    h0.add_term({0, 2, 0}, R3(Rational(1)));
    h1.add_term({1, 1, 0}, R3(Rational(2)));
    h1.add_term({2, 0, 0}, R3(Rational(1)));
    h1.add_term({0, 2, 0}, R3(Rational(-1)));
    const R3 scale(Rational(3, 8));
    check(cat.D.component(0).taylor(1).is_zero() && cat.D.component(1).taylor(1).is_zero(), "D",
          "Taylor terms below degree 2 are present");
    check(cat.D.component(0).taylor(2) == h0.scaled(scale) &&
              cat.D.component(1).taylor(2) == h1.scaled(scale),
          "D", "degree-2 Taylor head is not (3/8)(2xy-x^2+y^2, 2xy+x^2-y^2)");
  }

  cat.ABC = abc_flow(gn(1), gn(1), gn(1));
  check(cat.ABC.curl() == cat.ABC, "ABC", "curl eigenfield identity fails");

  cat.B_sasakian = sasakian_field();
  {
    const RationalFunction len = sasakian_length();
    const RationalVectorField curl_b = cat.B_sasakian.curl();
    check(rf_equal(curl_b, cat.B_sasakian.scaled_by(len)), "B_sasakian",
          "curl does not equal |B| B");
    check(rf_equal(cat.B_sasakian.norm_squared(), len * len), "B_sasakian",
          "squared length is not (4/(1+r^2))^2");
    const RationalVectorField klein_sum = rf_group_average(cat.B_sasakian, klein_group(), 1);
    check(klein_sum.is_zero(), "B_sasakian", "Klein-group average does not vanish");
  }

  {
    const MatrixGroup cyclic3 = generate_group({rotation_beta()});
    check(cyclic3.order() == 3, "F_averaged", "cyclic averaging group has wrong order");
    cat.F_averaged = rf_group_average(cat.B_sasakian, cyclic3, Rational(1, 4));
    check(rf_equal(cat.F_averaged, cyclic_averaged_field()), "F_averaged",
          "average does not match the entered closed form");
    const RationalFunction len = sasakian_length();
    check(rf_equal(cat.F_averaged.curl(), cat.F_averaged.scaled_by(len)), "F_averaged",
          "curl does not equal 4/(1+r^2) F");
    // Squared length times (1+r^2)^2 is the constant 3.
    const RationalFunction ns = cat.F_averaged.norm_squared();
    const RationalFunction three = RationalFunction(
        Polynomial<Rational>::constant(3, Rational(3)), len.den.multiplied(len.den));
    check(rf_equal(ns, three), "F_averaged", "squared length is not 3/(1+r^2)^2");
  }

  return cat;
}

}  // namespace

const SymmetryForms& symmetry_forms() {
  static const SymmetryForms forms = make_symmetry_forms();
  return forms;
}

const std::array<const char*, 11> kAnsatzParamNames = {"a", "b", "c", "d", "e", "f",
                                                       "g", "h", "i", "j", "k"};

AnsatzParams AnsatzParams::unit(size_t index) {
  AnsatzParams p;
  p.v.at(index) = gn(1);
  return p;
}

AnsatzParams AnsatzParams::even_field_params() {
  const GoldenNumber p = golden_ratio(), q = golden_ratio_inverse(), h = half();
  AnsatzParams out;
  out.v = {gn(1), gn(1), gn(0), gn(0), gn(0), q * h, -(p * h), p * h, h, -h, q * h};
  return out;
}

AnsatzParams AnsatzParams::double_scale_params() {
  AnsatzParams out = even_field_params();
  for (auto& c : out.v) c = c * gn(2);
  return out;
}

AnsatzParams AnsatzParams::higher_order_params() {
  const GoldenNumber p = golden_ratio(), q = golden_ratio_inverse();
  AnsatzParams out;
  out.v = {-(q + q), p + p, gn(0), gn(0), gn(0), -(q * q), -(p * p), gn(-1), p, q, gn(1)};
  return out;
}

GoldenTrig build_ansatz(const AnsatzParams& p) {
  const auto& sf = symmetry_forms();
  // Linear-form factors of the three sine blocks.
  const std::array<GoldenForm, 3> factors = {
      sf.form(2, 2).scaled(p.v[5]) + sf.form(1, 1).scaled(p.v[6]),
      sf.form(0, 2).scaled(p.v[7]) + sf.form(2, 1).scaled(p.v[8]),
      sf.form(1, 2).scaled(p.v[9]) + sf.form(0, 1).scaled(p.v[10])};
  const std::array<GoldenNumber, 3> constants = {p.v[2], p.v[3], p.v[4]};

  GoldenTrig g = axis_sin(1, gvar(2, p.v[0]));
  g += axis_sin(2, gvar(1, p.v[1]));
  for (int w = 0; w < 3; ++w) {
    const auto& order = kBlockOrder[static_cast<size_t>(w)];
    for (int i = 0; i < 4; ++i) {
      const GoldenForm& arg = sf.form(w, order[static_cast<size_t>(i)]);
      const GoldenNumber c =
          constants[static_cast<size_t>(w)] * gn(kCosSigns[static_cast<size_t>(i)]);
      if (!c.is_zero()) g += GoldenTrig::cos(arg).scaled(c);
      GoldenPoly flipped =
          factors[static_cast<size_t>(w)].sign_flipped(kFlips[static_cast<size_t>(i)]).as_polynomial();
      if (kSinSigns[static_cast<size_t>(i)] < 0) flipped = -flipped;
      g += GoldenTrig::sin(arg).scaled(flipped);
    }
  }

  const GoldenField f = cyclic_field(g);
  for (const auto& signs : {diagonal_rows(-1, -1, 1), diagonal_rows(-1, 1, -1),
                            diagonal_rows(1, -1, -1)}) {
    if (!(f.conjugated(signs) == f)) {
      throw std::logic_error("build_ansatz: Klein invariance violated");
    }
  }
  return g;
}

GoldenField cyclic_field(const GoldenTrig& first_component) {
  if (first_component.dimension() != 3) {
    throw std::invalid_argument("cyclic_field: requires dimension 3");
  }
  return GoldenField({first_component, first_component.variables_permuted({1, 2, 0}),
                      first_component.variables_permuted({2, 0, 1})});
}

const char* constraint_stage_name(ConstraintStage stage) {
  switch (stage) {
    case ConstraintStage::initial: return "initial";
    case ConstraintStage::taylor_match: return "taylor_match";
    case ConstraintStage::divergence_zero: return "divergence_zero";
    case ConstraintStage::gamma_invariance: return "gamma_invariance";
  }
  throw std::invalid_argument("constraint_stage_name: unknown stage");
}

bool AnsatzSpace::contains(const AnsatzParams& p) const {
  for (size_t r = 0; r < equations.row_count(); ++r) {
    GoldenNumber acc = gn(0);
    for (size_t c = 0; c < 11; ++c) acc += equations.a[r][c] * p.v[c];
    if (!(acc == equations.b[r])) return false;
  }
  return true;
}

AnsatzSpace initial_ansatz_space() {
  AnsatzSpace out;
  out.stage = ConstraintStage::initial;
  out.solution.consistent = true;
  out.solution.particular.assign(11, gn(0));
  for (size_t i = 0; i < 11; ++i) {
    std::vector<GoldenNumber> dir(11, gn(0));
    dir[i] = gn(1);
    out.solution.basis.push_back(std::move(dir));
    out.solution.free_columns.push_back(i);
  }
  return out;
}

AnsatzSpace constraint_stage(const AnsatzSpace& space, ConstraintStage next) {
  const auto expected = [&]() -> ConstraintStage {
    switch (space.stage) {
      case ConstraintStage::initial: return ConstraintStage::taylor_match;
      case ConstraintStage::taylor_match: return ConstraintStage::divergence_zero;
      case ConstraintStage::divergence_zero: return ConstraintStage::gamma_invariance;
      case ConstraintStage::gamma_invariance: break;
    }
    throw std::invalid_argument("constraint_stage: no stage follows gamma_invariance");
  }();
  if (next != expected) {
    throw std::invalid_argument(std::string("constraint_stage: expected stage ") +
                                constraint_stage_name(expected) + ", got " +
                                constraint_stage_name(next));
  }
  LinearSystemG equations = space.equations;
  switch (next) {
    case ConstraintStage::taylor_match: append_taylor_match_rows(equations); break;
    case ConstraintStage::divergence_zero: append_divergence_rows(equations); break;
    case ConstraintStage::gamma_invariance: append_gamma_rows(equations); break;
    case ConstraintStage::initial: break;
  }
  return solved_space(next, std::move(equations));
}

AnsatzSpace full_pipeline() {
  AnsatzSpace space = initial_ansatz_space();
  space = constraint_stage(space, ConstraintStage::taylor_match);
  space = constraint_stage(space, ConstraintStage::divergence_zero);
  space = constraint_stage(space, ConstraintStage::gamma_invariance);
  return space;
}

AnsatzParams params_with_leading(const AnsatzSpace& space, const GoldenNumber& a_value) {
  if (!space.solution.consistent || space.dimension() != 1) {
    throw std::invalid_argument("params_with_leading: space is not a line");
  }
  const auto& dir = space.solution.basis.front();
  const auto& base = space.solution.particular;
  if (dir[0].is_zero()) {
    throw std::invalid_argument("params_with_leading: first coefficient is not free");
  }
  const GoldenNumber t = (a_value - base[0]) / dir[0];
  AnsatzParams out;
  for (size_t i = 0; i < 11; ++i) out.v[i] = base[i] + t * dir[i];
  return out;
}

AnsatzSpace icosahedral_solution_space() {
  LinearSystemG equations;
  append_divergence_rows(equations);
  append_gamma_rows(equations);
  return solved_space(ConstraintStage::gamma_invariance, std::move(equations));
}

AnsatzSpace constants_only_solution_space() {
  LinearSystemG equations;
  for (const size_t pinned : {0ul, 1ul, 5ul, 6ul, 7ul, 8ul, 9ul, 10ul}) {
    std::vector<GoldenNumber> row(11, gn(0));
    row[pinned] = gn(1);
    equations.add_row(std::move(row), gn(0));
  }
  append_divergence_rows(equations);
  append_gamma_rows(equations);
  return solved_space(ConstraintStage::gamma_invariance, std::move(equations));
}

GoldenPoly canonical_head() {
  return head_poly({{{{0, 1, 5}}, gn(5, -1)},
                    {{{0, 5, 1}}, gn(5, 1)},
                    {{{0, 3, 3}}, gn(-20)},
                    {{{2, 1, 3}}, gn(10, 10)},
                    {{{2, 3, 1}}, gn(10, -10)},
                    {{{4, 1, 1}}, gn(-10)}});
}

std::array<GoldenPoly, 3> poly_curl(const std::array<GoldenPoly, 3>& f) {
  return {f[2].derivative(1) - f[1].derivative(2), f[0].derivative(2) - f[2].derivative(0),
          f[1].derivative(0) - f[0].derivative(1)};
}

GoldenField polynomial_field(const std::array<GoldenPoly, 3>& f) {
  return GoldenField({GoldenTrig::from_polynomial(f[0]), GoldenTrig::from_polynomial(f[1]),
                      GoldenTrig::from_polynomial(f[2])});
}

GoldenField abc_flow(const GoldenNumber& A, const GoldenNumber& B, const GoldenNumber& C) {
  const auto axis = [](int i) {
    GoldenForm f(3);
    f.set_coefficient(i, gn(1));
    return f;
  };
  GoldenTrig c0 = GoldenTrig::sin(axis(2)).scaled(A) + GoldenTrig::cos(axis(1)).scaled(C);
  GoldenTrig c1 = GoldenTrig::sin(axis(0)).scaled(B) + GoldenTrig::cos(axis(2)).scaled(A);
  GoldenTrig c2 = GoldenTrig::sin(axis(1)).scaled(C) + GoldenTrig::cos(axis(0)).scaled(B);
  return GoldenField({std::move(c0), std::move(c1), std::move(c2)});
}

const FieldCatalog& catalog() {
  static const FieldCatalog cat = build_catalog();
  return cat;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"V",  "W", "I",   "V0",         "W0",
                                                 "Y",  "M", "N",   "P",          "Q",
                                                 "D",  "ABC",      "B_sasakian", "F_averaged"};
  return names;
}

std::optional<GoldenField> catalog_trig_entry(const std::string& name) {
  const FieldCatalog& cat = catalog();
  if (name == "V") return cat.V;
  if (name == "W") return cat.W;
  if (name == "I") return cat.I;
  if (name == "V0") return cat.V0;
  if (name == "W0") return cat.W0;
  if (name == "Y") return cat.Y;
  if (name == "ABC") return cat.ABC;
  if (name == "M") return polynomial_field(cat.M);
  if (name == "N") return polynomial_field(cat.N);
  if (name == "P") return polynomial_field(cat.P);
  if (name == "Q") return polynomial_field(cat.Q);
  return std::nullopt;
}

}  // namespace beltrami
