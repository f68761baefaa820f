#pragma once

#include <array>
#include <string>
#include <vector>

#include "beltrami/linalg.hpp"
#include "beltrami/ratfunc.hpp"
#include "beltrami/trigexpr.hpp"
#include "beltrami/vector_field.hpp"

namespace beltrami {

using GoldenPoly = Polynomial<GoldenNumber>;
using GoldenForm = LinearForm<GoldenNumber>;
using GoldenTrig = TrigExpr<GoldenNumber>;
using GoldenField = VectorFieldExpr<GoldenNumber>;
using DihedralPoly = Polynomial<RootThreeNumber>;
using DihedralField = VectorFieldExpr<RootThreeNumber>;

// Twelve unit linear forms l[w][a] (family w = 0,1,2 for x,y,z; index
// a = 0..3) whose coefficient vectors are unit length and closed under
// cyclic coordinate shifts, plus the three coordinate forms. Family x:
//   l[0][0] =  x/2 + phi*y/2 + z/(2 phi),   l[0][a>0] flips the sign of
// coordinate a-1. Families y and z cyclically shift the coefficients.
struct SymmetryForms {
  std::array<std::array<GoldenForm, 4>, 3> family;
  std::array<GoldenForm, 3> axis;

  const GoldenForm& form(int family_index, int a) const {
    return family.at(static_cast<size_t>(family_index)).at(static_cast<size_t>(a));
  }
  Vec3G direction(int family_index, int a) const {
    const auto& c = form(family_index, a).coefficients();
    return Vec3G{c[0], c[1], c[2]};
  }
};

const SymmetryForms& symmetry_forms();

// The eleven free coefficients of the trigonometric ansatz, in the fixed
// order a,b,c,d,e,f,g,h,i,j,k.
struct AnsatzParams {
  std::array<GoldenNumber, 11> v{};

  static AnsatzParams zero() { return {}; }
  static AnsatzParams unit(size_t index);

  // Coefficients reproducing the x-component of the even curl-eigenfield
  // half V: (1, 1, 0, 0, 0, phi^{-1}/2, -phi/2, phi/2, 1/2, -1/2, phi^{-1}/2).
  static AnsatzParams even_field_params();
  // Twice that: the solution normalized so the degree-6 Taylor head carries
  // denominator 384.
  static AnsatzParams double_scale_params();
  // Coefficients reproducing the x-component of the higher-order even field
  // V0: (-2 phi^{-1}, 2 phi, 0, 0, 0, -phi^{-2}, -phi^2, -1, phi, phi^{-1}, 1).
  static AnsatzParams higher_order_params();

  bool operator==(const AnsatzParams&) const = default;
};

extern const std::array<const char*, 11> kAnsatzParamNames;

// The Klein-invariant ansatz: a z sin y + b y sin z, three blocks of cosines
// with constant coefficients c, d, e, and three blocks of sines with linear
// polynomial coefficients built from K = f l[2][2] + g l[1][1],
// L = h l[0][2] + i l[2][1], M = j l[1][2] + k l[0][1]. Asserts Klein
// invariance of the cyclic field (throws std::logic_error on failure).
GoldenTrig build_ansatz(const AnsatzParams& p);

// (g(x,y,z), g(y,z,x), g(z,x,y)).
GoldenField cyclic_field(const GoldenTrig& first_component);

enum class ConstraintStage { initial, taylor_match, divergence_zero, gamma_invariance };

const char* constraint_stage_name(ConstraintStage stage);

// Affine space of ansatz coefficient vectors surviving the constraints
// accumulated so far. Columns are the eleven coefficients in fixed order.
struct AnsatzSpace {
  ConstraintStage stage = ConstraintStage::initial;
  LinearSystemG equations;
  AffineSolution solution;

  size_t dimension() const { return solution.dimension(); }
  bool contains(const AnsatzParams& p) const;
};

AnsatzSpace initial_ansatz_space();

// Applies the next constraint stage. Stages must be applied in order
// taylor_match -> divergence_zero -> gamma_invariance; the taylor_match
// stage pins the degree-6 Taylor coefficient of the ansatz to the canonical
// head (denominator-free scaling) and kills all lower degrees; the others
// are homogeneous. Throws std::invalid_argument on an out-of-order stage and
// std::runtime_error if the accumulated system turns inconsistent.
AnsatzSpace constraint_stage(const AnsatzSpace& space, ConstraintStage next);

// All three stages in order; result has dimension 1 with free coefficient a.
AnsatzSpace full_pipeline();

// The point of a one-dimensional space with prescribed first coefficient.
AnsatzParams params_with_leading(const AnsatzSpace& space, const GoldenNumber& a_value);

// Homogeneous problem: coefficient vectors whose cyclic field is
// divergence-free and invariant under the full order-60 rotation group
// (every ansatz member satisfies the componentwise Helmholtz equation by
// construction). Dimension 2; contains both named solutions.
AnsatzSpace icosahedral_solution_space();

// Same homogeneous problem restricted to the constant-coefficient cosine
// blocks (a = b = f = g = h = i = j = k = 0). Dimension 0.
AnsatzSpace constants_only_solution_space();

// Degree-6 Taylor head of the ansatz at double_scale_params; entries carry
// integer and integer-multiple-of-sqrt(5) coefficients.
GoldenPoly canonical_head();

// Componentwise curl of a polynomial vector field.
std::array<GoldenPoly, 3> poly_curl(const std::array<GoldenPoly, 3>& f);

// Wraps a polynomial triple as a trig vector field (all terms of kind One).
GoldenField polynomial_field(const std::array<GoldenPoly, 3>& f);

// Beltrami unit-coefficient trigonometric flow
// (A sin z + C cos y, B sin x + A cos z, C sin y + B cos x); curl equals the
// field itself for every coefficient choice.
GoldenField abc_flow(const GoldenNumber& A, const GoldenNumber& B, const GoldenNumber& C);

// Catalog of the named fields, each built from first principles and
// cross-checked against an independently entered closed form.
//   V, W   : even/odd halves of the curl eigenfield I = V + W, curl V = W,
//            curl W = V, curl I = I.
//   V0, W0 : higher-order pair, W0 = curl V0; Y = V0 + W0, curl Y = Y.
//   M, N   : Taylor heads, taylor(V,6) = M/768, taylor(W,5) = N/768.
//   P, Q   : taylor(V0,10) = P/23224320, Q = curl P = 23224320*taylor(W0,9).
//   D      : planar field with six-fold dihedral symmetry, Laplacian -D,
//            divergence 0, over the field extended by sqrt(3).
//   ABC    : abc_flow(1,1,1).
//   B_sasakian : rational Beltrami field with curl B = |B| B.
//   F_averaged : cyclic average of B_sasakian, curl F = 4/(1+r^2) F.
struct FieldCatalog {
  GoldenField V{3}, W{3}, I{3}, V0{3}, W0{3}, Y{3};
  std::array<GoldenPoly, 3> M, N, P, Q;
  DihedralField D{2};
  GoldenField ABC{3};
  RationalVectorField B_sasakian, F_averaged;
};

// Built and verified once; throws std::logic_error naming the entry and the
// violated predicate if any cross-check fails.
const FieldCatalog& catalog();

const std::vector<std::string>& catalog_names();

// Catalog entries evaluable as 3-dimensional trig fields (M, N, P, Q are
// wrapped as polynomial fields); nullopt for D and the rational-function
// entries, and for names outside the catalog.
std::optional<GoldenField> catalog_trig_entry(const std::string& name);

}  // namespace beltrami
