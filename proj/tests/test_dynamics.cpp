#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "beltrami/dynamics.hpp"

namespace {

using namespace beltrami;

// Roots frozen from an independent fine-grained oracle run (scan step 1e-4
// with bisection); see the scan tests below for the coarse-grid agreement.
const std::vector<double> kFaceRoots{5.162596794430,  7.009533219981,  12.111392972331,
                                     13.861654049368, 17.518052806555, 19.132055586575};
const std::vector<double> kVertexRoots{9.070375868374, 10.887298930419, 19.879095146132};
const std::vector<double> kEdgeRoots{8.565953523047, 15.194686002510};

double norm_inf(const NumericPoint& a, const NumericPoint& b) {
  double out = 0.0;
  for (size_t i = 0; i < a.size(); ++i) out = std::max(out, std::abs(a[i] - b[i]));
  return out;
}

void check_roots(const std::vector<double>& got, const std::vector<double>& expected,
                 double tol) {
  REQUIRE(got.size() == expected.size());
  for (size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - expected[i]) < tol);
}

}  // namespace

TEST_CASE("scalar amplitude on the distinguished line") {
  const double phi = golden_ratio().to_double();

  // The factor has a quadruple zero at the origin; at 0 it vanishes exactly
  // because phi - 1/phi = 1 holds in double precision.
  CHECK(upsilon_factor(0.0) == 0.0);
  CHECK(upsilon(0.0) == 0.0);

  // First positive root at 5.1625967944 within 1e-9; the frozen tail values.
  const LineZeroReport report = upsilon_roots(1e-2, 20.0, 1e-2);
  check_roots(report.roots, kFaceRoots, 1e-9);
  CHECK(std::abs(report.roots[0] - 5.1625967944) < 1e-9);
  CHECK(report.brackets.size() == report.roots.size());
  for (size_t i = 0; i < report.roots.size(); ++i) {
    CHECK(report.brackets[i].first <= report.roots[i]);
    CHECK(report.roots[i] <= report.brackets[i].second);
  }

  // The exact symbolic restriction: I on s*(phi,1,0) is (phi*Y(s), Y(s), 0).
  const std::vector<GoldenNumber> dir{golden_ratio(), gn(1), gn(0)};
  const auto restricted = catalog().I.restricted_to_line(dir);
  CHECK(restricted[2].is_zero());
  CHECK(restricted[0] == restricted[1].scaled(golden_ratio()));
  for (double s : {0.7, 2.3, 5.0}) {
    CHECK(restricted[1].evaluated({s}) == doctest::Approx(upsilon(s)).epsilon(1e-12));
  }

  // The whole field vanishes there: |I| at the root point is tiny.
  const NumericPoint zero_point{phi * report.roots[0], report.roots[0], 0.0};
  const NumericPoint v = eval_field(catalog().I, zero_point);
  CHECK(std::hypot(v[0], v[1], v[2]) < 1e-8);
}

TEST_CASE("field evaluation") {
  const GoldenField& field_i = catalog().I;
  const NumericPoint at_origin = eval_field(field_i, {0.0, 0.0, 0.0});
  CHECK(at_origin == NumericPoint{0.0, 0.0, 0.0});

  // The compiled form matches the expression evaluator.
  const CompiledField compiled(field_i);
  CHECK(compiled.dimension() == 3);
  for (const NumericPoint p : {NumericPoint{1.0, 2.0, 3.0}, NumericPoint{-0.3, 0.9, 2.2}}) {
    const NumericPoint a = compiled.eval(p);
    const NumericPoint b = field_i.evaluated(p);
    for (size_t j = 0; j < 3; ++j) CHECK(a[j] == doctest::Approx(b[j]).epsilon(1e-13));
  }

  CHECK_THROWS_AS(eval_field(field_i, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(eval_field(field_i, {1.0, std::nan(""), 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(compiled.eval({1.0}), std::invalid_argument);
}

TEST_CASE("orbit integration basics") {
  const CompiledField v(catalog().I);
  const OrbitRecord rec = rk4_orbit(v, {5.0, 6.0, 7.0}, 0.1, 1e-3);

  CHECK(rec.integrator == "rk4");
  CHECK_FALSE(rec.overflow);
  CHECK(rec.initial == NumericPoint{5.0, 6.0, 7.0});
  REQUIRE(rec.samples.size() == 101);
  CHECK(rec.samples.front().t == 0.0);
  CHECK(rec.samples.front().x == rec.initial);
  CHECK(rec.samples.back().t == 0.1);
  for (size_t i = 1; i < rec.samples.size(); ++i) {
    CHECK(rec.samples[i].t > rec.samples[i - 1].t);
  }

  // A partial final step lands exactly on t_end.
  const OrbitRecord partial = rk4_orbit(v, {5.0, 6.0, 7.0}, 0.0025, 1e-3);
  CHECK(partial.samples.back().t == 0.0025);
  CHECK(partial.samples.size() == 4);

  CHECK_THROWS_AS(rk4_orbit(v, {5.0, 6.0, 7.0}, -1.0, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(rk4_orbit(v, {5.0, 6.0, 7.0}, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(rk4_orbit(v, {5.0, 6.0}, 1.0, 1e-3), std::invalid_argument);
}

TEST_CASE("orbit accuracy against a refined reference") {
  const CompiledField v(catalog().I);
  const NumericPoint x0{5.0, 6.0, 7.0};

  const NumericPoint ref = rk4_orbit(v, x0, 1.0, 1e-5).samples.back().x;
  const NumericPoint end_coarse = rk4_orbit(v, x0, 1.0, 1e-3).samples.back().x;
  const NumericPoint end_half = rk4_orbit(v, x0, 1.0, 5e-4).samples.back().x;
  const NumericPoint end_fine = rk4_orbit(v, x0, 1.0, 1e-4).samples.back().x;

  // The h = 1e-4 endpoint matches the h/100 reference to 1e-6.
  CHECK(norm_inf(end_fine, ref) < 1e-6);

  // Halving the step cuts the error by about 2^4.
  const double e1 = norm_inf(end_coarse, ref);
  const double e2 = norm_inf(end_half, ref);
  const double ratio = e1 / e2;
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
  const double order = std::log2(ratio);
  CHECK(order > 3.8);
  CHECK(order < 4.2);
}

TEST_CASE("equilibrium points stay put") {
  const double phi = golden_ratio().to_double();
  const double s0 = upsilon_roots(5.0, 5.5, 1e-2).roots.at(0);
  const NumericPoint x0{phi * s0, s0, 0.0};

  // The zero is hyperbolic, so double-precision drift compounds at the local
  // e-folding rate; a quarter time unit keeps the bound comfortably honest.
  const OrbitRecord rec = rk4_orbit(catalog().I, x0, 0.25, 1e-3);
  for (const OrbitSample& sample : rec.samples) {
    CHECK(norm_inf(sample.x, x0) < 1e-8);
  }
}

TEST_CASE("overflow is flagged and truncated") {
  // dx/dt = x^2 blows up in finite time t = 1/x(0).
  const GoldenPoly x2 = GoldenPoly::monomial(3, {2, 0, 0}, gn(1));
  const GoldenPoly y2 = GoldenPoly::monomial(3, {0, 2, 0}, gn(1));
  const GoldenPoly z2 = GoldenPoly::monomial(3, {0, 0, 2}, gn(1));
  const CompiledField v(polynomial_field({x2, y2, z2}));

  const OrbitRecord rec = rk4_orbit(v, {1.0, 1.0, 1.0}, 2.0, 1e-3);
  CHECK(rec.overflow);
  CHECK(rec.samples.size() < 2001);
  for (const OrbitSample& sample : rec.samples) CHECK(point_is_finite(sample.x));
}

TEST_CASE("root scanning") {
  // Exact grid hits are recorded directly.
  const RootScan line = scan_roots([](double s) { return s - 2.0; }, 1.0, 3.0, 0.5);
  REQUIRE(line.roots.size() == 1);
  CHECK(line.roots[0] == 2.0);
  CHECK(line.brackets[0] == std::pair<double, double>{2.0, 2.0});

  // Sign changes refine to 1e-12 brackets.
  const RootScan cosine = scan_roots([](double s) { return std::cos(s); }, 0.0, 3.0, 0.1);
  REQUIRE(cosine.roots.size() == 1);
  CHECK(std::abs(cosine.roots[0] - 1.5707963267948966) < 1e-11);

  // No sign change, no roots: the factor is positive on [0.5, 1].
  CHECK(scan_roots([](double s) { return upsilon_factor(s); }, 0.5, 1.0, 1e-2).roots.empty());

  CHECK_THROWS_AS(scan_roots([](double s) { return s; }, 1.0, 1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(scan_roots([](double s) { return s; }, 0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("zero maps across the three line classes") {
  CHECK(line_class_name(LineClass::F) == std::string("F"));
  CHECK(line_class_representative(LineClass::E) == Vec3G{gn(1), gn(0), gn(0)});

  const GoldenField& field = catalog().I;
  const auto faces = line_zero_map(field, LineClass::F, 20.0);
  const auto vertices = line_zero_map(field, LineClass::V, 20.0);
  const auto edges = line_zero_map(field, LineClass::E, 20.0);

  CHECK(faces.size() == 12);
  CHECK(vertices.size() == 20);
  CHECK(edges.size() == 30);

  check_roots(faces.front().roots, kFaceRoots, 1e-9);
  check_roots(vertices.front().roots, kVertexRoots, 1e-9);
  check_roots(edges.front().roots, kEdgeRoots, 1e-9);

  // Every orbit line reports the same representative-parameter roots, and
  // directions are pairwise distinct.
  for (const auto& report : faces) {
    CHECK(report.roots == faces.front().roots);
    CHECK(report.line_class == LineClass::F);
  }
  for (size_t i = 1; i < edges.size(); ++i) CHECK(edges[i - 1].direction < edges[i].direction);

  CHECK_THROWS_AS(line_zero_map(field, LineClass::F, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(line_zero_map(field, LineClass::F, 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("line amplitude agrees with the projected field") {
  const GoldenField& field = catalog().I;
  const Vec3G rep = line_class_representative(LineClass::F);
  const CompiledLineFunction f(field, rep);
  const double phi = golden_ratio().to_double();

  // On the face line, <I(s*d), d> = (phi^2 + 1) * upsilon(s).
  for (double s : {0.5, 1.7, 4.2, 6.0}) {
    CHECK(f(s) == doctest::Approx((phi * phi + 1.0) * upsilon(s)).epsilon(1e-10));
  }

  // The E-class restriction is exactly collinear with the axis: off-axis
  // components vanish symbolically.
  const auto on_edge = field.restricted_to_line({gn(1), gn(0), gn(0)});
  CHECK(on_edge[1].is_zero());
  CHECK(on_edge[2].is_zero());
  CHECK_FALSE(on_edge[0].is_zero());
}

TEST_CASE("ratio probe along the Fibonacci sequence") {
  const double phi = golden_ratio().to_double();
  const double target = 2.0 * std::sqrt(5.0) / phi;  // = 5 - sqrt(5)

  const auto samples = limsup_probe({1, 2, 3, 4, 5, 6, 7, 8, 20, 30});
  REQUIRE(samples.size() == 10);

  // Monotone approach from below at the probe points: n = 3 beats n = 2, the
  // n = 8 sample is within 0.05, and nothing ever exceeds the supremum.
  CHECK(std::abs(samples[2].ratio - target) < std::abs(samples[1].ratio - target));
  CHECK(std::abs(samples[7].ratio - target) < 0.05);
  for (const auto& sample : samples) {
    CHECK(sample.ratio <= target + 1e-6);
    CHECK(sample.s == doctest::Approx(3.141592653589793 * std::round(sample.s / 3.141592653589793)));
  }
  CHECK(samples[9].n == 30);

  CHECK_THROWS_AS(limsup_probe({0}), std::invalid_argument);
  CHECK_THROWS_AS(limsup_probe({31}), std::invalid_argument);
}
