#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "beltrami/quadratic.hpp"

namespace beltrami {

// Column vector in Q(sqrt5)^3.
struct Vec3G {
  std::array<GoldenNumber, 3> v{GoldenNumber(0L), GoldenNumber(0L), GoldenNumber(0L)};

  Vec3G() = default;
  Vec3G(GoldenNumber a, GoldenNumber b, GoldenNumber c) : v{std::move(a), std::move(b), std::move(c)} {}

  const GoldenNumber& operator[](size_t i) const { return v.at(i); }
  GoldenNumber& operator[](size_t i) { return v.at(i); }

  bool is_zero() const { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

  Vec3G operator-() const { return {-v[0], -v[1], -v[2]}; }
  friend Vec3G operator+(const Vec3G& a, const Vec3G& b) {
    return {a.v[0] + b.v[0], a.v[1] + b.v[1], a.v[2] + b.v[2]};
  }
  friend Vec3G operator-(const Vec3G& a, const Vec3G& b) {
    return {a.v[0] - b.v[0], a.v[1] - b.v[1], a.v[2] - b.v[2]};
  }
  Vec3G scaled(const GoldenNumber& f) const { return {v[0] * f, v[1] * f, v[2] * f}; }

  GoldenNumber dot(const Vec3G& o) const {
    return v[0] * o.v[0] + v[1] * o.v[1] + v[2] * o.v[2];
  }
  GoldenNumber norm_squared() const { return dot(*this); }

  bool operator==(const Vec3G& o) const = default;
  std::strong_ordering operator<=>(const Vec3G& o) const {
    for (size_t i = 0; i < 3; ++i) {
      const auto c = v[i] <=> o.v[i];
      if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
  }

  std::string str() const { return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ")"; }
};

// 3x3 matrix over Q(sqrt5), stored by rows.
struct Mat3G {
  std::array<std::array<GoldenNumber, 3>, 3> m{};

  static Mat3G identity();
  static Mat3G diagonal(long a, long b, long c);
  static Mat3G from_rows(const Vec3G& r0, const Vec3G& r1, const Vec3G& r2);

  const GoldenNumber& at(size_t row, size_t col) const { return m.at(row).at(col); }
  GoldenNumber& at(size_t row, size_t col) { return m.at(row).at(col); }

  Mat3G operator*(const Mat3G& o) const;
  Vec3G operator*(const Vec3G& x) const;
  Mat3G operator-() const;

  Mat3G transposed() const;
  GoldenNumber determinant() const;
  Mat3G inverse() const;  // throws std::domain_error when singular

  bool is_orthogonal() const;
  bool is_special_orthogonal() const;

  // Rows as nested vectors, the substitution format of the expression layer.
  std::vector<std::vector<GoldenNumber>> rows() const;

  bool all_entries_rational() const;

  bool operator==(const Mat3G& o) const = default;
  std::strong_ordering operator<=>(const Mat3G& o) const;

  std::string str() const;
};

// Finite matrix group with a deterministic element order (lexicographic on
// entries); elements[0] is the identity only by coincidence of that order.
struct MatrixGroup {
  std::vector<Mat3G> elements;   // sorted, unique
  std::vector<Mat3G> generators;

  size_t order() const { return elements.size(); }
  bool contains(const Mat3G& g) const;
};

// BFS closure of the generators. Throws std::runtime_error if the closure
// exceeds order_cap (guards against non-terminating generator sets).
MatrixGroup generate_group(const std::vector<Mat3G>& generators, size_t order_cap = 360);

// Generators alpha (rotation by pi about z), beta (cyclic coordinate
// rotation), gamma (an order-5 rotation completing the icosahedral triple).
Mat3G rotation_alpha();
Mat3G rotation_beta();
Mat3G rotation_gamma();

// Order 60 icosahedral rotation group.
MatrixGroup icosahedral_group();
// Order 12 tetrahedral subgroup generated by alpha and beta.
MatrixGroup tetrahedral_group();
// Order 4 subgroup {I, diag(-1,-1,1), diag(-1,1,-1), diag(1,-1,-1)}.
MatrixGroup klein_group();

// Dense linear system A x = b over Q(sqrt5).
struct LinearSystemG {
  std::vector<std::vector<GoldenNumber>> a;  // m rows, n columns
  std::vector<GoldenNumber> b;               // m entries

  size_t row_count() const { return a.size(); }
  size_t column_count() const { return a.empty() ? 0 : a.front().size(); }
  void add_row(std::vector<GoldenNumber> row, GoldenNumber rhs);
};

// Affine solution set x = particular + span(basis). Pivots are chosen in
// fixed order: columns left to right, first row with a nonzero entry. Basis
// vectors carry the 0/1 pattern on free coordinates.
struct AffineSolution {
  bool consistent = false;
  std::vector<GoldenNumber> particular;
  std::vector<std::vector<GoldenNumber>> basis;
  std::vector<size_t> pivot_columns;
  std::vector<size_t> free_columns;

  size_t dimension() const { return basis.size(); }
};

AffineSolution solve_linear(const LinearSystemG& system);

// Canonical representative of a signed direction: scaled by the unique
// positive factor making the leading nonzero coordinate +1 or -1.
Vec3G canonical_direction(const Vec3G& d);

// Orbit of the signed direction of seed under the group, as sorted canonical
// directions. Antipodal directions count separately, so the icosahedral
// orbits of (phi,1,0), (1,1,1), (1,0,0) have sizes 12, 20, 30.
std::vector<Vec3G> orbit_of_line(const MatrixGroup& group, const Vec3G& seed);

}  // namespace beltrami
