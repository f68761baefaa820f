#include "beltrami/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace beltrami {

Mat3G Mat3G::identity() { return diagonal(1, 1, 1); }

Mat3G Mat3G::diagonal(long a, long b, long c) {
  Mat3G out;
  for (auto& row : out.m) row.fill(GoldenNumber(0L));
  out.m[0][0] = GoldenNumber(a);
  out.m[1][1] = GoldenNumber(b);
  out.m[2][2] = GoldenNumber(c);
  return out;
}

Mat3G Mat3G::from_rows(const Vec3G& r0, const Vec3G& r1, const Vec3G& r2) {
  Mat3G out;
  for (size_t j = 0; j < 3; ++j) {
    out.m[0][j] = r0[j];
    out.m[1][j] = r1[j];
    out.m[2][j] = r2[j];
  }
  return out;
}

Mat3G Mat3G::operator*(const Mat3G& o) const {
  Mat3G out;
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) {
      GoldenNumber acc(0L);
      for (size_t k = 0; k < 3; ++k) acc += m[i][k] * o.m[k][j];
      out.m[i][j] = std::move(acc);
    }
  }
  return out;
}

Vec3G Mat3G::operator*(const Vec3G& x) const {
  Vec3G out;
  for (size_t i = 0; i < 3; ++i) {
    GoldenNumber acc(0L);
    for (size_t k = 0; k < 3; ++k) acc += m[i][k] * x[k];
    out[i] = std::move(acc);
  }
  return out;
}

Mat3G Mat3G::operator-() const {
  Mat3G out;
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) out.m[i][j] = -m[i][j];
  }
  return out;
}

Mat3G Mat3G::transposed() const {
  Mat3G out;
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) out.m[i][j] = m[j][i];
  }
  return out;
}

GoldenNumber Mat3G::determinant() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3G Mat3G::inverse() const {
  const GoldenNumber det = determinant();
  if (det.is_zero()) throw std::domain_error("Mat3G::inverse: singular matrix");
  const GoldenNumber inv_det = det.inverse();
  Mat3G adj;
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) {
      const size_t r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      const size_t c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // Cofactor transpose: entry (j, i) of the cofactor matrix.
      adj.m[j][i] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) * inv_det;
    }
  }
  return adj;
}

bool Mat3G::is_orthogonal() const { return transposed() * *this == identity(); }

bool Mat3G::is_special_orthogonal() const {
  return is_orthogonal() && determinant() == GoldenNumber(1L);
}

std::vector<std::vector<GoldenNumber>> Mat3G::rows() const {
  std::vector<std::vector<GoldenNumber>> out(3, std::vector<GoldenNumber>(3, GoldenNumber(0L)));
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) out[i][j] = m[i][j];
  }
  return out;
}

bool Mat3G::all_entries_rational() const {
  for (const auto& row : m) {
    for (const auto& e : row) {
      if (!e.is_rational()) return false;
    }
  }
  return true;
}

std::strong_ordering Mat3G::operator<=>(const Mat3G& o) const {
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) {
      const auto c = m[i][j] <=> o.m[i][j];
      if (c != std::strong_ordering::equal) return c;
    }
  }
  return std::strong_ordering::equal;
}

std::string Mat3G::str() const {
  std::string out = "[";
  for (size_t i = 0; i < 3; ++i) {
    out += "[" + m[i][0].str() + ", " + m[i][1].str() + ", " + m[i][2].str() + "]";
    if (i < 2) out += ", ";
  }
  return out + "]";
}

bool MatrixGroup::contains(const Mat3G& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

MatrixGroup generate_group(const std::vector<Mat3G>& generators, size_t order_cap) {
  std::set<Mat3G> seen;
  std::vector<Mat3G> frontier;
  seen.insert(Mat3G::identity());
  frontier.push_back(Mat3G::identity());
  while (!frontier.empty()) {
    std::vector<Mat3G> next;
    for (const auto& g : frontier) {
      for (const auto& h : generators) {
        Mat3G gh = g * h;
        if (seen.insert(gh).second) {
          if (seen.size() > order_cap) {
            throw std::runtime_error("generate_group: closure exceeds order cap");
          }
          next.push_back(std::move(gh));
        }
      }
    }
    frontier = std::move(next);
  }
  MatrixGroup out;
  out.elements.assign(seen.begin(), seen.end());
  out.generators = generators;
  return out;
}

Mat3G rotation_alpha() { return Mat3G::diagonal(-1, -1, 1); }

Mat3G rotation_beta() {
  Mat3G out = Mat3G::diagonal(0, 0, 0);
  out.m[0][2] = GoldenNumber(1L);
  out.m[1][0] = GoldenNumber(1L);
  out.m[2][1] = GoldenNumber(1L);
  return out;
}

Mat3G rotation_gamma() {
  const GoldenNumber half(Rational(1, 2));
  const GoldenNumber phi_half = golden_ratio() * half;
  const GoldenNumber inv_phi_half = golden_ratio_inverse() * half;
  return Mat3G::from_rows(Vec3G(half, -phi_half, inv_phi_half),
                          Vec3G(phi_half, inv_phi_half, -half),
                          Vec3G(inv_phi_half, half, phi_half));
}

MatrixGroup icosahedral_group() {
  return generate_group({rotation_alpha(), rotation_beta(), rotation_gamma()}, 120);
}

MatrixGroup tetrahedral_group() {
  return generate_group({rotation_alpha(), rotation_beta()}, 120);
}

MatrixGroup klein_group() {
  MatrixGroup out = generate_group({Mat3G::diagonal(-1, -1, 1), Mat3G::diagonal(-1, 1, -1)}, 8);
  return out;
}

void LinearSystemG::add_row(std::vector<GoldenNumber> row, GoldenNumber rhs) {
  if (!a.empty() && row.size() != a.front().size()) {
    throw std::invalid_argument("LinearSystemG::add_row: column count mismatch");
  }
  a.push_back(std::move(row));
  b.push_back(std::move(rhs));
}

AffineSolution solve_linear(const LinearSystemG& system) {
  const size_t m = system.row_count();
  const size_t n = system.column_count();
  std::vector<std::vector<GoldenNumber>> a = system.a;
  std::vector<GoldenNumber> b = system.b;
  if (b.size() != m) throw std::invalid_argument("solve_linear: rhs size mismatch");

  std::vector<size_t> pivot_cols;
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < m; ++col) {
    size_t pivot = rank;
    while (pivot < m && a[pivot][col].is_zero()) ++pivot;
    if (pivot == m) continue;
    std::swap(a[pivot], a[rank]);
    std::swap(b[pivot], b[rank]);
    const GoldenNumber inv = a[rank][col].inverse();
    for (size_t j = col; j < n; ++j) a[rank][j] *= inv;
    b[rank] *= inv;
    for (size_t row = 0; row < m; ++row) {
      if (row == rank || a[row][col].is_zero()) continue;
      const GoldenNumber f = a[row][col];
      for (size_t j = col; j < n; ++j) a[row][j] -= f * a[rank][j];
      b[row] -= f * b[rank];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  AffineSolution out;
  for (size_t row = rank; row < m; ++row) {
    if (!b[row].is_zero()) return out;  // inconsistent: consistent stays false
  }
  out.consistent = true;
  out.pivot_columns = pivot_cols;
  std::vector<bool> is_pivot(n, false);
  for (const size_t c : pivot_cols) is_pivot[c] = true;
  for (size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) out.free_columns.push_back(c);
  }

  out.particular.assign(n, GoldenNumber(0L));
  for (size_t r = 0; r < pivot_cols.size(); ++r) out.particular[pivot_cols[r]] = b[r];

  for (const size_t free_col : out.free_columns) {
    std::vector<GoldenNumber> dir(n, GoldenNumber(0L));
    dir[free_col] = GoldenNumber(1L);
    for (size_t r = 0; r < pivot_cols.size(); ++r) dir[pivot_cols[r]] = -a[r][free_col];
    out.basis.push_back(std::move(dir));
  }
  return out;
}

Vec3G canonical_direction(const Vec3G& d) {
  if (d.is_zero()) throw std::invalid_argument("canonical_direction: zero vector");
  size_t lead = 0;
  while (d[lead].is_zero()) ++lead;
  // Positive scaling only: antipodal directions stay distinct, matching the
  // count of equivalent points on a sphere around the origin.
  const GoldenNumber f =
      d[lead].sign() > 0 ? d[lead].inverse() : (-d[lead]).inverse();
  return d.scaled(f);
}

std::vector<Vec3G> orbit_of_line(const MatrixGroup& group, const Vec3G& seed) {
  if (seed.is_zero()) throw std::invalid_argument("orbit_of_line: zero seed");
  std::set<Vec3G> lines;
  for (const auto& g : group.elements) lines.insert(canonical_direction(g * seed));
  return {lines.begin(), lines.end()};
}

}  // namespace beltrami
