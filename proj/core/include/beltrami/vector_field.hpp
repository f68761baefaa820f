#pragma once

#include <vector>

#include "beltrami/trigexpr.hpp"

namespace beltrami {

// Exact inverse of a small square matrix given as rows; throws when singular.
template <class Scalar>
std::vector<std::vector<Scalar>> small_matrix_inverse(
    const std::vector<std::vector<Scalar>>& m) {
  const size_t n = m.size();
  std::vector<std::vector<Scalar>> a = m;
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n, Scalar(0)));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("small_matrix_inverse: not square");
    inv[i][i] = Scalar(1);
  }
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("small_matrix_inverse: singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Scalar d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] = a[col][j] / d;
      inv[col][j] = inv[col][j] / d;
    }
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Scalar f = a[row][col];
      for (size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Vector field on R^n with components in the trig expression algebra; the
// component count always equals the variable dimension.
template <class Scalar>
class VectorFieldExpr {
 public:
  explicit VectorFieldExpr(int dimension = 3)
      : components_(static_cast<size_t>(dimension), TrigExpr<Scalar>(dimension)) {
    if (dimension < 2 || dimension > 3) {
      throw std::invalid_argument("VectorFieldExpr: dimension must be 2 or 3");
    }
  }
  explicit VectorFieldExpr(std::vector<TrigExpr<Scalar>> components)
      : components_(std::move(components)) {
    const int n = static_cast<int>(components_.size());
    if (n < 2 || n > 3) throw std::invalid_argument("VectorFieldExpr: dimension must be 2 or 3");
    for (const auto& c : components_) {
      if (c.dimension() != n) {
        throw std::invalid_argument("VectorFieldExpr: component dimension mismatch");
      }
    }
  }

  int dimension() const { return static_cast<int>(components_.size()); }
  const TrigExpr<Scalar>& component(int i) const {
    return components_.at(static_cast<size_t>(i));
  }
  const std::vector<TrigExpr<Scalar>>& components() const { return components_; }

  bool is_zero() const {
    for (const auto& c : components_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  VectorFieldExpr operator-() const {
    VectorFieldExpr out(dimension());
    for (size_t i = 0; i < components_.size(); ++i) out.components_[i] = -components_[i];
    return out;
  }
  VectorFieldExpr& operator+=(const VectorFieldExpr& o) {
    require_same_dimension(o);
    for (size_t i = 0; i < components_.size(); ++i) components_[i] += o.components_[i];
    return *this;
  }
  VectorFieldExpr& operator-=(const VectorFieldExpr& o) {
    require_same_dimension(o);
    for (size_t i = 0; i < components_.size(); ++i) components_[i] -= o.components_[i];
    return *this;
  }
  friend VectorFieldExpr operator+(VectorFieldExpr a, const VectorFieldExpr& b) { return a += b; }
  friend VectorFieldExpr operator-(VectorFieldExpr a, const VectorFieldExpr& b) { return a -= b; }

  VectorFieldExpr scaled(const Scalar& factor) const {
    VectorFieldExpr out(dimension());
    for (size_t i = 0; i < components_.size(); ++i) out.components_[i] = components_[i].scaled(factor);
    return out;
  }

  bool operator==(const VectorFieldExpr& o) const { return components_ == o.components_; }

  TrigExpr<Scalar> divergence() const {
    TrigExpr<Scalar> out(dimension());
    for (int i = 0; i < dimension(); ++i) out += components_[static_cast<size_t>(i)].derivative(i);
    return out;
  }

  VectorFieldExpr curl() const {
    if (dimension() != 3) throw std::invalid_argument("curl: requires dimension 3");
    VectorFieldExpr out(3);
    out.components_[0] = components_[2].derivative(1) - components_[1].derivative(2);
    out.components_[1] = components_[0].derivative(2) - components_[2].derivative(0);
    out.components_[2] = components_[1].derivative(0) - components_[0].derivative(1);
    return out;
  }

  VectorFieldExpr component_laplacian() const {
    VectorFieldExpr out(dimension());
    for (size_t i = 0; i < components_.size(); ++i) out.components_[i] = components_[i].laplacian();
    return out;
  }

  // Conjugation by g: returns g^{-1} o v o g; g is given as rows.
  VectorFieldExpr conjugated(const std::vector<std::vector<Scalar>>& g) const {
    const size_t n = components_.size();
    if (g.size() != n) throw std::invalid_argument("conjugated: matrix dimension mismatch");
    const auto inv = small_matrix_inverse(g);
    std::vector<TrigExpr<Scalar>> moved;
    moved.reserve(n);
    for (size_t j = 0; j < n; ++j) moved.push_back(components_[j].substituted(g));
    VectorFieldExpr out(dimension());
    for (size_t i = 0; i < n; ++i) {
      TrigExpr<Scalar> acc(dimension());
      for (size_t j = 0; j < n; ++j) acc += moved[j].scaled(inv[i][j]);
      out.components_[i] = std::move(acc);
    }
    return out;
  }

  VectorFieldExpr coefficients_conjugated() const {
    VectorFieldExpr out(dimension());
    for (size_t i = 0; i < components_.size(); ++i) {
      out.components_[i] = components_[i].coefficients_conjugated();
    }
    return out;
  }

  std::vector<Polynomial<Scalar>> taylor(int degree) const {
    std::vector<Polynomial<Scalar>> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.taylor(degree));
    return out;
  }

  std::vector<TrigExpr<Scalar>> restricted_to_line(const std::vector<Scalar>& direction) const {
    std::vector<TrigExpr<Scalar>> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.restricted_to_line(direction));
    return out;
  }

  std::vector<double> evaluated(const std::vector<double>& point) const {
    std::vector<double> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.evaluated(point));
    return out;
  }

 private:
  void require_same_dimension(const VectorFieldExpr& o) const {
    if (components_.size() != o.components_.size()) {
      throw std::invalid_argument("VectorFieldExpr: dimension mismatch");
    }
  }

  std::vector<TrigExpr<Scalar>> components_;
};

template <class Scalar>
VectorFieldExpr<Scalar> gradient(const TrigExpr<Scalar>& e) {
  std::vector<TrigExpr<Scalar>> comps;
  comps.reserve(static_cast<size_t>(e.dimension()));
  for (int i = 0; i < e.dimension(); ++i) comps.push_back(e.derivative(i));
  return VectorFieldExpr<Scalar>(std::move(comps));
}

// grad(div v) - curl(curl v), the vector Laplacian in the identity
// lap(v) = grad(div v) - curl(curl v).
template <class Scalar>
VectorFieldExpr<Scalar> vector_laplacian_via_curl(const VectorFieldExpr<Scalar>& v) {
  return gradient(v.divergence()) - v.curl().curl();
}

template <class Scalar>
VectorFieldExpr<Scalar> lie_bracket(const VectorFieldExpr<Scalar>& x,
                                    const VectorFieldExpr<Scalar>& y) {
  if (x.dimension() != y.dimension()) throw std::invalid_argument("lie_bracket: dimension mismatch");
  const int n = x.dimension();
  std::vector<TrigExpr<Scalar>> comps;
  comps.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    TrigExpr<Scalar> acc(n);
    for (int j = 0; j < n; ++j) {
      acc += x.component(j).multiplied(y.component(i).derivative(j));
      acc -= y.component(j).multiplied(x.component(i).derivative(j));
    }
    comps.push_back(std::move(acc));
  }
  return VectorFieldExpr<Scalar>(std::move(comps));
}

// Whether grad(w) . v vanishes identically, i.e. w is constant along v.
template <class Scalar>
bool is_first_integral(const Polynomial<Scalar>& w, const VectorFieldExpr<Scalar>& v) {
  if (w.dimension() != v.dimension()) {
    throw std::invalid_argument("is_first_integral: dimension mismatch");
  }
  TrigExpr<Scalar> acc(v.dimension());
  for (int i = 0; i < v.dimension(); ++i) {
    acc += v.component(i).scaled(w.derivative(i));
  }
  return acc.is_zero();
}

}  // namespace beltrami
