#pragma once

#include <compare>
#include <string>
#include <vector>

#include "beltrami/polynomial.hpp"

namespace beltrami {

// Homogeneous linear form b1*x1 + ... + bn*xn used as a sin/cos argument.
template <class Scalar>
class LinearForm {
 public:
  explicit LinearForm(int dimension = 3)
      : coefficients_(static_cast<size_t>(dimension), Scalar(0)) {
    if (dimension < 1 || dimension > 3) {
      throw std::invalid_argument("LinearForm: dimension must be 1, 2 or 3");
    }
  }
  explicit LinearForm(std::vector<Scalar> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty() || coefficients_.size() > 3) {
      throw std::invalid_argument("LinearForm: dimension must be 1, 2 or 3");
    }
  }

  int dimension() const { return static_cast<int>(coefficients_.size()); }
  const std::vector<Scalar>& coefficients() const { return coefficients_; }
  const Scalar& coefficient(int axis) const { return coefficients_.at(static_cast<size_t>(axis)); }
  void set_coefficient(int axis, Scalar value) {
    coefficients_.at(static_cast<size_t>(axis)) = std::move(value);
  }

  bool is_zero() const {
    for (const auto& c : coefficients_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  // Sign of the first nonzero coefficient; 0 for the zero form.
  int leading_sign() const {
    for (const auto& c : coefficients_) {
      const int s = c.sign();
      if (s != 0) return s;
    }
    return 0;
  }

  LinearForm operator-() const {
    LinearForm out = *this;
    for (auto& c : out.coefficients_) c = -c;
    return out;
  }
  LinearForm& operator+=(const LinearForm& o) {
    require_same_dimension(o);
    for (size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += o.coefficients_[i];
    return *this;
  }
  LinearForm& operator-=(const LinearForm& o) {
    require_same_dimension(o);
    for (size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= o.coefficients_[i];
    return *this;
  }
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }

  LinearForm scaled(const Scalar& factor) const {
    LinearForm out = *this;
    for (auto& c : out.coefficients_) c = c * factor;
    return out;
  }

  Scalar dot(const LinearForm& o) const {
    require_same_dimension(o);
    Scalar out(0);
    for (size_t i = 0; i < coefficients_.size(); ++i) out += coefficients_[i] * o.coefficients_[i];
    return out;
  }
  Scalar norm_squared() const { return dot(*this); }

  // Value of the form along x = s*direction, as the coefficient of s.
  Scalar along_direction(const std::vector<Scalar>& direction) const {
    if (direction.size() != coefficients_.size()) {
      throw std::invalid_argument("LinearForm::along_direction: dimension mismatch");
    }
    Scalar out(0);
    for (size_t i = 0; i < coefficients_.size(); ++i) out += coefficients_[i] * direction[i];
    return out;
  }

  // Composition with x -> matrix*x: coefficients become b^T * matrix.
  LinearForm substituted(const std::vector<std::vector<Scalar>>& matrix) const {
    const size_t n = coefficients_.size();
    if (matrix.size() != n) {
      throw std::invalid_argument("LinearForm::substituted: matrix dimension mismatch");
    }
    LinearForm out(static_cast<int>(n));
    for (size_t j = 0; j < n; ++j) {
      Scalar cj(0);
      for (size_t i = 0; i < n; ++i) cj += coefficients_[i] * matrix[i][j];
      out.coefficients_[j] = cj;
    }
    return out;
  }

  LinearForm sign_flipped(const std::array<int, 3>& signs) const {
    LinearForm out = *this;
    for (size_t i = 0; i < coefficients_.size(); ++i) {
      if (signs.at(i) < 0) out.coefficients_[i] = -out.coefficients_[i];
    }
    return out;
  }

  LinearForm variables_permuted(const std::array<int, 3>& permutation) const {
    LinearForm out(static_cast<int>(coefficients_.size()));
    for (size_t i = 0; i < coefficients_.size(); ++i) {
      out.coefficients_.at(static_cast<size_t>(permutation.at(i))) = coefficients_[i];
    }
    return out;
  }

  Polynomial<Scalar> as_polynomial() const {
    Polynomial<Scalar> out(dimension());
    for (size_t i = 0; i < coefficients_.size(); ++i) {
      Exponents e{0, 0, 0};
      e.at(i) = 1;
      out.add_term(e, coefficients_[i]);
    }
    return out;
  }

  bool operator==(const LinearForm& o) const { return coefficients_ == o.coefficients_; }

  // Lexicographic order on coefficient vectors (shorter dimension first).
  std::strong_ordering operator<=>(const LinearForm& o) const {
    if (coefficients_.size() != o.coefficients_.size()) {
      return coefficients_.size() < o.coefficients_.size() ? std::strong_ordering::less
                                                           : std::strong_ordering::greater;
    }
    for (size_t i = 0; i < coefficients_.size(); ++i) {
      const auto c = coefficients_[i] <=> o.coefficients_[i];
      if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
  }

  std::string str() const {
    const auto& names = variable_names(dimension());
    std::string out;
    for (size_t i = 0; i < coefficients_.size(); ++i) {
      if (coefficients_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + coefficients_[i].str() + ")*" + names[i];
    }
    return out.empty() ? "0" : out;
  }

 private:
  void require_same_dimension(const LinearForm& o) const {
    if (coefficients_.size() != o.coefficients_.size()) {
      throw std::invalid_argument("LinearForm: dimension mismatch");
    }
  }

  std::vector<Scalar> coefficients_;
};

}  // namespace beltrami
