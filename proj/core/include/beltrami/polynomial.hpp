#pragma once

#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "beltrami/quadratic.hpp"

namespace beltrami {

// Exponent tuple of a monomial in up to three variables; unused trailing
// slots stay zero, so tuples order lexicographically regardless of dimension.
using Exponents = std::array<int, 3>;

inline int exponents_degree(const Exponents& e) { return e[0] + e[1] + e[2]; }

inline const std::vector<std::string>& variable_names(int dimension) {
  static const std::vector<std::string> one{"s"};
  static const std::vector<std::string> two{"x", "y"};
  static const std::vector<std::string> three{"x", "y", "z"};
  switch (dimension) {
    case 1: return one;
    case 2: return two;
    case 3: return three;
    default: throw std::invalid_argument("variable_names: dimension must be 1, 2 or 3");
  }
}

// Multivariate polynomial with exact coefficients. Zero coefficients are
// never stored; the zero polynomial has an empty term map.
template <class Scalar>
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Scalar>;

  explicit Polynomial(int dimension = 3) : dim_(check_dimension(dimension)) {}

  static Polynomial constant(int dimension, Scalar value) {
    Polynomial p(dimension);
    p.add_term({0, 0, 0}, std::move(value));
    return p;
  }
  static Polynomial variable(int dimension, int axis, Scalar coefficient = Scalar(1)) {
    Polynomial p(dimension);
    Exponents e{0, 0, 0};
    e.at(static_cast<size_t>(axis)) = 1;
    p.add_term(e, std::move(coefficient));
    return p;
  }
  static Polynomial monomial(int dimension, const Exponents& exponents, Scalar coefficient) {
    Polynomial p(dimension);
    p.add_term(exponents, std::move(coefficient));
    return p;
  }

  int dimension() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  int total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, exponents_degree(e));
    return deg;
  }

  void add_term(const Exponents& exponents, Scalar coefficient) {
    for (int i = dim_; i < 3; ++i) {
      if (exponents.at(static_cast<size_t>(i)) != 0) {
        throw std::invalid_argument("Polynomial: exponent outside dimension");
      }
    }
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
      if (!coefficient.is_zero()) terms_.emplace(exponents, std::move(coefficient));
      return;
    }
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Scalar coefficient(const Exponents& exponents) const {
    const auto it = terms_.find(exponents);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  Polynomial operator-() const {
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_dimension(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_dimension(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial scaled(const Scalar& factor) const {
    Polynomial out(dim_);
    if (factor.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
    return out;
  }

  // Product, truncating any monomial whose total degree exceeds degree_cap
  // (negative cap means no truncation).
  Polynomial multiplied(const Polynomial& o, int degree_cap = -1) const {
    require_same_dimension(o);
    Polynomial out(dim_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : o.terms_) {
        const Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
        if (degree_cap >= 0 && exponents_degree(e) > degree_cap) continue;
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  Polynomial pow(unsigned exponent, int degree_cap = -1) const {
    Polynomial out = constant(dim_, Scalar(1));
    for (unsigned k = 0; k < exponent; ++k) out = out.multiplied(*this, degree_cap);
    return out;
  }

  Polynomial derivative(int axis) const {
    Polynomial out(dim_);
    const size_t a = static_cast<size_t>(axis);
    if (axis < 0 || axis >= dim_) throw std::invalid_argument("Polynomial::derivative: bad axis");
    for (const auto& [e, c] : terms_) {
      if (e.at(a) == 0) continue;
      Exponents d = e;
      d.at(a) -= 1;
      out.add_term(d, c * Scalar(e.at(a)));
    }
    return out;
  }

  // Substitution x_i -> sum_j matrix[i][j] x_j; the result evaluates at x to
  // this polynomial's value at matrix*x.
  Polynomial substituted(const std::vector<std::vector<Scalar>>& matrix) const {
    if (static_cast<int>(matrix.size()) != dim_) {
      throw std::invalid_argument("Polynomial::substituted: matrix dimension mismatch");
    }
    std::vector<Polynomial> images;
    images.reserve(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
      Polynomial row(dim_);
      for (int j = 0; j < dim_; ++j) {
        Exponents e{0, 0, 0};
        e.at(static_cast<size_t>(j)) = 1;
        row.add_term(e, matrix.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)));
      }
      images.push_back(std::move(row));
    }
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_) {
      Polynomial term = constant(dim_, c);
      for (int i = 0; i < dim_; ++i) {
        for (int k = 0; k < e.at(static_cast<size_t>(i)); ++k) {
          term = term.multiplied(images.at(static_cast<size_t>(i)));
        }
      }
      out += term;
    }
    return out;
  }

  // Substitution x_i -> signs[i] * x_i with signs in {+1, -1}.
  Polynomial sign_flipped(const std::array<int, 3>& signs) const {
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_) {
      bool negate = false;
      for (int i = 0; i < dim_; ++i) {
        if (signs.at(static_cast<size_t>(i)) < 0 && (e.at(static_cast<size_t>(i)) & 1)) {
          negate = !negate;
        }
      }
      out.add_term(e, negate ? Scalar(-c) : c);
    }
    return out;
  }

  // Relabels variables: exponent of old variable i moves to permutation[i].
  Polynomial variables_permuted(const std::array<int, 3>& permutation) const {
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_) {
      Exponents d{0, 0, 0};
      for (int i = 0; i < dim_; ++i) {
        d.at(static_cast<size_t>(permutation.at(static_cast<size_t>(i)))) +=
            e.at(static_cast<size_t>(i));
      }
      out.add_term(d, c);
    }
    return out;
  }

  Scalar evaluated(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != dim_) {
      throw std::invalid_argument("Polynomial::evaluated: point dimension mismatch");
    }
    Scalar out(0);
    for (const auto& [e, c] : terms_) {
      Scalar term = c;
      for (int i = 0; i < dim_; ++i) {
        for (int k = 0; k < e.at(static_cast<size_t>(i)); ++k) {
          term *= point.at(static_cast<size_t>(i));
        }
      }
      out += term;
    }
    return out;
  }

  // One-variable polynomial in s obtained by substituting x = s*direction.
  Polynomial restricted_to_line(const std::vector<Scalar>& direction) const {
    if (static_cast<int>(direction.size()) != dim_) {
      throw std::invalid_argument("Polynomial::restricted_to_line: direction dimension mismatch");
    }
    Polynomial out(1);
    for (const auto& [e, c] : terms_) {
      Scalar factor = c;
      for (int i = 0; i < dim_; ++i) {
        for (int k = 0; k < e.at(static_cast<size_t>(i)); ++k) {
          factor *= direction.at(static_cast<size_t>(i));
        }
      }
      out.add_term({exponents_degree(e), 0, 0}, factor);
    }
    return out;
  }

  Polynomial truncated(int max_degree) const {
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_) {
      if (exponents_degree(e) <= max_degree) out.terms_.emplace(e, c);
    }
    return out;
  }

  Polynomial homogeneous_part(int degree) const {
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_) {
      if (exponents_degree(e) == degree) out.terms_.emplace(e, c);
    }
    return out;
  }

  bool operator==(const Polynomial& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    const auto& names = variable_names(dim_);
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      for (int i = 0; i < dim_; ++i) {
        const int k = e.at(static_cast<size_t>(i));
        if (k == 0) continue;
        out += "*" + names.at(static_cast<size_t>(i));
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  static int check_dimension(int dimension) {
    if (dimension < 1 || dimension > 3) {
      throw std::invalid_argument("Polynomial: dimension must be 1, 2 or 3");
    }
    return dimension;
  }
  void require_same_dimension(const Polynomial& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("Polynomial: dimension mismatch");
  }

  int dim_;
  TermMap terms_;
};

}  // namespace beltrami
