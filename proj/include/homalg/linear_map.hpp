#pragma once

#include <stdexcept>
#include <vector>

#include "homalg/element.hpp"
#include "homalg/rational.hpp"

namespace homalg {

/// Square matrix over Rational. Column convention: column j is the image of
/// basis vector e_j.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(int dim) : dim_(dim), m_(static_cast<std::size_t>(dim) * dim) {}

  static LinearMap identity(int dim) {
    LinearMap id(dim);
    for (int i = 0; i < dim; ++i) id.at(i, i) = Rational(1);
    return id;
  }
  static LinearMap zero(int dim) { return LinearMap(dim); }

  /// Builds the map from basis images: columns[j] = image of e_j.
  static LinearMap from_columns(const std::vector<Element>& columns) {
    const int d = static_cast<int>(columns.size());
    LinearMap m(d);
    for (int j = 0; j < d; ++j) {
      if (columns[j].dim() != d) throw std::invalid_argument("dimension");
      for (int i = 0; i < d; ++i) m.at(i, j) = columns[j][i];
    }
    return m;
  }

  int dim() const { return dim_; }
  Rational& at(int i, int j) { return m_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Rational& at(int i, int j) const {
    return m_[static_cast<std::size_t>(i) * dim_ + j];
  }

  Element apply(const Element& x) const {
    if (x.dim() != dim_) throw std::invalid_argument("dimension");
    Element y(dim_);
    for (int j = 0; j < dim_; ++j) {
      if (x[j].is_zero()) continue;
      for (int i = 0; i < dim_; ++i) {
        const Rational& a = at(i, j);
        if (!a.is_zero()) y[i] += a * x[j];
      }
    }
    return y;
  }

  Element column(int j) const {
    Element y(dim_);
    for (int i = 0; i < dim_; ++i) y[i] = at(i, j);
    return y;
  }

  /// this ∘ other (apply other first).
  LinearMap compose(const LinearMap& other) const {
    if (other.dim_ != dim_) throw std::invalid_argument("dimension");
    LinearMap r(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < dim_; ++k) {
        const Rational& a = at(i, k);
        if (a.is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
          const Rational& b = other.at(k, j);
          if (!b.is_zero()) r.at(i, j) += a * b;
        }
      }
    return r;
  }

  /// k-fold composition; power(0) is the identity.
  LinearMap power(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    LinearMap r = identity(dim_);
    for (int i = 0; i < k; ++i) r = r.compose(*this);
    return r;
  }

  bool is_identity() const {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.dim_ == b.dim_ && a.m_ == b.m_;
  }
  friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

 private:
  int dim_ = 0;
  std::vector<Rational> m_;
};

}  // namespace homalg
