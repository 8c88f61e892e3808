#include "homalg/hom_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace homalg {

HomAlgebra::HomAlgebra(int dim, const std::vector<ScEntry>& entries, LinearMap alpha,
                       std::vector<std::string> labels, std::optional<LinearMap> conj,
                       std::map<std::string, std::string> metadata)
    : dim_(dim),
      cells_(static_cast<std::size_t>(dim) * dim),
      alpha_(std::move(alpha)),
      labels_(std::move(labels)),
      conj_(std::move(conj)),
      metadata_(std::move(metadata)) {
  if (dim <= 0) throw std::invalid_argument("dimension must be positive");
  if (alpha_.dim() != dim) throw std::invalid_argument("alpha is not dim x dim");
  if (conj_ && conj_->dim() != dim) throw std::invalid_argument("conjugation is not dim x dim");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != dim)
    throw std::invalid_argument("labels length mismatch");
  for (const auto& e : entries) {
    if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim)
      throw std::invalid_argument("structure constant index out of range");
    if (e.value.is_zero()) continue;
    auto& c = cells_[cell(e.i, e.j)];
    auto it = std::find_if(c.begin(), c.end(),
                           [&](const auto& p) { return p.first == e.k; });
    if (it == c.end()) c.emplace_back(e.k, e.value);
    else it->second += e.value;
  }
  for (auto& c : cells_) {
    std::erase_if(c, [](const auto& p) { return p.second.is_zero(); });
    std::sort(c.begin(), c.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    nnz_ += c.size();
  }
  const std::size_t total = static_cast<std::size_t>(dim) * dim * dim;
  if (nnz_ * 4 > total) {
    dense_.assign(total, Rational(0));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (const auto& [k, v] : cells_[cell(i, j)])
          dense_[(cell(i, j)) * dim + k] = v;
  }
}

Element HomAlgebra::basis_product(int i, int j) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_) throw std::out_of_range("basis index");
  Element r(dim_);
  for (const auto& [k, v] : cells_[cell(i, j)]) r[k] = v;
  return r;
}

Element HomAlgebra::mul(const Element& x, const Element& y) const {
  if (x.dim() != dim_ || y.dim() != dim_) throw std::invalid_argument("dimension");
  Element r(dim_);
  int xs[64], ys[64];
  int nx = 0, ny = 0;
  std::vector<int> xbig, ybig;
  const bool small = dim_ <= 64;
  for (int i = 0; i < dim_; ++i) {
    if (!x[i].is_zero()) {
      if (small) xs[nx++] = i;
      else xbig.push_back(i);
    }
    if (!y[i].is_zero()) {
      if (small) ys[ny++] = i;
      else ybig.push_back(i);
    }
  }
  const int* xi = small ? xs : xbig.data();
  const int* yj = small ? ys : ybig.data();
  if (!small) {
    nx = static_cast<int>(xbig.size());
    ny = static_cast<int>(ybig.size());
  }
  for (int a = 0; a < nx; ++a) {
    const int i = xi[a];
    for (int b = 0; b < ny; ++b) {
      const int j = yj[b];
      const Rational xy = x[i] * y[j];
      if (!dense_.empty()) {
        const std::size_t base = cell(i, j) * dim_;
        for (int k = 0; k < dim_; ++k) {
          const Rational& v = dense_[base + k];
          if (!v.is_zero()) r[k] += xy * v;
        }
      } else {
        for (const auto& [k, v] : cells_[cell(i, j)]) r[k] += xy * v;
      }
    }
  }
  return r;
}

Element HomAlgebra::conj(const Element& x) const {
  if (!conj_) throw std::logic_error("no-involution");
  return conj_->apply(x);
}

bool HomAlgebra::is_multiplicative() const {
  for (int i = 0; i < dim_; ++i) {
    const Element ai = alpha_.column(i);
    for (int j = 0; j < dim_; ++j) {
      const Element lhs = alpha_.apply(basis_product(i, j));
      const Element rhs = mul(ai, alpha_.column(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool HomAlgebra::is_commutative() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (basis_product(i, j) != basis_product(j, i)) return false;
  return true;
}

std::vector<ScEntry> HomAlgebra::structure_constants() const {
  std::vector<ScEntry> out;
  out.reserve(nnz_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (const auto& [k, v] : cells_[cell(i, j)]) out.push_back({i, j, k, v});
  return out;
}

bool HomAlgebra::same_tensors(const HomAlgebra& other) const {
  if (other.dim_ != dim_ || other.alpha_ != alpha_) return false;
  if (conj_.has_value() != other.conj_.has_value()) return false;
  if (conj_ && *conj_ != *other.conj_) return false;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (basis_product(i, j) != other.basis_product(i, j)) return false;
  return true;
}

HomAlgebra HomAlgebra::with_product(const std::vector<ScEntry>& entries, LinearMap alpha,
                                    std::map<std::string, std::string> metadata) const {
  return HomAlgebra(dim_, entries, std::move(alpha), labels_, conj_, std::move(metadata));
}

}  // namespace homalg
