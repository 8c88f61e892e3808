#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homalg/element.hpp"
#include "homalg/linear_map.hpp"
#include "homalg/rational.hpp"

namespace homalg {

/// A single nonzero structure constant: e_i e_j contains value * e_k.
struct ScEntry {
  int i, j, k;
  Rational value;
};

/// Finite-dimensional algebra with a bilinear product given by structure
/// constants and a linear twisting map. Immutable after construction.
///
/// Structure constants are stored sparsely per basis pair; a dense tensor is
/// materialized as a fast path when the fill ratio exceeds 25%.
class HomAlgebra {
 public:
  HomAlgebra(int dim, const std::vector<ScEntry>& entries, LinearMap alpha,
             std::vector<std::string> labels = {},
             std::optional<LinearMap> conj = std::nullopt,
             std::map<std::string, std::string> metadata = {});

  int dim() const { return dim_; }
  const LinearMap& alpha() const { return alpha_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<LinearMap>& conjugation() const { return conj_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }

  /// Product of basis vectors e_i e_j as an element.
  Element basis_product(int i, int j) const;

  /// Bilinear product. Throws "dimension" on length mismatch.
  Element mul(const Element& x, const Element& y) const;
  /// Opposite product mul(y, x).
  Element op_mul(const Element& x, const Element& y) const { return mul(y, x); }
  /// mul - op_mul.
  Element commutator(const Element& x, const Element& y) const {
    return mul(x, y) - mul(y, x);
  }
  /// mul + op_mul.
  Element bullet(const Element& x, const Element& y) const {
    return mul(x, y) + mul(y, x);
  }

  Element conj(const Element& x) const;

  /// alpha mu = mu (alpha x alpha) on all basis pairs.
  bool is_multiplicative() const;
  /// c[i][j][.] = c[j][i][.] on all basis pairs.
  bool is_commutative() const;

  /// All nonzero structure constants, ordered by (i, j, k).
  std::vector<ScEntry> structure_constants() const;

  std::size_t nonzero_count() const { return nnz_; }
  bool dense_path() const { return !dense_.empty(); }

  /// Same dimension, structure constants, alpha and conjugation.
  bool same_tensors(const HomAlgebra& other) const;

  /// Derived algebra with the same dimension/labels but a new product and
  /// twisting map; conjugation is dropped unless explicitly kept.
  HomAlgebra with_product(const std::vector<ScEntry>& entries, LinearMap alpha,
                          std::map<std::string, std::string> metadata = {}) const;

 private:
  std::size_t cell(int i, int j) const {
    return static_cast<std::size_t>(i) * dim_ + j;
  }

  int dim_;
  // per (i,j) list of (k, value)
  std::vector<std::vector<std::pair<int, Rational>>> cells_;
  std::vector<Rational> dense_;  // d^3 row-major when fill > 25%, else empty
  std::size_t nnz_ = 0;
  LinearMap alpha_;
  std::vector<std::string> labels_;
  std::optional<LinearMap> conj_;
  std::map<std::string, std::string> metadata_;
};

}  // namespace homalg
