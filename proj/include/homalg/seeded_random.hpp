#pragma once

#include <cstdint>
#include <random>

#include "homalg/element.hpp"
#include "homalg/hom_algebra.hpp"

namespace homalg {

/// Deterministic engine shared by every probabilistic check; all draws go
/// through these helpers so that reports are reproducible bit for bit.
using Rng = std::mt19937_64;

inline long draw_int(Rng& rng, long lo, long hi) {
  const unsigned long span = static_cast<unsigned long>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

/// Element with integer coordinates drawn uniformly from [-bound, bound].
inline Element draw_element(Rng& rng, int dim, long bound) {
  Element x(dim);
  for (int i = 0; i < dim; ++i) x[i] = Rational(draw_int(rng, -bound, bound));
  return x;
}

}  // namespace homalg
