#pragma once

#include <cstdint>

#include "homalg/hom_algebra.hpp"

namespace homalg {

struct RandomAlgebraFlags {
  bool alpha_identity = false;
  /// Build the algebra as a Yau twist of an equivariant random algebra by a
  /// random signed-permutation morphism, so the twisting map is
  /// multiplicative by construction.
  bool alpha_multiplicative = false;
};

/// Seeded, reproducible random Hom-algebra of dimension at most 6.
HomAlgebra random_hom_algebra(int dim, double density, std::uint64_t seed,
                              RandomAlgebraFlags flags = {});

/// Seeded element with integer coordinates in [-bound, bound].
Element random_element(const HomAlgebra& h, long bound, std::uint64_t seed);

}  // namespace homalg
