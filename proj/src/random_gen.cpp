#include "homalg/random_gen.hpp"

#include <numeric>
#include <stdexcept>

#include "homalg/constructions.hpp"
#include "homalg/seeded_random.hpp"

namespace homalg {

namespace {

std::vector<ScEntry> random_structure_constants(Rng& rng, int dim, double density) {
  std::vector<ScEntry> sc;
  const long resolution = 1000000;
  const long cut = static_cast<long>(density * static_cast<double>(resolution));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        const long roll = draw_int(rng, 0, resolution - 1);
        long v = draw_int(rng, -3, 3);  // drawn unconditionally to keep streams aligned
        if (roll >= cut) continue;
        if (v == 0) v = 1;
        sc.push_back({i, j, k, Rational(v)});
      }
  return sc;
}

LinearMap random_signed_permutation(Rng& rng, int dim) {
  std::vector<int> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = dim - 1; i > 0; --i) {
    const int j = static_cast<int>(draw_int(rng, 0, i));
    std::swap(perm[i], perm[j]);
  }
  LinearMap m(dim);
  for (int i = 0; i < dim; ++i)
    m.at(perm[i], i) = Rational(draw_int(rng, 0, 1) ? 1 : -1);
  return m;
}

int map_order(const LinearMap& m, int cap = 4096) {
  LinearMap p = m;
  for (int n = 1; n <= cap; ++n) {
    if (p.is_identity()) return n;
    p = p.compose(m);
  }
  throw std::logic_error("map order exceeds cap");
}

}  // namespace

HomAlgebra random_hom_algebra(int dim, double density, std::uint64_t seed,
                              RandomAlgebraFlags flags) {
  if (dim < 1 || dim > 6) throw std::invalid_argument("random algebras are capped at dim 6");
  if (!(density > 0.0 && density <= 1.0)) throw std::invalid_argument("density in (0,1]");
  Rng rng(seed);
  std::vector<ScEntry> sc = random_structure_constants(rng, dim, density);

  if (flags.alpha_identity || !flags.alpha_multiplicative) {
    LinearMap alpha = LinearMap::identity(dim);
    if (!flags.alpha_identity) {
      alpha = LinearMap(dim);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) alpha.at(i, j) = Rational(draw_int(rng, -2, 2));
    }
    return HomAlgebra(dim, sc, alpha, {}, std::nullopt,
                      {{"random-seed", std::to_string(seed)}});
  }

  // equivariant base algebra: average the product over the orbit of a random
  // signed permutation, which makes that permutation a morphism
  const LinearMap beta = random_signed_permutation(rng, dim);
  const int order = map_order(beta);
  HomAlgebra raw(dim, sc, LinearMap::identity(dim));
  std::vector<LinearMap> betaPow(order);
  betaPow[0] = LinearMap::identity(dim);
  for (int t = 1; t < order; ++t) betaPow[t] = betaPow[t - 1].compose(beta);
  const Rational inv(1, order);
  std::vector<ScEntry> symmetrized;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Element acc = Element::zero(dim);
      for (int t = 0; t < order; ++t) {
        const LinearMap& bt = betaPow[t];
        const LinearMap& btInv = betaPow[(order - t) % order];
        acc += btInv.apply(raw.mul(bt.column(i), bt.column(j)));
      }
      acc *= inv;
      for (int k = 0; k < dim; ++k)
        if (!acc[k].is_zero()) symmetrized.push_back({i, j, k, acc[k]});
    }
  HomAlgebra base(dim, symmetrized, LinearMap::identity(dim), {}, std::nullopt,
                  {{"random-seed", std::to_string(seed)}});
  return yau_twist(base, beta);
}

Element random_element(const HomAlgebra& h, long bound, std::uint64_t seed) {
  Rng rng(seed);
  return draw_element(rng, h.dim(), bound);
}

}  // namespace homalg
