#pragma once

#include <array>
#include <vector>

#include "homalg/hom_algebra.hpp"

namespace homalg {

/// Memoizes the Hom-powers x^1..x^n of one element together with the
/// alpha-power images used to build them: x^n = x^{n-1} alpha^{n-2}(x).
class PowerCache {
 public:
  PowerCache(const HomAlgebra& h, Element x);

  const Element& power(int n);
  /// alpha^k applied to x^n.
  Element alpha_power_of(int n, int k);

  const HomAlgebra& algebra() const { return h_; }

 private:
  const HomAlgebra& h_;
  std::vector<Element> powers_;       // powers_[n-1] = x^n
  std::vector<Element> alpha_of_x_;   // alpha_of_x_[k] = alpha^k(x)
};

/// n-th Hom-power; throws "undefined-power" for n < 1.
Element hom_power(const HomAlgebra& h, const Element& x, int n);

/// x^{i,j} = alpha^{j-1}(x^i) alpha^{i-1}(x^j); throws on nonpositive indices.
Element power_pair(const HomAlgebra& h, const Element& x, int i, int j);
Element power_pair(PowerCache& cache, int i, int j);

/// as(x,y,z) = (xy) alpha(z) - alpha(x) (yz).
Element hom_associator(const HomAlgebra& h, const Element& x, const Element& y,
                       const Element& z);

/// S(x,y,z) = as(x,y,z) + as(z,x,y) + as(y,z,x).
Element cyclic_associator(const HomAlgebra& h, const Element& x, const Element& y,
                          const Element& z);

/// J(x,y,z) = (xy) alpha(z) + (zx) alpha(y) + (yz) alpha(x).
Element hom_jacobian(const HomAlgebra& h, const Element& x, const Element& y,
                     const Element& z);

/// Position permutation of four arguments: letter k moves to slot perm[k].
using Perm4 = std::array<int, 4>;

/// The twelve composites (1 2 3)^i (1 2 3 4)^j indexing the left sum.
const std::array<Perm4, 12>& f_left_permutations();
/// {Id, (1 3), (2 3), (1 4), (2 4), (1 3)(2 4)} indexing the right sum.
const std::array<Perm4, 6>& f_right_permutations();

struct FComponents {
  Element f_left;
  Element f_right;
  Element f;  // f_left - f_right
};

/// Quartic linearization of x^4 = alpha(x^2) alpha(x^2):
/// F_L sums ((x . y) alpha(z)) alpha^2(w) over the twelve permuted argument
/// arrangements, F_R sums alpha(x . y) alpha(z . w) over six, with
/// x . y = xy + yx.
FComponents f_components(const HomAlgebra& h, const Element& x, const Element& y,
                         const Element& z, const Element& w);

/// B(x) = (x^2 alpha(x)) alpha^2(x) - alpha(x^2) alpha(x^2).
Element defect_b(const HomAlgebra& h, const Element& x);
/// Quadratic polarization of B.
Element defect_d(const HomAlgebra& h, const Element& x, const Element& y);
/// Cubic polarization of B.
Element defect_e(const HomAlgebra& h, const Element& x, const Element& y,
                 const Element& z);

}  // namespace homalg
