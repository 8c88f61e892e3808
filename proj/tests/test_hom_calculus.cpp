#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "homalg/constructions.hpp"
#include "homalg/hom_calculus.hpp"
#include "homalg/seeded_random.hpp"

using namespace homalg;

namespace {

Element e(int dim, int k) { return Element::basis(dim, k); }

}  // namespace

TEST_CASE("hom powers") {
  const HomAlgebra t = twisted_octonions();
  const Element x = e(8, 1);
  CHECK(hom_power(t, x, 1) == x);
  CHECK(hom_power(t, x, 2) == -e(8, 0));
  CHECK(hom_power(t, x, 3) == -e(8, 2));
  CHECK(hom_power(t, x, 4) == e(8, 0));
  CHECK_THROWS_AS(hom_power(t, x, 0), std::invalid_argument);
  SUBCASE("identity twisting map reduces to right powers") {
    const HomAlgebra o = octonions();
    CHECK(hom_power(o, e(8, 1), 3) == -e(8, 1));  // (e1 e1) e1
  }
  SUBCASE("defining recursion on random elements") {
    const HomAlgebra algebras[] = {octonions(), twisted_octonions(), sedenions()};
    Rng rng(23);
    for (const HomAlgebra& h : algebras)
      for (int trial = 0; trial < 5; ++trial) {
        const Element y = draw_element(rng, h.dim(), 4);
        PowerCache cache(h, y);
        for (int n = 2; n <= 8; ++n) {
          Element an2 = y;
          for (int k = 0; k < n - 2; ++k) an2 = h.alpha().apply(an2);
          CHECK(cache.power(n) == h.mul(cache.power(n - 1), an2));
        }
      }
  }
}

TEST_CASE("power pairs") {
  const HomAlgebra t = twisted_octonions();
  SUBCASE("x^{n-1,1} recovers the power") {
    Rng rng(29);
    for (int trial = 0; trial < 10; ++trial) {
      const Element x = draw_element(rng, 8, 9);
      PowerCache cache(t, x);
      for (int n = 2; n <= 6; ++n)
        CHECK(power_pair(cache, n - 1, 1) == cache.power(n));
    }
  }
  CHECK(power_pair(t, e(8, 1), 2, 2) == e(8, 0));
  CHECK_THROWS_AS(power_pair(t, e(8, 1), 0, 1), std::invalid_argument);
  SUBCASE("the untwisted sedenion product with the quadruple map fails third power") {
    const HomAlgebra s = sedenions();
    const LinearMap beta =
        quadruple_automorphism(s, {{1, 2, 4, 8}}, {{5, 7, 6, 15}});
    std::vector<ScEntry> sc;
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) {
        const Element p = beta.apply(s.basis_product(i, j));
        for (int k = 0; k < 16; ++k)
          if (!p[k].is_zero()) sc.push_back({i, j, k, p[k]});
      }
    const HomAlgebra plain = s.with_product(sc, LinearMap::identity(16));
    const Element x = e(16, 0) + e(16, 1);
    CHECK(power_pair(plain, x, 1, 2) != power_pair(plain, x, 2, 1));
  }
}

TEST_CASE("hom associator") {
  const HomAlgebra t = twisted_octonions();
  const Element x = e(8, 1);
  const Element ax = t.alpha().apply(x), aax = t.alpha().apply(ax);
  CHECK(hom_associator(t, x, ax, aax) == Rational(-2) * e(8, 1));
  SUBCASE("vanishes on associative algebras with identity twist") {
    // group algebra of Z/3: e_i e_j = e_{i+j mod 3}
    std::vector<ScEntry> sc;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) sc.push_back({i, j, (i + j) % 3, Rational(1)});
    const HomAlgebra z3(3, sc, LinearMap::identity(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          CHECK(hom_associator(z3, e(3, i), e(3, j), e(3, k)).is_zero());
  }
  CHECK(hom_associator(octonions(), e(8, 1), e(8, 2), e(8, 3)) ==
        Rational(-2) * e(8, 6));
}

TEST_CASE("cyclic associator and hom jacobian") {
  const HomAlgebra t = twisted_octonions();
  Rng rng(31);
  SUBCASE("S(x,x,x) = 3 as(x,x,x)") {
    for (int trial = 0; trial < 10; ++trial) {
      const Element x = draw_element(rng, 8, 9);
      CHECK(cyclic_associator(t, x, x, x) == Rational(3) * hom_associator(t, x, x, x));
    }
  }
  SUBCASE("jacobian of the minus algebra is S (Id - (2 3))") {
    const HomAlgebra algebras[] = {octonions(), twisted_octonions(),
                                   sedenions()};
    for (const HomAlgebra& h : algebras) {
      const HomAlgebra m = minus_algebra(h);
      for (int trial = 0; trial < 8; ++trial) {
        const Element x = draw_element(rng, h.dim(), 4);
        const Element y = draw_element(rng, h.dim(), 4);
        const Element z = draw_element(rng, h.dim(), 4);
        CHECK(hom_jacobian(m, x, y, z) ==
              cyclic_associator(h, x, y, z) - cyclic_associator(h, x, z, y));
      }
    }
  }
  SUBCASE("S vanishes on associative algebras") {
    std::vector<ScEntry> sc;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) sc.push_back({i, j, (i + j) % 2, Rational(1)});
    const HomAlgebra z2(2, sc, LinearMap::identity(2));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          CHECK(cyclic_associator(z2, e(2, i), e(2, j), e(2, k)).is_zero());
  }
}

TEST_CASE("left permutation set of the quartic linearization") {
  const auto& left = f_left_permutations();
  SUBCASE("twelve distinct permutations") {
    std::set<std::array<int, 4>> seen(left.begin(), left.end());
    CHECK(seen.size() == 12);
  }
  SUBCASE("the twelve terms are the twelve distinct argument arrangements") {
    // ((a . b) alpha(c)) alpha^2(d) is symmetric in {a, b}: classify each
    // permutation by ({slot0, slot1}, slot2, slot3) in terms of letters
    std::set<std::array<int, 4>> classes;
    for (const Perm4& sigma : left) {
      Perm4 inv{};
      for (int k = 0; k < 4; ++k) inv[sigma[k]] = k;
      std::array<int, 4> cls = {std::min(inv[0], inv[1]), std::max(inv[0], inv[1]),
                                inv[2], inv[3]};
      classes.insert(cls);
    }
    CHECK(classes.size() == 12);
  }
  SUBCASE("right set covers the six pair-partition arrangements") {
    const auto& right = f_right_permutations();
    std::set<std::array<int, 4>> classes;
    for (const Perm4& sigma : right) {
      Perm4 inv{};
      for (int k = 0; k < 4; ++k) inv[sigma[k]] = k;
      classes.insert({std::min(inv[0], inv[1]), std::max(inv[0], inv[1]),
                      std::min(inv[2], inv[3]), std::max(inv[2], inv[3])});
    }
    CHECK(classes.size() == 6);
  }
}

TEST_CASE("quartic linearization identities") {
  const HomAlgebra algebras[] = {twisted_octonions(), sedenions(), octonions()};
  Rng rng(37);
  for (const HomAlgebra& h : algebras) {
    const int d = h.dim();
    for (int trial = 0; trial < 6; ++trial) {
      const Element x = draw_element(rng, d, 4), y = draw_element(rng, d, 4);
      const Element z = draw_element(rng, d, 4), w = draw_element(rng, d, 4);
      CHECK(f_components(h, x, x, x, x).f == Rational(24) * defect_b(h, x));
      CHECK(defect_d(h, x, x) == Rational(6) * defect_b(h, x));
      CHECK(defect_e(h, x, y, x) == Rational(2) * defect_d(h, x, y));
      CHECK(f_components(h, x, y, z, y).f == Rational(2) * defect_e(h, x, y, z));
      // F_R is symmetric in its last two arguments
      CHECK(f_components(h, x, y, z, w).f_right == f_components(h, x, y, w, z).f_right);
    }
  }
}

TEST_CASE("F is 4-linear") {
  const HomAlgebra t = twisted_octonions();
  Rng rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    const Rational a(draw_int(rng, -9, 9), draw_int(rng, 1, 9));
    const Rational b(draw_int(rng, -9, 9), draw_int(rng, 1, 9));
    const Element x = draw_element(rng, 8, 4), x2 = draw_element(rng, 8, 4);
    const Element y = draw_element(rng, 8, 4), z = draw_element(rng, 8, 4);
    const Element w = draw_element(rng, 8, 4);
    const Element lhs = f_components(t, a * x + b * x2, y, z, w).f;
    CHECK(lhs == a * f_components(t, x, y, z, w).f + b * f_components(t, x2, y, z, w).f);
  }
}

TEST_CASE("twist power law") {
  const HomAlgebra s = sedenions();
  const LinearMap beta = quadruple_automorphism(s, {{1, 2, 4, 8}}, {{5, 7, 6, 15}});
  const HomAlgebra sb = yau_twist(s, beta);
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const Element x = draw_element(rng, 16, 4);
    PowerCache plain(s, x), twisted(sb, x);
    for (int n = 1; n <= 6; ++n)
      CHECK(twisted.power(n) == beta.power(n - 1).apply(plain.power(n)));
  }
}

TEST_CASE("interpolated algebras share Hom-powers") {
  const HomAlgebra t = twisted_octonions();
  Rng rng(47);
  for (const Rational& lam : {Rational(0), Rational(1, 2), Rational(2), Rational(-3)}) {
    const HomAlgebra al = lambda_algebra(t, lam);
    for (int trial = 0; trial < 10; ++trial) {
      const Element x = draw_element(rng, 8, 9);
      PowerCache base(t, x), inter(al, x);
      for (int l = 1; l <= 6; ++l) CHECK(base.power(l) == inter.power(l));
    }
  }
}
