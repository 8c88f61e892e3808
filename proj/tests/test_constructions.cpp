#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homalg/constructions.hpp"
#include "homalg/hom_calculus.hpp"
#include "homalg/seeded_random.hpp"

using namespace homalg;

namespace {

Element e(int dim, int k) { return Element::basis(dim, k); }

}  // namespace

TEST_CASE("doubling the rationals gives the complex numbers") {
  const HomAlgebra c = cayley_dickson(rationals_algebra(), Rational(-1));
  CHECK(c.dim() == 2);
  CHECK(c.mul(e(2, 1), e(2, 1)) == -e(2, 0));
  CHECK(c.mul(e(2, 0), e(2, 1)) == e(2, 1));
  CHECK(c.is_commutative());
}

TEST_CASE("cayley_dickson preconditions") {
  const HomAlgebra noConj(1, {{0, 0, 0, Rational(1)}}, LinearMap::identity(1));
  CHECK_THROWS_WITH_AS(cayley_dickson(noConj, Rational(-1)), "no-involution",
                       std::invalid_argument);
  const HomAlgebra twisted(1, {{0, 0, 0, Rational(1)}}, LinearMap::zero(1), {},
                           LinearMap::identity(1));
  CHECK_THROWS_WITH_AS(cayley_dickson(twisted, Rational(-1)), "alpha-not-identity",
                       std::invalid_argument);
}

TEST_CASE("tower subalgebra property") {
  // the first 2^k basis vectors of iterate k+1 reproduce iterate k
  for (CdConvention conv : {CdConvention::schafer, CdConvention::baez,
                            CdConvention::reference}) {
    HomAlgebra prev = rationals_algebra();
    for (int level = 1; level <= 4; ++level) {
      const HomAlgebra next = cd_tower(level, Rational(-1), conv);
      const int d = prev.dim();
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const Element p = next.basis_product(i, j);
          for (int k = d; k < next.dim(); ++k) CHECK(p[k].is_zero());
          Element low(d);
          for (int k = 0; k < d; ++k) low[k] = p[k];
          CHECK(low == prev.basis_product(i, j));
        }
      prev = next;
    }
  }
}

TEST_CASE("imaginary units square to -1 and anticommute in every convention") {
  for (CdConvention conv :
       {CdConvention::schafer, CdConvention::baez, CdConvention::schafer_opposite,
        CdConvention::baez_opposite, CdConvention::reference}) {
    const HomAlgebra s = sedenions(conv);
    for (int i = 1; i < 16; ++i) {
      CHECK(s.mul(e(16, i), e(16, i)) == -e(16, 0));
      for (int j = i + 1; j < 16; ++j)
        CHECK(s.mul(e(16, i), e(16, j)) == -s.mul(e(16, j), e(16, i)));
    }
  }
}

TEST_CASE("third doubling iterate is an octonion algebra") {
  const HomAlgebra o = cd_tower(3, Rational(-1));
  CHECK(o.dim() == 8);
  // linearized alternativity: the associator is antisymmetric in adjacent slots
  auto assoc = [&](const Element& x, const Element& y, const Element& z) {
    return o.mul(o.mul(x, y), z) - o.mul(x, o.mul(y, z));
  };
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) {
        const Element a = assoc(e(8, i), e(8, j), e(8, k));
        CHECK((a + assoc(e(8, j), e(8, i), e(8, k))).is_zero());
        CHECK((a + assoc(e(8, i), e(8, k), e(8, j))).is_zero());
      }
}

TEST_CASE("sedenion left-alternativity witness") {
  const HomAlgebra s = sedenions();
  const Element x = e(16, 1) + e(16, 8);
  const Element y = e(16, 3) + e(16, 9);
  CHECK(s.mul(s.mul(x, x), y) == Rational(-2) * y);
  CHECK(s.mul(s.mul(x, x), y) != s.mul(x, s.mul(x, y)));
}

TEST_CASE("octonion fixture entries") {
  const HomAlgebra o = octonions();
  CHECK(o.mul(e(8, 3), e(8, 5)) == e(8, 2));
  CHECK(o.mul(e(8, 7), e(8, 7)) == -e(8, 0));
  CHECK(o.mul(e(8, 0), e(8, 6)) == e(8, 6));
}

TEST_CASE("octonion automorphism images and multiplicativity") {
  const LinearMap a = octonion_automorphism();
  CHECK(a.apply(e(8, 2)) == e(8, 6));
  CHECK(a.apply(a.apply(e(8, 1))) == e(8, 2));
  CHECK(twisted_octonions().is_multiplicative());
}

TEST_CASE("yau twist") {
  const HomAlgebra o = octonions();
  SUBCASE("identity morphism leaves the algebra unchanged") {
    CHECK(yau_twist(o, LinearMap::identity(8)).same_tensors(o));
  }
  SUBCASE("twisted octonion entries from the reference table") {
    const HomAlgebra t = twisted_octonions();
    CHECK(t.mul(e(8, 1), e(8, 2)) == e(8, 1));
    CHECK(t.mul(e(8, 5), e(8, 7)) == e(8, 1));
  }
  SUBCASE("non-morphisms are rejected") {
    LinearMap bad = LinearMap::identity(8);
    bad.at(3, 1) = Rational(2);
    CHECK_THROWS_WITH_AS(yau_twist(o, bad), "not-morphism", std::invalid_argument);
  }
  SUBCASE("twisting preserves multiplicativity") {
    const HomAlgebra t = twisted_octonions();
    const HomAlgebra t2 = yau_twist(t, t.alpha());
    CHECK(t2.is_multiplicative());
  }
}

TEST_CASE("derived algebras") {
  SUBCASE("identity twisting map gives the algebra back") {
    const HomAlgebra o = octonions();
    CHECK(derived_hom_algebra(o, 1).same_tensors(o));
    CHECK(derived_hom_algebra(o, 3).same_tensors(o));
  }
  SUBCASE("(A^1)^1 equals A^2 as tensors") {
    const HomAlgebra t = twisted_octonions();
    CHECK(derived_hom_algebra(derived_hom_algebra(t, 1), 1)
              .same_tensors(derived_hom_algebra(t, 2)));
  }
  SUBCASE("first derived product is alpha^2 of the untwisted product") {
    const HomAlgebra t = twisted_octonions();
    const HomAlgebra d1 = derived_hom_algebra(t, 1);
    const HomAlgebra o = octonions();
    const LinearMap a = octonion_automorphism();
    const LinearMap a2 = a.compose(a);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        CHECK(d1.basis_product(i, j) == a2.apply(o.basis_product(i, j)));
    CHECK(d1.alpha() == a2);
  }
  SUBCASE("non-multiplicative input is rejected") {
    const HomAlgebra o = octonions();
    LinearMap bad = LinearMap::identity(8);
    bad.at(0, 1) = Rational(1);
    const HomAlgebra h(8, o.structure_constants(), bad);
    CHECK_THROWS_WITH_AS(derived_hom_algebra(h, 1), "not-multiplicative",
                         std::invalid_argument);
  }
}

TEST_CASE("lambda, plus and minus algebras") {
  const HomAlgebra o = octonions();
  SUBCASE("lambda = 1 is the algebra, lambda = 0 the opposite") {
    CHECK(lambda_algebra(o, Rational(1)).same_tensors(o));
    const HomAlgebra opp = lambda_algebra(o, Rational(0));
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        CHECK(opp.basis_product(i, j) == o.basis_product(j, i));
  }
  SUBCASE("plus algebra of the octonions kills e1 e2") {
    CHECK(plus_algebra(o).mul(e(8, 1), e(8, 2)).is_zero());
    CHECK(lambda_algebra(o, Rational(1, 2)).same_tensors(plus_algebra(o)));
  }
  SUBCASE("minus algebra is alternating") {
    const HomAlgebra m = minus_algebra(o);
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
      const Element x = draw_element(rng, 8, 9);
      CHECK(m.mul(x, x).is_zero());
    }
  }
  SUBCASE("multiplicativity transfers to every interpolation") {
    const HomAlgebra t = twisted_octonions();
    for (const Rational& lam : {Rational(0), Rational(1, 2), Rational(2), Rational(-3)})
      CHECK(lambda_algebra(t, lam).is_multiplicative());
  }
}

TEST_CASE("basic quadruples") {
  const HomAlgebra s = sedenions();
  CHECK(is_basic_quadruple(s, {{1, 2, 4, 8}}));
  CHECK(is_basic_quadruple(s, {{5, 7, 6, 15}}));
  CHECK_FALSE(is_basic_quadruple(s, {{1, 2, 3, 8}}));   // e3 = +- e1 e2
  CHECK_FALSE(is_basic_quadruple(s, {{1, 2, 4, 7}}));   // e7 = +- (e1 e2) e4
  CHECK_FALSE(is_basic_quadruple(s, {{1, 1, 4, 8}}));   // repeated index
  CHECK_FALSE(is_basic_quadruple(s, {{0, 2, 4, 8}}));   // identity not allowed
}

TEST_CASE("quadruple automorphism closure") {
  const HomAlgebra s = sedenions();
  SUBCASE("src = dst gives the identity") {
    CHECK(quadruple_automorphism(s, {{1, 2, 4, 8}}, {{1, 2, 4, 8}}).is_identity());
  }
  SUBCASE("the reference quadruple pair extends to a verified automorphism") {
    const LinearMap b = quadruple_automorphism(s, {{1, 2, 4, 8}}, {{5, 7, 6, 15}});
    CHECK(b.apply(e(16, 8)) == e(16, 15));
    // frozen closure images on the calibrated table
    CHECK(b.apply(e(16, 3)) == e(16, 2));
    CHECK(b.apply(e(16, 5)) == -e(16, 3));
    CHECK(b.apply(e(16, 9)) == -e(16, 10));
    CHECK(b.apply(e(16, 14)) == e(16, 14));
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j)
        CHECK(b.apply(s.basis_product(i, j)) == s.mul(b.column(i), b.column(j)));
  }
  SUBCASE("images of an automorphism reproduce it through closure") {
    const LinearMap b = quadruple_automorphism(s, {{1, 2, 4, 8}}, {{5, 7, 6, 15}});
    const LinearMap again = quadruple_automorphism(s, {{5, 7, 6, 15}}, {{1, 2, 4, 8}});
    CHECK(b.compose(again).is_identity());
  }
  SUBCASE("the same pair is inconsistent under the plain schafer table") {
    const HomAlgebra plain = sedenions(CdConvention::schafer);
    CHECK_THROWS_AS(quadruple_automorphism(plain, {{1, 2, 4, 8}}, {{5, 7, 6, 15}}),
                    std::invalid_argument);
  }
}

TEST_CASE("sedenion convention calibration") {
  const SedenionCalibration& cal = sedenion_calibration();
  CHECK(cal.chosen == CdConvention::reference);
  CHECK(cal.closure_ok);
  CHECK(cal.third_power_witness_ok);
  CHECK_FALSE(cal.alpha_list_certified);   // four of the reference images differ
  CHECK(cal.alpha_images_matched == 12);
  CHECK(cal.metadata().at("sedenion-convention") == "reference");
}

TEST_CASE("hermitian 27-dimensional algebra") {
  const HomAlgebra j = hermitian_jordan();
  CHECK(j.dim() == 27);
  CHECK(j.is_commutative());
  SUBCASE("diagonal units multiply entrywise") {
    // (d1 + 2 d2) * (3 d1 + d2) = 3 d1 + 2 d2
    Element a(27), b(27);
    a[0] = Rational(1); a[1] = Rational(2);
    b[0] = Rational(3); b[1] = Rational(1);
    Element expect(27);
    expect[0] = Rational(3); expect[1] = Rational(2);
    CHECK(j.mul(a, b) == expect);
  }
  SUBCASE("diagonal units are orthogonal idempotents") {
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        const Element p = j.mul(e(27, i), e(27, k));
        CHECK(p == (i == k ? e(27, i) : Element::zero(27)));
      }
  }
}

TEST_CASE("entrywise extension of the octonion automorphism") {
  const LinearMap ext = extend_entrywise(octonion_automorphism());
  CHECK(ext.dim() == 27);
  for (int i = 0; i < 3; ++i) CHECK(ext.apply(e(27, i)) == e(27, i));
  // x-slot coordinate 1 maps to x-slot coordinate 5
  CHECK(ext.apply(e(27, 3 + 1)) == e(27, 3 + 5));
  SUBCASE("rejects maps that move the unit") {
    LinearMap bad(8);
    for (int i = 0; i < 8; ++i) bad.at((i + 1) % 8, i) = Rational(1);
    CHECK_THROWS_WITH_AS(extend_entrywise(bad), "bad-automorphism", std::invalid_argument);
  }
  SUBCASE("rejects non-automorphisms") {
    LinearMap bad = LinearMap::identity(8);
    bad.at(2, 1) = Rational(1);
    CHECK_THROWS_WITH_AS(extend_entrywise(bad), "bad-automorphism", std::invalid_argument);
  }
  SUBCASE("the twisted 27-dimensional algebra is a multiplicative hom-jordan candidate") {
    const HomAlgebra jt = twisted_jordan27();
    CHECK(jt.is_multiplicative());
    CHECK(jt.is_commutative());
  }
}
