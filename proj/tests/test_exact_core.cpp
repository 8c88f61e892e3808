#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homalg/constructions.hpp"
#include "homalg/hom_algebra.hpp"
#include "homalg/linear_map.hpp"
#include "homalg/rational.hpp"
#include "homalg/seeded_random.hpp"

using namespace homalg;

namespace {

Element e(int dim, int k) { return Element::basis(dim, k); }

HomAlgebra zero_algebra(int dim) {
  return HomAlgebra(dim, {}, LinearMap::identity(dim));
}

}  // namespace

TEST_CASE("rationals normalize and parse") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4).denominator() == "2");
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK(Rational::parse("0/5").is_zero());
  CHECK_THROWS_WITH_AS(Rational::parse("1/0"), "zero-denominator", std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational field ops are exact") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const Rational a(draw_int(rng, -50, 50), draw_int(rng, 1, 30));
    const Rational b(draw_int(rng, -50, 50), draw_int(rng, 1, 30));
    const Rational c(draw_int(rng, -50, 50), draw_int(rng, 1, 30));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("element arithmetic and printing") {
  Element x{Rational(1), Rational(0), Rational(-2)};
  Element y{Rational(0), Rational(1, 2), Rational(2)};
  CHECK((x + y).str() == "e0 + 1/2 e1");
  CHECK((x + y - y) == x);
  CHECK(Element::zero(3).str() == "0");
  CHECK_THROWS_AS(x += Element::zero(4), std::invalid_argument);
}

TEST_CASE("linear map column convention and powers") {
  const LinearMap a = octonion_automorphism();
  // apply(map, e_j) equals column j
  for (int j = 0; j < 8; ++j) CHECK(a.apply(e(8, j)) == a.column(j));
  CHECK(a.apply(e(8, 1)) == e(8, 5));
  CHECK(a.power(0).is_identity());
  CHECK(a.power(2).apply(e(8, 1)) == e(8, 2));  // alpha(e5) = e2
  CHECK(a.power(7).is_identity());              // index cycling has order 7
  CHECK_THROWS_AS(a.power(-1), std::invalid_argument);
}

TEST_CASE("mul on the octonion table") {
  const HomAlgebra o = octonions();
  CHECK(o.mul(e(8, 1), e(8, 2)) == e(8, 4));
  SUBCASE("e0 is a two-sided identity") {
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
      const Element x = draw_element(rng, 8, 9);
      CHECK(o.mul(e(8, 0), x) == x);
      CHECK(o.mul(x, e(8, 0)) == x);
    }
  }
  SUBCASE("zero algebra multiplies to zero") {
    const HomAlgebra z = zero_algebra(4);
    Rng rng(4);
    const Element x = draw_element(rng, 4, 9), y = draw_element(rng, 4, 9);
    CHECK(z.mul(x, y).is_zero());
  }
  CHECK_THROWS_AS(o.mul(e(8, 0), Element::zero(4)), std::invalid_argument);
}

TEST_CASE("op_mul, commutator and bullet") {
  const HomAlgebra o = octonions();
  CHECK(o.op_mul(e(8, 1), e(8, 2)) == -e(8, 4));  // e2 e1 = -e4
  SUBCASE("commutative algebra has op_mul = mul") {
    const HomAlgebra j = hermitian_jordan();
    Rng rng(5);
    const Element x = draw_element(rng, 27, 3), y = draw_element(rng, 27, 3);
    CHECK(j.op_mul(x, y) == j.mul(x, y));
  }
  SUBCASE("tau fixes the diagonal") {
    Rng rng(6);
    const Element x = draw_element(rng, 8, 9);
    CHECK(o.op_mul(x, x) == o.mul(x, x));
  }
  CHECK(o.commutator(e(8, 1), e(8, 1)).is_zero());
  CHECK(o.commutator(e(8, 1), e(8, 2)) == Rational(2) * e(8, 4));
  CHECK(o.bullet(e(8, 1), e(8, 1)) == Rational(-2) * e(8, 0));
}

TEST_CASE("bilinearity at random rational scalars") {
  const HomAlgebra o = octonions();
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const Rational a(draw_int(rng, -9, 9), draw_int(rng, 1, 9));
    const Rational b(draw_int(rng, -9, 9), draw_int(rng, 1, 9));
    const Element x = draw_element(rng, 8, 9), x2 = draw_element(rng, 8, 9);
    const Element y = draw_element(rng, 8, 9);
    CHECK(o.mul(a * x + b * x2, y) == a * o.mul(x, y) + b * o.mul(x2, y));
    CHECK(o.mul(y, a * x + b * x2) == a * o.mul(y, x) + b * o.mul(y, x2));
  }
}

TEST_CASE("tau involution and bullet/commutator reconstruction") {
  const HomAlgebra o = octonions();
  const Rational half(1, 2);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const Element ei = e(8, i), ej = e(8, j);
      CHECK(o.op_mul(ei, ej) == o.mul(ej, ei));
      CHECK(half * (o.bullet(ei, ej) + o.commutator(ei, ej)) == o.mul(ei, ej));
    }
}

TEST_CASE("conjugation is an involutive anti-automorphism on the tower") {
  for (int level = 1; level <= 4; ++level) {
    const HomAlgebra h = cd_tower(level, Rational(-1));
    const int d = h.dim();
    REQUIRE(h.conjugation());
    for (int i = 0; i < d; ++i) {
      CHECK(h.conj(h.conj(e(d, i))) == e(d, i));
      for (int j = 0; j < d; ++j)
        CHECK(h.conj(h.mul(e(d, i), e(d, j))) == h.mul(h.conj(e(d, j)), h.conj(e(d, i))));
    }
  }
}

TEST_CASE("is_multiplicative") {
  CHECK(octonions().is_multiplicative());  // alpha = Id
  CHECK(twisted_octonions().is_multiplicative());
  SUBCASE("zero twisting map is multiplicative") {
    const HomAlgebra o = octonions();
    const HomAlgebra z(8, o.structure_constants(), LinearMap::zero(8));
    CHECK(z.is_multiplicative());
  }
  SUBCASE("a generic non-morphism fails") {
    const HomAlgebra o = octonions();
    LinearMap bad = LinearMap::identity(8);
    bad.at(0, 1) = Rational(1);
    const HomAlgebra h(8, o.structure_constants(), bad);
    CHECK_FALSE(h.is_multiplicative());
  }
}

TEST_CASE("is_commutative") {
  CHECK_FALSE(octonions().is_commutative());
  CHECK(plus_algebra(octonions()).is_commutative());
  CHECK(zero_algebra(1).is_commutative());
}

TEST_CASE("structure constant validation and sparse/dense paths") {
  CHECK_THROWS_AS(HomAlgebra(2, {{0, 0, 5, Rational(1)}}, LinearMap::identity(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(HomAlgebra(2, {}, LinearMap::identity(3)), std::invalid_argument);
  // monomial tables stay sparse; a saturated tensor takes the dense path
  CHECK_FALSE(octonions().dense_path());
  std::vector<ScEntry> full;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) full.push_back({i, j, k, Rational(1)});
  const HomAlgebra dense(2, full, LinearMap::identity(2));
  CHECK(dense.dense_path());
  const HomAlgebra sparse(2, {{0, 0, 0, Rational(1)}}, LinearMap::identity(2));
  CHECK_FALSE(sparse.dense_path());
  // both paths agree
  Rng rng(9);
  const Element x = draw_element(rng, 2, 9), y = draw_element(rng, 2, 9);
  Element byHand = Element::zero(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) byHand[k] += x[i] * y[j];
  CHECK(dense.mul(x, y) == byHand);
}
