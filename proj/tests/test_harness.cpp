#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "homalg/algebra_io.hpp"
#include "homalg/constructions.hpp"
#include "homalg/random_gen.hpp"
#include "homalg/repro.hpp"

using namespace homalg;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("homalg_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("algebra file round trips are exact") {
  for (const HomAlgebra& h : {octonions(), twisted_octonions(), sedenions(),
                              hermitian_jordan()}) {
    const HomAlgebra back = algebra_from_json(algebra_to_json(h));
    CHECK(back.same_tensors(h));
    CHECK(back.labels() == h.labels());
    CHECK(back.metadata() == h.metadata());
  }
  SUBCASE("through the filesystem") {
    TempFile f("roundtrip.json");
    save_algebra(twisted_octonions(), f.path);
    CHECK(load_algebra(f.path).same_tensors(twisted_octonions()));
  }
  SUBCASE("non-integer rationals survive") {
    const HomAlgebra j = twisted_jordan27();
    CHECK(algebra_from_json(algebra_to_json(j)).same_tensors(j));
  }
}

TEST_CASE("loaded twisted octonions re-verify as multiplicative") {
  const HomAlgebra back = algebra_from_json(algebra_to_json(twisted_octonions()));
  CHECK(back.is_multiplicative());
}

TEST_CASE("malformed files are rejected with a location") {
  const std::string good = algebra_to_json(octonions());
  SUBCASE("zero denominator") {
    const std::string bad = R"({"format_version":1,"dim":1,
      "structure_constants":[[0,0,0,"1/0"]],"alpha":[["1"]]})";
    CHECK_THROWS_WITH_AS(algebra_from_json(bad),
                         "/structure_constants[0]: zero-denominator",
                         std::invalid_argument);
  }
  SUBCASE("unknown fields carry their path") {
    const std::string bad = R"({"format_version":1,"dim":1,"bogus":true,
      "structure_constants":[],"alpha":[["1"]]})";
    try {
      algebra_from_json(bad);
      FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("bogus") != std::string::npos);
      CHECK(std::string(e.what()).find("/bogus") != std::string::npos);
    }
  }
  SUBCASE("index out of range") {
    const std::string bad = R"({"format_version":1,"dim":2,
      "structure_constants":[[0,0,2,"1"]],"alpha":[["1","0"],["0","1"]]})";
    CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
  }
  SUBCASE("syntax errors carry position info") {
    try {
      algebra_from_json("{\"dim\": ");
      FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("parse error") != std::string::npos);
    }
  }
  SUBCASE("alpha shape mismatch") {
    const std::string bad = R"({"format_version":1,"dim":2,
      "structure_constants":[],"alpha":[["1","0"]]})";
    CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
  }
}

TEST_CASE("random generators are deterministic and honor flags") {
  const HomAlgebra a = random_hom_algebra(3, 0.6, 77);
  const HomAlgebra b = random_hom_algebra(3, 0.6, 77);
  CHECK(a.same_tensors(b));
  const HomAlgebra c = random_hom_algebra(3, 0.6, 78);
  CHECK_FALSE(a.same_tensors(c));

  SUBCASE("alpha identity flag") {
    RandomAlgebraFlags flags;
    flags.alpha_identity = true;
    const HomAlgebra h = random_hom_algebra(4, 0.5, 5, flags);
    CHECK(h.alpha().is_identity());
    CHECK(h.is_multiplicative());
  }
  SUBCASE("multiplicative-by-construction flag") {
    RandomAlgebraFlags flags;
    flags.alpha_multiplicative = true;
    for (std::uint64_t seed = 0; seed < 10; ++seed)
      CHECK(random_hom_algebra(3, 0.8, seed, flags).is_multiplicative());
  }
  SUBCASE("dimension cap") {
    CHECK_THROWS_AS(random_hom_algebra(7, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_hom_algebra(3, 0.0, 1), std::invalid_argument);
  }
  SUBCASE("random elements have bounded integer coordinates") {
    const HomAlgebra h = octonions();
    const Element x = random_element(h, 9, 123);
    for (int i = 0; i < 8; ++i) CHECK(x[i].integer_in_range(-9, 9));
    CHECK(random_element(h, 9, 123) == x);
  }
}

TEST_CASE("repro reports are deterministic and sorted") {
  ReproOptions opts;
  opts.filter = "07-sedenion";
  opts.seed = 99;
  const auto r1 = run_repro(opts);
  const auto r2 = run_repro(opts);
  CHECK(repro_report_lines(r1) == repro_report_lines(r2));
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].id == "07-sedenion-square-law");
  CHECK(r1[0].verdict == "pass");

  SUBCASE("ids come out sorted") {
    ReproOptions all;
    all.filter = "oct";
    const auto rs = run_repro(all);
    for (std::size_t i = 1; i < rs.size(); ++i) CHECK(rs[i - 1].id < rs[i].id);
  }
}

TEST_CASE("conditional scenarios report calibration metadata") {
  ReproOptions opts;
  opts.filter = "15-sedenion-alpha-images";
  const auto rs = run_repro(opts);
  REQUIRE(rs.size() == 1);
  // the reference image list is not realizable; the scenario must skip, not fail
  CHECK(rs[0].verdict == "conditional-skip");
  CHECK(rs[0].detail.find("12/16") != std::string::npos);
}
