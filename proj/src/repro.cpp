#include "homalg/repro.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "homalg/constructions.hpp"
#include "homalg/hom_calculus.hpp"
#include "homalg/identity_engine.hpp"
#include "homalg/random_gen.hpp"
#include "homalg/seeded_random.hpp"

namespace homalg {

namespace {

struct Outcome {
  bool pass = true;
  bool conditional_skip = false;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      append("FAILED: " + what);
    }
  }
  void append(const std::string& s) {
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
};

Element basis16(int k) { return Element::basis(16, k); }

LinearMap reference_quadruple_map(const HomAlgebra& s) {
  return quadruple_automorphism(s, BasicQuadruple{{1, 2, 4, 8}},
                                BasicQuadruple{{5, 7, 6, 15}});
}

HomAlgebra untwisted_pair(const HomAlgebra& s, const LinearMap& beta) {
  // (S, beta mu, Id): the twisted product with the identity twisting map
  std::vector<ScEntry> sc;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j) {
      const Element p = beta.apply(s.basis_product(i, j));
      for (int k = 0; k < s.dim(); ++k)
        if (!p[k].is_zero()) sc.push_back({i, j, k, p[k]});
    }
  return s.with_product(sc, LinearMap::identity(s.dim()));
}

// --- scenarios -------------------------------------------------------------

Outcome oct_fixture_automorphism(const ReproOptions&) {
  Outcome out;
  const HomAlgebra o = octonions();
  const LinearMap a = octonion_automorphism();
  int checked = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      out.require(a.apply(o.basis_product(i, j)) ==
                      o.mul(a.column(i), a.column(j)),
                  "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
      ++checked;
    }
  out.append(std::to_string(checked) + "/64 basis pairs multiplicative");
  return out;
}

Outcome oct_twisted_table(const ReproOptions&) {
  Outcome out;
  const HomAlgebra t = twisted_octonions();
  const auto& cells = octonion_twisted_cells();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Element expect(8);
      expect[cells[i][j].second] = Rational(cells[i][j].first);
      out.require(t.basis_product(i, j) == expect,
                  "cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  out.append("all 64 twisted cells match the reference table");
  return out;
}

Outcome oct_hom_associator_witness(const ReproOptions&) {
  Outcome out;
  const HomAlgebra t = twisted_octonions();
  const Element e1 = Element::basis(8, 1);
  const Element a1 = t.alpha().apply(e1);
  const Element a2 = t.alpha().apply(a1);
  const Element as = hom_associator(t, e1, a1, a2);
  Element expect(8);
  expect[1] = Rational(-2);
  out.require(as == expect, "associator value " + as.str());
  out.append("as(e1, alpha(e1), alpha^2(e1)) = " + as.str());
  return out;
}

Outcome oct_classification(const ReproOptions& opts) {
  Outcome out;
  const HomAlgebra t = twisted_octonions();
  out.require(t.is_multiplicative(), "multiplicative");
  const CheckReport alt = class_predicate(t, AlgebraClass::hom_alternative);
  out.require(alt.passed(), "hom-alternative");
  const CheckReport hpa = decide_hpa(t, opts.seed);
  out.require(hpa.passed(), "decide-hpa");
  for (int n = 5; n <= 8; ++n) {
    const CheckReport r = check_nth_hpa_random(t, n, opts.trials,
                                               opts.seed + static_cast<std::uint64_t>(n));
    out.require(r.passed(), "nth-hpa n=" + std::to_string(n));
  }
  out.append("multiplicative, hom-alternative (512 triples), hpa, n=5..8 x" +
             std::to_string(opts.trials) + " trials");
  return out;
}

Outcome sedenion_tower(const ReproOptions&) {
  Outcome out;
  const HomAlgebra s = sedenions();
  const Element e0 = basis16(0);
  for (int i = 1; i < 16; ++i) {
    out.require(s.mul(basis16(i), basis16(i)) == -e0,
                "e" + std::to_string(i) + " squared");
    for (int j = i + 1; j < 16; ++j)
      out.require(s.mul(basis16(i), basis16(j)) == -s.mul(basis16(j), basis16(i)),
                  "anticommutation " + std::to_string(i) + "," + std::to_string(j));
  }
  const Element x = basis16(1) + basis16(8);
  const Element y = basis16(3) + basis16(9);
  const Element lhs = s.mul(s.mul(x, x), y);
  out.require(lhs == Rational(-2) * y, "(xx)y = -2(e3+e9), got " + lhs.str());
  const Element defect = lhs - s.mul(x, s.mul(x, y));
  out.require(!defect.is_zero(), "left alternativity must fail at the witness");
  out.append("(xx)y = " + lhs.str() + "; left-alternator defect = " + defect.str());
  return out;
}

Outcome sedenion_quadruple_twist(const ReproOptions& opts) {
  Outcome out;
  const HomAlgebra s = sedenions();
  LinearMap beta(16);
  try {
    beta = reference_quadruple_map(s);
  } catch (const std::exception& e) {
    out.require(false, std::string("quadruple closure: ") + e.what());
    return out;
  }
  out.append("quadruple automorphism verified on 256 pairs");
  const HomAlgebra sb = yau_twist(s, beta);
  out.require(decide_hpa(sb, opts.seed).passed(), "S_beta decide-hpa");

  const HomAlgebra plain = untwisted_pair(s, beta);
  const CheckReport third = is_third_hpa(plain, ThirdMethod::diagonal_polarized);
  out.require(third.failed(), "(S, beta mu, Id) must fail third power associativity");
  bool diagonalWitness = false;
  if (third.witness && third.witness->size() == 1) {
    const Element& w = (*third.witness)[0];
    diagonalWitness = w[0] == Rational(1);
    out.append("witness " + w.str());
  }
  out.require(diagonalWitness, "witness of the form 1 + e_i");

  const auto& cal = sedenion_calibration();
  const Element x = basis16(0) + basis16(1);
  const Element x2 = sb.mul(x, x);
  const Element left = sb.mul(x2, x), right = sb.mul(x, x2);
  if (cal.third_power_witness_ok) {
    Element expL(16), expR(16);
    expL[3] = Rational(-2); expL[6] = Rational(2);
    expR[3] = Rational(-2); expR[6] = Rational(-2);
    out.require(left == expL && right == expR, "third-power witness vectors");
    out.append("(x*x)*x = " + left.str() + ", x*(x*x) = " + right.str());
  } else {
    out.append("conditional: exact third-power vectors not reproduced under " +
               to_string(cal.chosen) + "; failure itself verified above");
  }
  return out;
}

Outcome sedenion_square_law(const ReproOptions& opts) {
  Outcome out;
  const HomAlgebra s = sedenions();
  Rng rng(opts.seed + 7);
  for (int t = 0; t < opts.trials; ++t) {
    const Element x = draw_element(rng, 16, kRandomCoordBound);
    Rational a(0);
    for (int i = 0; i < 16; ++i) a -= x[i] * x[i];
    const Rational b = Rational(2) * x[0];
    Element expect = b * x;
    expect[0] += a;
    out.require(s.mul(x, x) == expect, "x^2 = a + bx at trial " + std::to_string(t));
    if (!out.pass) return out;
  }
  out.append(std::to_string(opts.trials) + " random sedenions satisfy x^2 = a + bx");
  return out;
}

Outcome sedenion_twist_power_law(const ReproOptions& opts) {
  Outcome out;
  const HomAlgebra s = sedenions();
  const LinearMap beta = reference_quadruple_map(s);
  const HomAlgebra sb = yau_twist(s, beta);
  Rng rng(opts.seed + 8);
  for (int t = 0; t < 20; ++t) {
    const Element x = draw_element(rng, 16, kRandomCoordBound);
    PowerCache plain(s, x), twisted(sb, x);
    for (int n = 1; n <= 6; ++n) {
      const Element expect = beta.power(n - 1).apply(plain.power(n));
      out.require(twisted.power(n) == expect,
                  "(x^n)' = beta^{n-1}(x^n) at n=" + std::to_string(n));
      if (!out.pass) return out;
    }
  }
  out.append("20 random sedenions, n <= 6: twisted powers equal beta^{n-1}(x^n)");
  return out;
}

Outcome oct_lambda_suite(const ReproOptions& opts) {
  Outcome out;
  const HomAlgebra t = twisted_octonions();
  const Rational lambdas[4] = {Rational(0), Rational(1, 2), Rational(2), Rational(-3)};
  Rng rng(opts.seed + 9);
  for (const Rational& lam : lambdas) {
    const HomAlgebra al = lambda_algebra(t, lam);
    for (int k = 0; k < 20; ++k) {
      const Element x = draw_element(rng, 8, kRandomCoordBound);
      PowerCache base(t, x), inter(al, x);
      for (int l = 1; l <= 6; ++l) {
        out.require(base.power(l) == inter.power(l),
                    "power coincidence l=" + std::to_string(l) + " lambda=" + lam.str());
        if (!out.pass) return out;
      }
    }
    out.require(decide_hpa(al, opts.seed).passed(), "decide-hpa on A(" + lam.str() + ")");
  }
  out.append("powers coincide for l <= 6 and every A(lambda) stays hom-power associative");
  return out;
}

Outcome f_calculus(const ReproOptions& opts) {
  Outcome out;
  const HomAlgebra s = sedenions();
  const HomAlgebra sb = yau_twist(s, reference_quadruple_map(s));
  Rng rng(opts.seed + 10);
  for (int t = 0; t < opts.trials; ++t) {
    const Element x = draw_element(rng, 16, 4);
    const Element y = draw_element(rng, 16, 4);
    const Element z = draw_element(rng, 16, 4);
    const Element w = draw_element(rng, 16, 4);
    out.require(f_components(sb, x, x, x, x).f == Rational(24) * defect_b(sb, x),
                "F(x,x,x,x) = 24B(x)");
    out.require(defect_d(sb, x, x) == Rational(6) * defect_b(sb, x), "D(x,x) = 6B(x)");
    out.require(defect_e(sb, x, y, x) == Rational(2) * defect_d(sb, x, y),
                "E(x,y,x) = 2D(x,y)");
    out.require(f_components(sb, x, y, z, y).f == Rational(2) * defect_e(sb, x, y, z),
                "F(x,y,z,y) = 2E(x,y,z)");
    (void)w;
    if (!out.pass) return out;
  }
  const HomAlgebra toct = twisted_octonions();
  for (int i = 0; i < 8 && out.pass; ++i)
    for (int j = 0; j < 8 && out.pass; ++j)
      for (int k = 0; k < 8 && out.pass; ++k)
        for (int l = 0; l < 8; ++l) {
          const Element f = f_components(toct, Element::basis(8, i), Element::basis(8, j),
                                         Element::basis(8, k), Element::basis(8, l)).f;
          if (!f.is_zero()) {
            out.require(false, "F nonzero on octonion quadruple");
            break;
          }
        }
  out.append("polarization cascade on " + std::to_string(opts.trials) +
             " random tuples; F = 0 on all 4096 twisted-octonion quadruples");
  return out;
}

Outcome chain_lemmas(const ReproOptions& opts) {
  Outcome out;
  const HomAlgebra toct = twisted_octonions();
  const HomAlgebra s = sedenions();
  const HomAlgebra sb = yau_twist(s, reference_quadruple_map(s));
  const HomAlgebra* algebras[2] = {&toct, &sb};
  const char* names[2] = {"O_alpha", "S_beta"};
  Rng rng(opts.seed + 11);
  for (int a = 0; a < 2; ++a) {
    for (int n = 5; n <= 8; ++n)
      for (int t = 0; t < 20; ++t) {
        const Element x = draw_element(rng, algebras[a]->dim(), 3);
        const CheckReport r = verify_chain_lemmas(*algebras[a], n, x, opts.seed);
        out.require(r.passed(), std::string(names[a]) + " n=" + std::to_string(n) +
                                    (r.note.empty() ? "" : " (" + r.note + ")"));
        if (n == 5) {
          PowerCache cache(*algebras[a], x);
          out.require(cache.power(5) == power_pair(cache, 3, 2),
                      std::string(names[a]) + " x^5 = x^{3,2}");
        }
        if (!out.pass) return out;
      }
  }
  out.append("relations (i), (ii), (v) and the (vi) family hold for n = 5..8 on both algebras");
  return out;
}

Outcome commute_identity(const ReproOptions& opts) {
  Outcome out;
  const HomAlgebra toct = twisted_octonions();
  const HomAlgebra s = sedenions();
  const HomAlgebra sb = yau_twist(s, reference_quadruple_map(s));
  const HomAlgebra* algebras[2] = {&toct, &sb};
  const char* names[2] = {"O_alpha", "S_beta"};
  Rng rng(opts.seed + 12);
  for (int a = 0; a < 2; ++a)
    for (int n = 4; n <= 8; ++n)
      for (int t = 0; t < 20; ++t) {
        const Element x = draw_element(rng, algebras[a]->dim(), 3);
        const CheckReport r = verify_commute_identity(*algebras[a], n, x, opts.seed);
        out.require(r.passed(), std::string(names[a]) + " n=" + std::to_string(n));
        if (!out.pass) return out;
      }
  out.append("all power commutators vanish for n = 4..8 on both algebras");
  return out;
}

Outcome equivalence_sweeps(const ReproOptions& opts) {
  Outcome out;
  std::vector<HomAlgebra> corpus;
  corpus.push_back(octonions());
  corpus.push_back(twisted_octonions());
  corpus.push_back(sedenions());
  corpus.push_back(yau_twist(corpus[2], reference_quadruple_map(corpus[2])));
  corpus.push_back(plus_algebra(corpus[1]));
  corpus.push_back(minus_algebra(corpus[1]));
  corpus.push_back(hermitian_jordan());
  corpus.push_back(twisted_jordan27());
  for (int i = 0; i < 100; ++i) {
    RandomAlgebraFlags flags;
    if (i % 3 == 0) flags.alpha_identity = true;
    if (i % 3 == 1) flags.alpha_multiplicative = true;
    corpus.push_back(random_hom_algebra(3, 0.6, opts.seed + 100 + i, flags));
  }

  int samples = 0;
  for (const HomAlgebra& h : corpus) {
    ++samples;
    const CheckReport m1 = is_third_hpa(h, ThirdMethod::diagonal_polarized);
    const CheckReport m2 = is_third_hpa(h, ThirdMethod::s3_sum);
    const CheckReport m3 = is_third_hpa(h, ThirdMethod::commutator_form);
    const CheckReport m4 = is_third_hpa(h, ThirdMethod::antisymmetric_s);
    const bool agree = m1.passed() == m2.passed() && m2.passed() == m3.passed() &&
                       m3.passed() == m4.passed();
    out.require(agree, "third-hpa methods disagree on sample " + std::to_string(samples));
    out.require(verify_a3_equivalence(h).passed(),
                "a3 equivalence fails on sample " + std::to_string(samples));
    if (h.is_multiplicative()) {
      const bool hpa = decide_hpa(h, opts.seed).passed();
      bool allRandomPass = true;
      for (int n = 3; n <= 6; ++n)
        if (check_nth_hpa_random(h, n, 10, opts.seed + static_cast<std::uint64_t>(7 * n))
                .failed())
          allRandomPass = false;
      out.require(hpa == allRandomPass,
                  "decision vs random n<=6 mismatch on sample " + std::to_string(samples));
    }
    if (!out.pass) return out;
  }
  out.append(std::to_string(samples) +
             " samples: four third-power methods agree, a3 equivalence holds, decisions "
             "match random checks");
  return out;
}

Outcome jordan27(const ReproOptions& opts) {
  Outcome out;
  const HomAlgebra j = hermitian_jordan();
  out.require(j.is_commutative(), "hermitian 27-dim algebra commutative");
  const HomAlgebra jt = twisted_jordan27();
  out.require(jt.is_multiplicative(), "twisted 27-dim algebra multiplicative");
  const CheckReport jid = class_predicate(jt, AlgebraClass::hom_jordan, std::nullopt,
                                          opts.seed + 14);
  out.require(jid.passed(), "hom-jordan identity (probabilistic)");
  if (jid.method == CheckMethod::probabilistic_random)
    out.append("jordan identity in probabilistic mode, " + std::to_string(jid.trials) +
               " trials, seed " + std::to_string(jid.seed));
  Rng rng(opts.seed + 15);
  bool found = false;
  for (int t = 0; t < 20 && !found; ++t) {
    const Element x = draw_element(rng, 27, 2);
    const Element a1 = jt.alpha().apply(x);
    const Element a2 = jt.alpha().apply(a1);
    const Element as = hom_associator(jt, x, a1, a2);
    if (!as.is_zero()) {
      found = true;
      out.append("nonzero as(X, alpha X, alpha^2 X) found at trial " + std::to_string(t));
    }
  }
  out.require(found, "hom-associator witness search");
  return out;
}

Outcome sedenion_alpha_images(const ReproOptions&) {
  Outcome out;
  const auto& cal = sedenion_calibration();
  if (cal.alpha_list_certified) {
    out.append("reference automorphism image list certified on the calibrated table");
    return out;
  }
  out.conditional_skip = true;
  out.append("reference image list matches " + std::to_string(cal.alpha_images_matched) +
             "/16 under convention " + to_string(cal.chosen) +
             "; closure=" + (cal.closure_ok ? "ok" : "failed"));
  return out;
}

Outcome sedenion_x_xy_witness(const ReproOptions&) {
  Outcome out;
  const HomAlgebra s = sedenions();
  const Element x = basis16(1) + basis16(8);
  const Element y = basis16(3) + basis16(9);
  const Element got = s.mul(x, s.mul(x, y));
  Element reference(16);
  reference[3] = Rational(-1); reference[5] = Rational(1); reference[9] = Rational(-2);
  reference[10] = Rational(-1); reference[12] = Rational(-1);
  if (got == reference) {
    out.append("x(xy) matches the reference value");
    return out;
  }
  out.conditional_skip = true;
  out.append("computed x(xy) = " + got.str() + " under convention " +
             to_string(sedenion_calibration().chosen));
  return out;
}

}  // namespace

std::vector<ScenarioResult> run_repro(const ReproOptions& opts) {
  struct Spec {
    const char* id;
    const char* provenance;
    long budget_ms;
    std::function<Outcome(const ReproOptions&)> run;
  };
  const std::vector<Spec> scenarios = {
      {"01-oct-fixture-automorphism", "reference", 1000, oct_fixture_automorphism},
      {"02-oct-twisted-table", "reference", 1000, oct_twisted_table},
      {"03-oct-hom-associator-witness", "reference", 0, oct_hom_associator_witness},
      {"04-oct-classification", "reference", 30000, oct_classification},
      {"05-sedenion-tower", "reference", 0, sedenion_tower},
      {"06-sedenion-quadruple-twist", "reference", 0, sedenion_quadruple_twist},
      {"07-sedenion-square-law", "reference", 0, sedenion_square_law},
      {"08-sedenion-twist-power-law", "reference", 0, sedenion_twist_power_law},
      {"09-oct-lambda-suite", "reference", 0, oct_lambda_suite},
      {"10-f-calculus", "reference", 0, f_calculus},
      {"11-chain-lemmas", "reference", 0, chain_lemmas},
      {"12-commute-identity", "reference", 0, commute_identity},
      {"13-equivalence-sweeps", "derived", 120000, equivalence_sweeps},
      {"14-jordan27", "reference", 0, jordan27},
      {"15-sedenion-alpha-images", "conditional", 0, sedenion_alpha_images},
      {"16-sedenion-x-xy-witness", "conditional", 0, sedenion_x_xy_witness},
  };
  std::vector<ScenarioResult> results;
  for (const Spec& s : scenarios) {
    if (!opts.filter.empty() && std::string(s.id).find(opts.filter) == std::string::npos)
      continue;
    const auto start = std::chrono::steady_clock::now();
    ScenarioResult r;
    r.id = s.id;
    r.provenance = s.provenance;
    r.budget_ms = s.budget_ms;
    try {
      const Outcome o = s.run(opts);
      r.verdict = o.conditional_skip ? "conditional-skip" : (o.pass ? "pass" : "fail");
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.verdict = "fail";
      r.detail = std::string("exception: ") + e.what();
    }
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
    results.push_back(std::move(r));
  }
  std::sort(results.begin(), results.end(),
            [](const ScenarioResult& a, const ScenarioResult& b) { return a.id < b.id; });
  return results;
}

std::string repro_report_lines(const std::vector<ScenarioResult>& results) {
  std::ostringstream out;
  for (const ScenarioResult& r : results) {
    nlohmann::ordered_json j;
    j["scenario"] = r.id;
    j["provenance"] = r.provenance;
    j["verdict"] = r.verdict;
    j["detail"] = r.detail;
    out << j.dump() << "\n";
  }
  return out.str();
}

}  // namespace homalg
