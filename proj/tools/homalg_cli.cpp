// Command-line interface: build the example algebras, twist and transform
// them, run identity checks, print Hom-powers, and run the built-in
// verification scenarios. Exit codes: 0 all checks passed, 1 some check
// failed, 2 usage or input errors.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "homalg/algebra_io.hpp"
#include "homalg/constructions.hpp"
#include "homalg/hom_calculus.hpp"
#include "homalg/identity_engine.hpp"
#include "homalg/random_gen.hpp"
#include "homalg/repro.hpp"

namespace {

using homalg::CheckReport;
using homalg::Element;
using homalg::HomAlgebra;
using homalg::LinearMap;
using homalg::Rational;
using Json = nlohmann::ordered_json;

void write_output(const std::string& text, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(outPath);
  if (!f) throw std::runtime_error("cannot write " + outPath);
  f << text;
}

Json report_to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.property;
  j["verdict"] = to_string(r.verdict);
  j["method"] = to_string(r.method);
  if (r.method == homalg::CheckMethod::probabilistic_random) {
    j["trials"] = r.trials;
    j["seed"] = r.seed;
  }
  if (r.witness) {
    Json w = Json::array();
    for (const Element& e : *r.witness) w.push_back(e.str());
    j["witness"] = std::move(w);
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

LinearMap matrix_from_file(const std::string& path, int dim) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  Json j = Json::parse(in);
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw std::invalid_argument(path + ": expected a " + std::to_string(dim) + "-row matrix");
  LinearMap m(dim);
  for (int i = 0; i < dim; ++i)
    for (int c = 0; c < dim; ++c)
      m.at(i, c) = Rational::parse(j[i][c].get<std::string>());
  return m;
}

LinearMap resolve_map(const std::string& spec, const HomAlgebra& h) {
  if (spec == "octaut") return homalg::octonion_automorphism();
  if (spec == "entrywise-octaut")
    return homalg::extend_entrywise(homalg::octonion_automorphism());
  if (spec.rfind("quadruple=", 0) == 0) {
    // quadruple=i1,i2,i3,i4:j1,j2,j3,j4
    const std::string body = spec.substr(10);
    const auto colon = body.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("quadruple spec needs src:dst");
    auto parse4 = [](const std::string& s) {
      std::array<int, 4> out{};
      std::stringstream ss(s);
      std::string tok;
      for (int i = 0; i < 4; ++i) {
        if (!std::getline(ss, tok, ',')) throw std::invalid_argument("need 4 indices");
        out[i] = std::stoi(tok);
      }
      return out;
    };
    return homalg::quadruple_automorphism(h, {parse4(body.substr(0, colon))},
                                          {parse4(body.substr(colon + 1))});
  }
  return matrix_from_file(spec, h.dim());
}

Element parse_element(const std::string& csv, int dim) {
  Element x(dim);
  std::stringstream ss(csv);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= dim) throw std::invalid_argument("too many coordinates");
    x[i++] = Rational::parse(tok);
  }
  if (i != dim) throw std::invalid_argument("expected " + std::to_string(dim) + " coordinates");
  return x;
}

int run_checks(const HomAlgebra& h, const std::string& property, std::uint64_t seed,
               int trials, int maxN, const std::string& subgroup,
               const std::string& outPath) {
  std::vector<CheckReport> reports;
  auto classCheck = [&](homalg::AlgebraClass c) {
    reports.push_back(homalg::class_predicate(h, c, std::nullopt, seed));
  };
  if (property == "multiplicative") {
    CheckReport r;
    r.property = "multiplicative";
    r.verdict = h.is_multiplicative() ? homalg::Verdict::pass : homalg::Verdict::fail;
    reports.push_back(r);
  } else if (property == "commutative") {
    CheckReport r;
    r.property = "commutative";
    r.verdict = h.is_commutative() ? homalg::Verdict::pass : homalg::Verdict::fail;
    reports.push_back(r);
  } else if (property == "hom-associative") {
    classCheck(homalg::AlgebraClass::hom_associative);
  } else if (property == "hom-flexible") {
    classCheck(homalg::AlgebraClass::hom_flexible);
  } else if (property == "hom-alternative") {
    classCheck(homalg::AlgebraClass::hom_alternative);
  } else if (property == "right-hom-alternative") {
    classCheck(homalg::AlgebraClass::right_hom_alternative);
  } else if (property == "hom-jordan") {
    classCheck(homalg::AlgebraClass::hom_jordan);
  } else if (property == "nc-hom-jordan") {
    classCheck(homalg::AlgebraClass::nc_hom_jordan);
  } else if (property == "g-hom-associative") {
    reports.push_back(homalg::class_predicate(h, homalg::AlgebraClass::g_hom_associative,
                                              homalg::GSubgroup::from_name(subgroup), seed));
  } else if (property == "hom-lie-admissible") {
    classCheck(homalg::AlgebraClass::hom_lie_admissible);
  } else if (property == "third-hpa") {
    for (auto m : {homalg::ThirdMethod::diagonal_polarized, homalg::ThirdMethod::s3_sum,
                   homalg::ThirdMethod::commutator_form,
                   homalg::ThirdMethod::antisymmetric_s})
      reports.push_back(homalg::is_third_hpa(h, m));
  } else if (property == "fourth-hpa") {
    reports.push_back(homalg::is_fourth_hpa(h, seed));
  } else if (property == "up-to-fourth") {
    reports.push_back(homalg::is_up_to_fourth(h, seed));
  } else if (property == "hpa") {
    reports.push_back(homalg::decide_hpa(h, seed));
  } else if (property == "nth-hpa-random") {
    for (int n = 3; n <= maxN; ++n)
      reports.push_back(homalg::check_nth_hpa_random(h, n, trials, seed + n));
  } else if (property == "commute") {
    for (int n = 4; n <= maxN; ++n)
      reports.push_back(homalg::verify_commute_identity(
          h, n, homalg::random_element(h, 3, seed + 100 + n), seed));
  } else if (property == "chain-lemmas") {
    for (int n = 5; n <= maxN; ++n)
      reports.push_back(homalg::verify_chain_lemmas(
          h, n, homalg::random_element(h, 3, seed + 200 + n), seed));
  } else if (property == "a3") {
    reports.push_back(homalg::verify_a3_equivalence(h));
  } else {
    throw CLI::ValidationError("unknown property: " + property);
  }

  std::ostringstream out;
  bool allPass = true;
  for (const CheckReport& r : reports) {
    out << report_to_json(r).dump() << "\n";
    if (!r.passed()) allPass = false;
  }
  write_output(out.str(), outPath);
  return allPass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for finite-dimensional Hom-algebras"};
  app.require_subcommand(1);

  std::string inPath, outPath, mapSpec, value, filter, subgroup = "a3";
  std::string what, property, elementCsv, convention = "calibrated";
  int levels = 4, deriveN = 1, maxN = 6, trials = 50;
  long bound = 9;
  std::string gamma = "-1";
  std::uint64_t seed = 20250808;

  auto* build = app.add_subcommand("build", "construct a named algebra");
  build->add_option("what", what,
                    "cayley-dickson | octonions | twisted-octonions | sedenions | "
                    "jordan27 | twisted-jordan27 | random")
      ->required();
  build->add_option("--levels", levels, "doubling steps for cayley-dickson");
  build->add_option("--gamma", gamma, "doubling parameter");
  build->add_option("--convention", convention,
                    "schafer | baez | schafer-opposite | baez-opposite | reference | "
                    "calibrated");
  build->add_option("--seed", seed, "seed for random");
  build->add_option("--out", outPath, "output file (stdout if omitted)");

  auto* twist = app.add_subcommand("twist", "Yau twist by a self-morphism");
  twist->add_option("--in", inPath)->required();
  twist->add_option("--map", mapSpec,
                    "octaut | entrywise-octaut | quadruple=...:... | matrix file")
      ->required();
  twist->add_option("--out", outPath);

  auto* lambda = app.add_subcommand("lambda", "interpolated, plus or minus algebra");
  lambda->add_option("--in", inPath)->required();
  lambda->add_option("--value", value, "rational, or 'plus' / 'minus'")->required();
  lambda->add_option("--out", outPath);

  auto* derive = app.add_subcommand("derive", "n-th derived algebra");
  derive->add_option("--in", inPath)->required();
  derive->add_option("--n", deriveN)->required();
  derive->add_option("--out", outPath);

  auto* check = app.add_subcommand("check", "run an identity or property check");
  check->add_option("property", property)->required();
  check->add_option("--in", inPath)->required();
  check->add_option("--seed", seed);
  check->add_option("--trials", trials);
  check->add_option("--max-n", maxN);
  check->add_option("--subgroup", subgroup, "id | s12 | s13 | s23 | a3 | s3");
  check->add_option("--out", outPath);

  auto* powers = app.add_subcommand("powers", "print Hom-powers of an element");
  powers->add_option("--in", inPath)->required();
  powers->add_option("--element", elementCsv, "comma-separated coordinates");
  powers->add_option("--seed", seed, "seed for a random element when none given");
  powers->add_option("--bound", bound);
  powers->add_option("--max-n", maxN);
  powers->add_option("--out", outPath);

  auto* repro = app.add_subcommand("repro", "run the built-in verification scenarios");
  repro->add_option("--filter", filter, "substring filter on scenario ids");
  repro->add_option("--seed", seed);
  repro->add_option("--trials", trials);
  repro->add_option("--out", outPath);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      HomAlgebra h = [&]() -> HomAlgebra {
        const homalg::CdConvention conv =
            convention == "calibrated" ? homalg::sedenion_calibration().chosen
                                       : homalg::cd_convention_from_string(convention);
        if (what == "cayley-dickson")
          return homalg::cd_tower(levels, Rational::parse(gamma), conv);
        if (what == "octonions") return homalg::octonions();
        if (what == "twisted-octonions") return homalg::twisted_octonions();
        if (what == "sedenions") return homalg::sedenions(conv);
        if (what == "jordan27") return homalg::hermitian_jordan();
        if (what == "twisted-jordan27") return homalg::twisted_jordan27();
        if (what == "random") return homalg::random_hom_algebra(3, 0.6, seed);
        throw CLI::ValidationError("unknown build target: " + what);
      }();
      if (what == "sedenions" || (what == "cayley-dickson" && h.dim() == 16)) {
        auto meta = h.metadata();
        for (const auto& [k, v] : homalg::sedenion_calibration().metadata()) meta[k] = v;
        h = HomAlgebra(h.dim(), h.structure_constants(), h.alpha(), h.labels(),
                       h.conjugation(), meta);
      }
      write_output(homalg::algebra_to_json(h), outPath);
      return 0;
    }
    if (twist->parsed()) {
      const HomAlgebra h = homalg::load_algebra(inPath);
      write_output(homalg::algebra_to_json(homalg::yau_twist(h, resolve_map(mapSpec, h))),
                   outPath);
      return 0;
    }
    if (lambda->parsed()) {
      const HomAlgebra h = homalg::load_algebra(inPath);
      HomAlgebra out = value == "plus"    ? homalg::plus_algebra(h)
                       : value == "minus" ? homalg::minus_algebra(h)
                                          : homalg::lambda_algebra(h, Rational::parse(value));
      write_output(homalg::algebra_to_json(out), outPath);
      return 0;
    }
    if (derive->parsed()) {
      const HomAlgebra h = homalg::load_algebra(inPath);
      write_output(homalg::algebra_to_json(homalg::derived_hom_algebra(h, deriveN)), outPath);
      return 0;
    }
    if (check->parsed()) {
      const HomAlgebra h = homalg::load_algebra(inPath);
      return run_checks(h, property, seed, trials, maxN, subgroup, outPath);
    }
    if (powers->parsed()) {
      const HomAlgebra h = homalg::load_algebra(inPath);
      const Element x = elementCsv.empty() ? homalg::random_element(h, bound, seed)
                                           : parse_element(elementCsv, h.dim());
      homalg::PowerCache cache(h, x);
      std::ostringstream out;
      for (int n = 1; n <= maxN; ++n) {
        Json j;
        j["n"] = n;
        j["power"] = cache.power(n).str();
        out << j.dump() << "\n";
      }
      write_output(out.str(), outPath);
      return 0;
    }
    if (repro->parsed()) {
      homalg::ReproOptions opts;
      opts.filter = filter;
      opts.seed = seed;
      opts.trials = trials;
      const auto results = homalg::run_repro(opts);
      write_output(homalg::repro_report_lines(results), outPath);
      for (const auto& r : results)
        if (r.verdict == "fail") return 1;
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
