#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homalg/hom_algebra.hpp"
#include "homalg/hom_calculus.hpp"

namespace homalg {

enum class Verdict { pass, fail, inapplicable };
enum class CheckMethod { deterministic_basis, probabilistic_random };

std::string to_string(Verdict v);
std::string to_string(CheckMethod m);

/// Outcome of an identity or property check. Fail verdicts carry a witness
/// tuple whose defect re-evaluates to a nonzero element.
struct CheckReport {
  std::string property;
  Verdict verdict = Verdict::pass;
  std::optional<std::vector<Element>> witness;
  CheckMethod method = CheckMethod::deterministic_basis;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string note;

  bool passed() const { return verdict == Verdict::pass; }
  bool failed() const { return verdict == Verdict::fail; }
};

/// Deterministic checks enumerate at most this many basis tuples; larger
/// grids degrade to seeded probabilistic evaluation.
inline constexpr std::size_t kDeterministicTupleCap = 100000;
inline constexpr int kDefaultTrials = 50;
inline constexpr long kRandomCoordBound = 9;

/// Permutation of three argument positions.
using Perm3 = std::array<int, 3>;

/// One of the six subgroups of S3, with signatures.
class GSubgroup {
 public:
  enum class Kind { trivial, swap12, swap13, swap23, alternating, symmetric };

  explicit GSubgroup(Kind k);
  Kind kind() const { return kind_; }
  const std::vector<std::pair<Perm3, int>>& elements() const { return elements_; }
  std::string name() const;

  static GSubgroup from_name(const std::string& name);

 private:
  Kind kind_;
  std::vector<std::pair<Perm3, int>> elements_;  // (permutation, signature)
};

/// Full polarization of a homogeneous degree-n map p in one variable,
/// evaluated on every basis n-tuple:
///   P(x_1..x_n) = sum over nonempty S of (-1)^(n-|S|) p(sum_{i in S} x_i).
/// Vanishing of P on all tuples is equivalent to p = 0 in characteristic 0.
/// Throws "degree-cap" when dim^n exceeds the deterministic cap.
CheckReport polarize_check(const HomAlgebra& h,
                           const std::function<Element(const Element&)>& p, int n,
                           const std::string& property = "polarized-identity");

/// Same polarization evaluated at seeded random tuples.
CheckReport polarize_check_random(const HomAlgebra& h,
                                  const std::function<Element(const Element&)>& p, int n,
                                  int trials, std::uint64_t seed,
                                  const std::string& property = "polarized-identity");

enum class AlgebraClass {
  hom_associative,
  hom_flexible,
  hom_alternative,
  right_hom_alternative,
  hom_jordan,
  nc_hom_jordan,
  g_hom_associative,
  hom_lie_admissible,
};

std::string to_string(AlgebraClass c);

CheckReport class_predicate(const HomAlgebra& h, AlgebraClass which,
                            std::optional<GSubgroup> g = std::nullopt,
                            std::uint64_t seed = 0);

enum class ThirdMethod { diagonal_polarized, s3_sum, commutator_form, antisymmetric_s };

std::string to_string(ThirdMethod m);

/// Third Hom-power associativity by one of four equivalent exact
/// basis-triple checks. On failure also looks for a witness of the shape
/// e0 + e_i before falling back to the failing triple.
CheckReport is_third_hpa(const HomAlgebra& h, ThirdMethod method = ThirdMethod::s3_sum);

/// Fourth Hom-power associativity: x^4 = x^{2,2} via F = 0 and
/// x^4 = x^{1,3} via degree-4 polarization.
CheckReport is_fourth_hpa(const HomAlgebra& h, std::uint64_t seed = 0);

/// Up-to-fourth Hom-power associativity for a multiplicative algebra:
/// third (S3 sum) plus F = 0. Inapplicable without multiplicativity.
CheckReport is_up_to_fourth(const HomAlgebra& h, std::uint64_t seed = 0);

/// Full Hom-power associativity decision for a multiplicative algebra via
/// the degree-3/4 criteria; cross-checked against the single quartic
/// identity when the algebra is Hom-flexible.
CheckReport decide_hpa(const HomAlgebra& h, std::uint64_t seed = 0);

/// x^n = x^{n-i,i} for all i on seeded random small-integer elements.
CheckReport check_nth_hpa_random(const HomAlgebra& h, int n, int trials,
                                 std::uint64_t seed);

/// [alpha^(l-1)(x^(n-l)), alpha^(n-l-1)(x^l)] = 0 for l = 1..n-1 at a given x.
CheckReport verify_commute_identity(const HomAlgebra& h, int n, const Element& x,
                                    std::uint64_t seed = 0);

/// The linear relations among x^{n-k,k} implied by up-to-(n-1)st
/// Hom-power associativity, evaluated exactly at a given x.
CheckReport verify_chain_lemmas(const HomAlgebra& h, int n, const Element& x,
                                std::uint64_t seed = 0);

/// A3-Hom-associativity coincides with third Hom-power associativity plus
/// Hom-Lie admissibility; evaluates all three predicates and passes iff the
/// biconditional holds.
CheckReport verify_a3_equivalence(const HomAlgebra& h);

}  // namespace homalg
