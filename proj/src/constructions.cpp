#include "homalg/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace homalg {

namespace {

std::vector<std::string> unit_labels(int dim) {
  std::vector<std::string> l(dim);
  for (int i = 0; i < dim; ++i) l[i] = "e" + std::to_string(i);
  return l;
}

LinearMap standard_conjugation(int dim) {
  LinearMap c(dim);
  c.at(0, 0) = Rational(1);
  for (int i = 1; i < dim; ++i) c.at(i, i) = Rational(-1);
  return c;
}

}  // namespace

std::string to_string(CdConvention c) {
  switch (c) {
    case CdConvention::schafer: return "schafer";
    case CdConvention::baez: return "baez";
    case CdConvention::schafer_opposite: return "schafer-opposite";
    case CdConvention::baez_opposite: return "baez-opposite";
    case CdConvention::reference: return "reference";
  }
  return "?";
}

CdConvention cd_convention_from_string(const std::string& s) {
  if (s == "schafer") return CdConvention::schafer;
  if (s == "baez") return CdConvention::baez;
  if (s == "schafer-opposite") return CdConvention::schafer_opposite;
  if (s == "baez-opposite") return CdConvention::baez_opposite;
  if (s == "reference") return CdConvention::reference;
  throw std::invalid_argument("unknown convention: " + s);
}

HomAlgebra rationals_algebra() {
  std::vector<ScEntry> sc{{0, 0, 0, Rational(1)}};
  return HomAlgebra(1, sc, LinearMap::identity(1), {"e0"}, LinearMap::identity(1));
}

HomAlgebra cayley_dickson(const HomAlgebra& h, const Rational& gamma, CdConvention conv) {
  if (!h.conjugation()) throw std::invalid_argument("no-involution");
  if (!h.alpha().is_identity()) throw std::invalid_argument("alpha-not-identity");
  const int d = h.dim();
  const int dd = 2 * d;
  const bool opposite =
      conv == CdConvention::schafer_opposite || conv == CdConvention::baez_opposite;
  const bool baez = conv == CdConvention::baez || conv == CdConvention::baez_opposite;

  auto kbar = [&](int i) { return h.conj(Element::basis(d, i)); };
  auto put = [&](std::vector<ScEntry>& sc, int i, int j, const Element& lo,
                 const Element& hi) {
    for (int k = 0; k < d; ++k) {
      if (!lo[k].is_zero()) sc.push_back({i, j, k, lo[k]});
      if (!hi[k].is_zero()) sc.push_back({i, j, k + d, hi[k]});
    }
  };

  std::vector<ScEntry> sc;
  const Element zero = Element::zero(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Element ei = Element::basis(d, i), ej = Element::basis(d, j);
      const Element p = h.mul(ei, ej);
      Element loLo = p, hiLo = zero, loHi = zero, hiHi = zero;
      if (baez) {
        // (a,b)(c,d) = (ac + g d conj(b), conj(a) d + cb)
        loHi = h.mul(h.conj(ei), ej);           // (e_i,0)(0,e_j)
        hiLo = h.mul(ej, ei);                   // (0,e_i)(e_j,0)
        hiHi = gamma * h.mul(ej, kbar(i));      // (0,e_i)(0,e_j) -> low part
      } else {
        // (a,b)(c,d) = (ac + g conj(d) b, da + b conj(c))
        loHi = h.mul(ej, ei);
        hiLo = h.mul(ei, kbar(j));
        hiHi = gamma * h.mul(kbar(j), ei);
      }
      if (!opposite) {
        put(sc, i, j, p, zero);
        put(sc, i, j + d, zero, loHi);
        put(sc, i + d, j, zero, hiLo);
        put(sc, i + d, j + d, hiHi, zero);
      } else {
        put(sc, j, i, p, zero);
        put(sc, j + d, i, zero, loHi);
        put(sc, j, i + d, zero, hiLo);
        put(sc, j + d, i + d, hiHi, zero);
      }
    }

  // doubled conjugation: (a, b) -> (conj(a), -b)
  LinearMap cj(dd);
  const LinearMap& inner = *h.conjugation();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) cj.at(i, j) = inner.at(i, j);
  for (int i = 0; i < d; ++i) cj.at(i + d, i + d) = Rational(-1);

  std::map<std::string, std::string> meta = h.metadata();
  meta["cd-convention"] = to_string(conv);
  meta["cd-gamma"] = gamma.str();
  return HomAlgebra(dd, sc, LinearMap::identity(dd), unit_labels(dd), cj, std::move(meta));
}

namespace {

/// Relabels basis by an involutive index permutation: new e_m = old e_{perm[m]}.
HomAlgebra permute_basis(const HomAlgebra& h, const std::vector<int>& perm) {
  const int d = h.dim();
  std::vector<ScEntry> sc;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Element p = h.basis_product(perm[i], perm[j]);
      for (int k = 0; k < d; ++k)
        if (!p[perm[k]].is_zero()) sc.push_back({i, j, k, p[perm[k]]});
    }
  LinearMap alpha(d), cj(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      alpha.at(i, j) = h.alpha().at(perm[i], perm[j]);
      if (h.conjugation()) cj.at(i, j) = h.conjugation()->at(perm[i], perm[j]);
    }
  std::optional<LinearMap> conj;
  if (h.conjugation()) conj = cj;
  return HomAlgebra(d, sc, alpha, h.labels(), conj, h.metadata());
}

}  // namespace

HomAlgebra cd_tower(int levels, const Rational& gamma, CdConvention conv) {
  if (levels < 0) throw std::invalid_argument("levels must be nonnegative");
  const CdConvention step =
      conv == CdConvention::reference ? CdConvention::schafer : conv;
  HomAlgebra h = rationals_algebra();
  for (int l = 0; l < levels; ++l) {
    h = cayley_dickson(h, gamma, step);
    if (conv == CdConvention::reference && h.dim() == 16) {
      // alternative fourth doubling unit: new e_{8+r} = old e_{14 xor r}
      std::vector<int> perm(16);
      for (int i = 0; i < 8; ++i) perm[i] = i;
      for (int r = 0; r < 8; ++r) perm[8 + r] = 14 ^ r;
      h = permute_basis(h, perm);
    }
  }
  if (conv == CdConvention::reference) {
    auto meta = h.metadata();
    meta["cd-convention"] = to_string(conv);
    return HomAlgebra(h.dim(), h.structure_constants(), h.alpha(), h.labels(),
                      h.conjugation(), meta);
  }
  return h;
}

HomAlgebra sedenions(CdConvention conv) { return cd_tower(4, Rational(-1), conv); }

HomAlgebra sedenions() { return sedenions(sedenion_calibration().chosen); }

namespace {

// Reference sedenion automorphism images: the image list of the
// classical order-7 example automorphism: alpha(e_i) = sign * e_{index}.
constexpr std::array<std::pair<int, int>, 16> kReferenceSedenionAut = {{
    {1, 0},  {1, 5},   {1, 7},   {1, 2},  {1, 6},  {-1, 3},  {1, 1},   {-1, 4},
    {1, 15}, {-1, 10}, {-1, 8},  {1, 13}, {1, 9},  {-1, 12}, {-1, 14}, {1, 11},
}};

LinearMap reference_sedenion_aut() {
  LinearMap m(16);
  for (int i = 0; i < 16; ++i)
    m.at(kReferenceSedenionAut[i].second, i) = Rational(kReferenceSedenionAut[i].first);
  return m;
}

bool map_is_multiplicative_for(const HomAlgebra& h, const LinearMap& f) {
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.dim(); ++j) {
      if (f.apply(h.basis_product(i, j)) != h.mul(f.column(i), f.column(j)))
        return false;
    }
  return true;
}

bool tower_invariants_hold(const HomAlgebra& s) {
  const int d = s.dim();
  const Element e0 = Element::basis(d, 0);
  for (int i = 1; i < d; ++i) {
    const Element ei = Element::basis(d, i);
    if (s.mul(ei, ei) != -e0) return false;
    for (int j = i + 1; j < d; ++j) {
      const Element ej = Element::basis(d, j);
      if (s.mul(ei, ej) != -s.mul(ej, ei)) return false;
    }
  }
  return true;
}

SedenionCalibration calibrate() {
  const CdConvention candidates[] = {
      CdConvention::schafer, CdConvention::baez, CdConvention::schafer_opposite,
      CdConvention::baez_opposite, CdConvention::reference};
  SedenionCalibration best{};
  bool have = false;
  auto score = [](const SedenionCalibration& c) {
    return (c.alpha_list_certified ? 4 : 0) + (c.closure_ok ? 2 : 0) +
           (c.third_power_witness_ok ? 1 : 0);
  };
  for (CdConvention conv : candidates) {
    HomAlgebra s = sedenions(conv);
    if (!tower_invariants_hold(s)) continue;
    SedenionCalibration c{};
    c.chosen = conv;
    c.alpha_list_certified = map_is_multiplicative_for(s, reference_sedenion_aut());
    c.closure_ok = false;
    c.alpha_images_matched = 0;
    c.third_power_witness_ok = false;
    try {
      LinearMap beta =
          quadruple_automorphism(s, BasicQuadruple{{1, 2, 4, 8}}, BasicQuadruple{{5, 7, 6, 15}});
      c.closure_ok = true;
      for (int i = 0; i < 16; ++i) {
        Element expect(16);
        expect[kReferenceSedenionAut[i].second] = Rational(kReferenceSedenionAut[i].first);
        if (beta.column(i) == expect) ++c.alpha_images_matched;
      }
      const HomAlgebra sb = yau_twist(s, beta);
      const Element x = Element::basis(16, 0) + Element::basis(16, 1);
      const Element x2 = sb.mul(x, x);
      Element left = sb.mul(x2, x), right = sb.mul(x, x2);
      Element expL(16), expR(16);
      expL[3] = Rational(-2); expL[6] = Rational(2);
      expR[3] = Rational(-2); expR[6] = Rational(-2);
      c.third_power_witness_ok = (left == expL && right == expR);
    } catch (const std::exception&) {
      // closure not realizable under this convention
    }
    if (!have || score(c) > score(best)) {
      best = c;
      have = true;
    }
  }
  if (!have) throw std::logic_error("no valid sedenion convention");
  return best;
}

}  // namespace

const SedenionCalibration& sedenion_calibration() {
  static const SedenionCalibration cal = calibrate();
  return cal;
}

std::map<std::string, std::string> SedenionCalibration::metadata() const {
  return {
      {"sedenion-convention", to_string(chosen)},
      {"alpha-list-certified", alpha_list_certified ? "true" : "false"},
      {"alpha-images-matched", std::to_string(alpha_images_matched) + "/16"},
      {"quadruple-closure", closure_ok ? "ok" : "failed"},
      {"third-power-witness", third_power_witness_ok ? "reproduced" : "not-reproduced"},
  };
}

namespace {

// The classical octonion table (cyclic index convention), row i times column j as (sign, index).
constexpr std::array<std::array<std::pair<int, int>, 8>, 8> kOctonionCells = {{
    {{{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}}},
    {{{1, 1}, {-1, 0}, {1, 4}, {1, 7}, {-1, 2}, {1, 6}, {-1, 5}, {-1, 3}}},
    {{{1, 2}, {-1, 4}, {-1, 0}, {1, 5}, {1, 1}, {-1, 3}, {1, 7}, {-1, 6}}},
    {{{1, 3}, {-1, 7}, {-1, 5}, {-1, 0}, {1, 6}, {1, 2}, {-1, 4}, {1, 1}}},
    {{{1, 4}, {1, 2}, {-1, 1}, {-1, 6}, {-1, 0}, {1, 7}, {1, 3}, {-1, 5}}},
    {{{1, 5}, {-1, 6}, {1, 3}, {-1, 2}, {-1, 7}, {-1, 0}, {1, 1}, {1, 4}}},
    {{{1, 6}, {1, 5}, {-1, 7}, {1, 4}, {-1, 3}, {-1, 1}, {-1, 0}, {1, 2}}},
    {{{1, 7}, {1, 3}, {1, 6}, {-1, 1}, {1, 5}, {-1, 4}, {-1, 2}, {-1, 0}}},
}};

constexpr std::array<std::array<std::pair<int, int>, 8>, 8> kOctonionTwistedCells = {{
    {{{1, 0}, {1, 5}, {1, 6}, {1, 7}, {1, 1}, {1, 2}, {1, 3}, {1, 4}}},
    {{{1, 5}, {-1, 0}, {1, 1}, {1, 4}, {-1, 6}, {1, 3}, {-1, 2}, {-1, 7}}},
    {{{1, 6}, {-1, 1}, {-1, 0}, {1, 2}, {1, 5}, {-1, 7}, {1, 4}, {-1, 3}}},
    {{{1, 7}, {-1, 4}, {-1, 2}, {-1, 0}, {1, 3}, {1, 6}, {-1, 1}, {1, 5}}},
    {{{1, 1}, {1, 6}, {-1, 5}, {-1, 3}, {-1, 0}, {1, 4}, {1, 7}, {-1, 2}}},
    {{{1, 2}, {-1, 3}, {1, 7}, {-1, 6}, {-1, 4}, {-1, 0}, {1, 5}, {1, 1}}},
    {{{1, 3}, {1, 2}, {-1, 4}, {1, 1}, {-1, 7}, {-1, 5}, {-1, 0}, {1, 6}}},
    {{{1, 4}, {1, 7}, {1, 3}, {-1, 5}, {1, 2}, {-1, 1}, {-1, 6}, {-1, 0}}},
}};

constexpr std::array<int, 8> kOctonionAutImage = {0, 5, 6, 7, 1, 2, 3, 4};

}  // namespace

HomAlgebra octonions() {
  std::vector<ScEntry> sc;
  sc.reserve(64);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      sc.push_back({i, j, kOctonionCells[i][j].second, Rational(kOctonionCells[i][j].first)});
  return HomAlgebra(8, sc, LinearMap::identity(8), unit_labels(8), standard_conjugation(8),
                    {{"construction", "octonion-table"}});
}

LinearMap octonion_automorphism() {
  LinearMap a(8);
  for (int i = 0; i < 8; ++i) a.at(kOctonionAutImage[i], i) = Rational(1);
  static const bool verified = [] {
    const HomAlgebra o = octonions();
    LinearMap m(8);
    for (int i = 0; i < 8; ++i) m.at(kOctonionAutImage[i], i) = Rational(1);
    return map_is_multiplicative_for(o, m);
  }();
  if (!verified) throw std::logic_error("not-automorphism");
  return a;
}

const std::array<std::array<std::pair<int, int>, 8>, 8>& octonion_twisted_cells() {
  return kOctonionTwistedCells;
}

HomAlgebra twisted_octonions() { return yau_twist(octonions(), octonion_automorphism()); }

HomAlgebra yau_twist(const HomAlgebra& h, const LinearMap& beta) {
  const int d = h.dim();
  if (beta.dim() != d) throw std::invalid_argument("dimension");
  if (beta.compose(h.alpha()) != h.alpha().compose(beta))
    throw std::invalid_argument("not-morphism");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (beta.apply(h.basis_product(i, j)) != h.mul(beta.column(i), beta.column(j)))
        throw std::invalid_argument("not-morphism");

  std::vector<ScEntry> sc;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Element p = beta.apply(h.basis_product(i, j));
      for (int k = 0; k < d; ++k)
        if (!p[k].is_zero()) sc.push_back({i, j, k, p[k]});
    }
  auto meta = h.metadata();
  meta["twisted"] = "yau";
  return h.with_product(sc, beta.compose(h.alpha()), std::move(meta));
}

HomAlgebra derived_hom_algebra(const HomAlgebra& h, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (!h.is_multiplicative()) throw std::invalid_argument("not-multiplicative");
  const int d = h.dim();
  int e = 1;
  for (int i = 0; i < n; ++i) e *= 2;
  const LinearMap front = h.alpha().power(e - 1);
  std::vector<ScEntry> sc;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Element p = front.apply(h.basis_product(i, j));
      for (int k = 0; k < d; ++k)
        if (!p[k].is_zero()) sc.push_back({i, j, k, p[k]});
    }
  auto meta = h.metadata();
  meta["derived"] = std::to_string(n);
  return h.with_product(sc, h.alpha().power(e), std::move(meta));
}

HomAlgebra lambda_algebra(const HomAlgebra& h, const Rational& lambda) {
  const int d = h.dim();
  const Rational comp = Rational(1) - lambda;
  std::vector<ScEntry> sc;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Element p = lambda * h.basis_product(i, j) + comp * h.basis_product(j, i);
      for (int k = 0; k < d; ++k)
        if (!p[k].is_zero()) sc.push_back({i, j, k, p[k]});
    }
  auto meta = h.metadata();
  meta["lambda"] = lambda.str();
  return h.with_product(sc, h.alpha(), std::move(meta));
}

HomAlgebra plus_algebra(const HomAlgebra& h) { return lambda_algebra(h, Rational(1, 2)); }

HomAlgebra minus_algebra(const HomAlgebra& h) {
  const int d = h.dim();
  std::vector<ScEntry> sc;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Element p = h.basis_product(i, j) - h.basis_product(j, i);
      for (int k = 0; k < d; ++k)
        if (!p[k].is_zero()) sc.push_back({i, j, k, p[k]});
    }
  auto meta = h.metadata();
  meta["minus"] = "commutator";
  return h.with_product(sc, h.alpha(), std::move(meta));
}

namespace {

bool monomial(const Element& p, int* sign, int* index) {
  int found = -1;
  for (int k = 0; k < p.dim(); ++k) {
    if (p[k].is_zero()) continue;
    if (found >= 0) return false;
    if (p[k] == Rational(1)) *sign = 1;
    else if (p[k] == Rational(-1)) *sign = -1;
    else return false;
    found = k;
  }
  if (found < 0) return false;
  *index = found;
  return true;
}

}  // namespace

bool is_basic_quadruple(const HomAlgebra& s, const BasicQuadruple& q) {
  if (s.dim() != 16) return false;
  std::set<int> seen;
  for (int v : q.indices) {
    if (v < 1 || v > 15) return false;
    seen.insert(v);
  }
  if (seen.size() != 4) return false;
  const auto [i1, i2, i3, i4] = q.indices;
  auto e = [&](int k) { return Element::basis(16, k); };
  const Element p12 = s.mul(e(i1), e(i2));
  if (p12 == e(i3) || p12 == -e(i3)) return false;
  const Element cands[4] = {p12, s.mul(e(i1), e(i3)), s.mul(e(i2), e(i3)),
                            s.mul(p12, e(i3))};
  for (const Element& c : cands)
    if (c == e(i4) || c == -e(i4)) return false;
  return true;
}

LinearMap quadruple_automorphism(const HomAlgebra& s, const BasicQuadruple& src,
                                 const BasicQuadruple& dst) {
  if (!is_basic_quadruple(s, src) || !is_basic_quadruple(s, dst))
    throw std::invalid_argument("basic-quadruple");
  const int d = 16;
  std::vector<std::optional<Element>> image(d);
  image[0] = Element::basis(d, 0);
  for (int l = 0; l < 4; ++l) image[src.indices[l]] = Element::basis(d, dst.indices[l]);

  // breadth-first closure over products, shortest words first, lexicographic
  // ties within a round
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<std::pair<int, Element>> discovered;
    for (int a = 1; a < d; ++a) {
      if (!image[a]) continue;
      for (int b = 1; b < d; ++b) {
        if (!image[b]) continue;
        const Element p = s.mul(Element::basis(d, a), Element::basis(d, b));
        int sign, k;
        if (!monomial(p, &sign, &k)) continue;
        const Element im = Rational(sign) * s.mul(*image[a], *image[b]);
        if (image[k]) {
          if (*image[k] != im) throw std::invalid_argument("inconsistent");
        } else {
          bool pending = false;
          for (const auto& [pk, pim] : discovered)
            if (pk == k) {
              pending = true;
              if (pim != im) throw std::invalid_argument("inconsistent");
            }
          if (!pending) discovered.emplace_back(k, im);
        }
      }
    }
    for (auto& [k, im] : discovered) {
      image[k] = std::move(im);
      progress = true;
    }
  }
  std::vector<Element> cols(d);
  for (int k = 0; k < d; ++k) {
    if (!image[k]) throw std::invalid_argument("not-generating");
    cols[k] = *image[k];
  }
  LinearMap beta = LinearMap::from_columns(cols);
  if (!map_is_multiplicative_for(s, beta)) throw std::invalid_argument("not-automorphism");
  return beta;
}

namespace {

using OctMatrix = std::array<std::array<Element, 3>, 3>;

OctMatrix oct_matmul(const HomAlgebra& o, const OctMatrix& a, const OctMatrix& b) {
  OctMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Element acc = Element::zero(8);
      for (int m = 0; m < 3; ++m) acc += o.mul(a[i][m], b[m][j]);
      r[i][j] = acc;
    }
  return r;
}

// 27-basis layout: 0..2 diagonal, 3 + 8s + t for slot s in {x, y, z}, coord t.
OctMatrix jordan_basis_matrix(const HomAlgebra& o, int idx) {
  OctMatrix m;
  for (auto& row : m)
    for (auto& e : row) e = Element::zero(8);
  if (idx < 3) {
    m[idx][idx] = Element::basis(8, 0);
    return m;
  }
  const int slot = (idx - 3) / 8, t = (idx - 3) % 8;
  const Element u = Element::basis(8, t), ubar = o.conj(Element::basis(8, t));
  if (slot == 0) { m[0][1] = u; m[1][0] = ubar; }
  else if (slot == 1) { m[0][2] = u; m[2][0] = ubar; }
  else { m[1][2] = u; m[2][1] = ubar; }
  return m;
}

Element jordan_flatten(const HomAlgebra& o, const OctMatrix& m) {
  Element out(27);
  for (int i = 0; i < 3; ++i) {
    for (int t = 1; t < 8; ++t)
      if (!m[i][i][t].is_zero()) throw std::logic_error("diagonal not scalar");
    out[i] = m[i][i][0];
  }
  auto slot = [&](int s, int r, int c) {
    if (m[c][r] != o.conj(m[r][c])) throw std::logic_error("not hermitian");
    for (int t = 0; t < 8; ++t) out[3 + 8 * s + t] = m[r][c][t];
  };
  slot(0, 0, 1);
  slot(1, 0, 2);
  slot(2, 1, 2);
  return out;
}

}  // namespace

HomAlgebra hermitian_jordan() {
  const HomAlgebra o = octonions();
  const Rational half(1, 2);
  std::vector<OctMatrix> basis(27);
  for (int i = 0; i < 27; ++i) basis[i] = jordan_basis_matrix(o, i);
  std::vector<ScEntry> sc;
  for (int p = 0; p < 27; ++p)
    for (int q = 0; q < 27; ++q) {
      const OctMatrix pq = oct_matmul(o, basis[p], basis[q]);
      const OctMatrix qp = oct_matmul(o, basis[q], basis[p]);
      OctMatrix sym;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sym[i][j] = half * (pq[i][j] + qp[i][j]);
      const Element flat = jordan_flatten(o, sym);
      for (int k = 0; k < 27; ++k)
        if (!flat[k].is_zero()) sc.push_back({p, q, k, flat[k]});
    }
  std::vector<std::string> labels(27);
  for (int i = 0; i < 3; ++i) labels[i] = "d" + std::to_string(i + 1);
  const char* slots = "xyz";
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 8; ++t)
      labels[3 + 8 * s + t] = std::string(1, slots[s]) + std::to_string(t);
  return HomAlgebra(27, sc, LinearMap::identity(27), labels, std::nullopt,
                    {{"construction", "hermitian-jordan-27"}});
}

LinearMap extend_entrywise(const LinearMap& alpha8) {
  if (alpha8.dim() != 8) throw std::invalid_argument("bad-automorphism");
  const HomAlgebra o = octonions();
  if (alpha8.column(0) != Element::basis(8, 0)) throw std::invalid_argument("bad-automorphism");
  const LinearMap& cj = *o.conjugation();
  if (alpha8.compose(cj) != cj.compose(alpha8)) throw std::invalid_argument("bad-automorphism");
  if (!map_is_multiplicative_for(o, alpha8)) throw std::invalid_argument("bad-automorphism");
  LinearMap m(27);
  for (int i = 0; i < 3; ++i) m.at(i, i) = Rational(1);
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 8; ++t)
      for (int r = 0; r < 8; ++r) m.at(3 + 8 * s + r, 3 + 8 * s + t) = alpha8.at(r, t);
  return m;
}

HomAlgebra twisted_jordan27() {
  return yau_twist(hermitian_jordan(), extend_entrywise(octonion_automorphism()));
}

}  // namespace homalg
