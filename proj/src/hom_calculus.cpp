#include "homalg/hom_calculus.hpp"

#include <stdexcept>

namespace homalg {

PowerCache::PowerCache(const HomAlgebra& h, Element x) : h_(h) {
  if (x.dim() != h.dim()) throw std::invalid_argument("dimension");
  alpha_of_x_.push_back(x);
  powers_.push_back(std::move(x));
}

const Element& PowerCache::power(int n) {
  if (n < 1) throw std::invalid_argument("undefined-power");
  while (static_cast<int>(powers_.size()) < n) {
    const int m = static_cast<int>(powers_.size()) + 1;  // next power
    while (static_cast<int>(alpha_of_x_.size()) < m - 1)
      alpha_of_x_.push_back(h_.alpha().apply(alpha_of_x_.back()));
    powers_.push_back(h_.mul(powers_[m - 2], alpha_of_x_[m - 2]));
  }
  return powers_[n - 1];
}

Element PowerCache::alpha_power_of(int n, int k) {
  Element v = power(n);
  for (int t = 0; t < k; ++t) v = h_.alpha().apply(v);
  return v;
}

Element hom_power(const HomAlgebra& h, const Element& x, int n) {
  PowerCache cache(h, x);
  return cache.power(n);
}

Element power_pair(PowerCache& cache, int i, int j) {
  if (i < 1 || j < 1) throw std::invalid_argument("undefined-power");
  const Element a = cache.alpha_power_of(i, j - 1);
  const Element b = cache.alpha_power_of(j, i - 1);
  return cache.algebra().mul(a, b);
}

Element power_pair(const HomAlgebra& h, const Element& x, int i, int j) {
  PowerCache cache(h, x);
  return power_pair(cache, i, j);
}

Element hom_associator(const HomAlgebra& h, const Element& x, const Element& y,
                       const Element& z) {
  const LinearMap& a = h.alpha();
  return h.mul(h.mul(x, y), a.apply(z)) - h.mul(a.apply(x), h.mul(y, z));
}

Element cyclic_associator(const HomAlgebra& h, const Element& x, const Element& y,
                          const Element& z) {
  return hom_associator(h, x, y, z) + hom_associator(h, z, x, y) +
         hom_associator(h, y, z, x);
}

Element hom_jacobian(const HomAlgebra& h, const Element& x, const Element& y,
                     const Element& z) {
  const LinearMap& a = h.alpha();
  return h.mul(h.mul(x, y), a.apply(z)) + h.mul(h.mul(z, x), a.apply(y)) +
         h.mul(h.mul(y, z), a.apply(x));
}

namespace {

Perm4 compose(const Perm4& f, const Perm4& g) {
  Perm4 r;
  for (int k = 0; k < 4; ++k) r[k] = f[g[k]];
  return r;
}

Perm4 inverse(const Perm4& f) {
  Perm4 r;
  for (int k = 0; k < 4; ++k) r[f[k]] = k;
  return r;
}

constexpr Perm4 kId = {0, 1, 2, 3};
constexpr Perm4 kCycle3 = {1, 2, 0, 3};     // (1 2 3)
constexpr Perm4 kCycle4 = {1, 2, 3, 0};     // (1 2 3 4)

std::array<Element, 4> arrange(const Perm4& sigma, const Element& x, const Element& y,
                               const Element& z, const Element& w) {
  const Element* in[4] = {&x, &y, &z, &w};
  const Perm4 inv = inverse(sigma);
  return {*in[inv[0]], *in[inv[1]], *in[inv[2]], *in[inv[3]]};
}

}  // namespace

const std::array<Perm4, 12>& f_left_permutations() {
  static const std::array<Perm4, 12> perms = [] {
    std::array<Perm4, 12> out;
    Perm4 c3 = kId;
    int idx = 0;
    for (int i = 0; i < 3; ++i) {
      Perm4 c4 = kId;
      for (int j = 0; j < 4; ++j) {
        out[idx++] = compose(c3, c4);
        c4 = compose(kCycle4, c4);
      }
      c3 = compose(kCycle3, c3);
    }
    return out;
  }();
  return perms;
}

const std::array<Perm4, 6>& f_right_permutations() {
  static const std::array<Perm4, 6> perms = {{
      {0, 1, 2, 3},  // Id
      {2, 1, 0, 3},  // (1 3)
      {0, 2, 1, 3},  // (2 3)
      {3, 1, 2, 0},  // (1 4)
      {0, 3, 2, 1},  // (2 4)
      {2, 3, 0, 1},  // (1 3)(2 4)
  }};
  return perms;
}

FComponents f_components(const HomAlgebra& h, const Element& x, const Element& y,
                         const Element& z, const Element& w) {
  const LinearMap& a = h.alpha();
  const LinearMap a2 = a.compose(a);
  Element fl = Element::zero(h.dim()), fr = Element::zero(h.dim());
  for (const Perm4& sigma : f_left_permutations()) {
    const auto t = arrange(sigma, x, y, z, w);
    fl += h.mul(h.mul(h.bullet(t[0], t[1]), a.apply(t[2])), a2.apply(t[3]));
  }
  for (const Perm4& sigma : f_right_permutations()) {
    const auto t = arrange(sigma, x, y, z, w);
    fr += h.mul(a.apply(h.bullet(t[0], t[1])), a.apply(h.bullet(t[2], t[3])));
  }
  return {fl, fr, fl - fr};
}

Element defect_b(const HomAlgebra& h, const Element& x) {
  const LinearMap& a = h.alpha();
  const Element x2 = h.mul(x, x);
  const Element ax2 = a.apply(x2);
  return h.mul(h.mul(x2, a.apply(x)), a.apply(a.apply(x))) - h.mul(ax2, ax2);
}

Element defect_d(const HomAlgebra& h, const Element& x, const Element& y) {
  const LinearMap& a = h.alpha();
  auto a2 = [&](const Element& v) { return a.apply(a.apply(v)); };
  const Element x2 = h.mul(x, x), y2 = h.mul(y, y), xy = h.bullet(x, y);
  return h.mul(h.mul(y2, a.apply(x)), a2(x)) + h.mul(h.mul(x2, a.apply(y)), a2(y)) +
         h.mul(h.mul(xy, a.apply(x)), a2(y)) + h.mul(h.mul(xy, a.apply(y)), a2(x)) -
         h.mul(a.apply(xy), a.apply(xy)) - h.bullet(a.apply(x2), a.apply(y2));
}

Element defect_e(const HomAlgebra& h, const Element& x, const Element& y,
                 const Element& z) {
  const LinearMap& a = h.alpha();
  auto a2 = [&](const Element& v) { return a.apply(a.apply(v)); };
  const Element y2 = h.mul(y, y);
  const Element xz = h.bullet(x, z), xy = h.bullet(x, y), zy = h.bullet(z, y);
  return h.mul(h.mul(y2, a.apply(x)), a2(z)) + h.mul(h.mul(y2, a.apply(z)), a2(x)) +
         h.mul(h.mul(xz, a.apply(y)), a2(y)) + h.mul(h.mul(xy, a.apply(z)), a2(y)) +
         h.mul(h.mul(zy, a.apply(x)), a2(y)) + h.mul(h.mul(xy, a.apply(y)), a2(z)) +
         h.mul(h.mul(zy, a.apply(y)), a2(x)) -
         h.bullet(a.apply(xy), a.apply(zy)) - h.bullet(a.apply(xz), a.apply(y2));
}

}  // namespace homalg
