#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "homalg/rational.hpp"

namespace homalg {

/// Coordinate vector over Rational with respect to the ambient basis.
class Element {
 public:
  Element() = default;
  explicit Element(int dim) : coords_(dim) {}
  explicit Element(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Element(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Element zero(int dim) { return Element(dim); }
  static Element basis(int dim, int k) {
    if (k < 0 || k >= dim) throw std::out_of_range("basis index");
    Element e(dim);
    e.coords_[k] = Rational(1);
    return e;
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int i) const { return coords_[i]; }
  Rational& operator[](int i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }

  Element& operator+=(const Element& o) {
    check_dim(o);
    for (int i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_dim(o);
    for (int i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Element& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend Element operator-(const Element& a) { return Rational(-1) * a; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// Human-readable form, e.g. "-2 e3 + e9". Zero prints as "0".
  std::string str() const {
    std::string out;
    for (int i = 0; i < dim(); ++i) {
      if (coords_[i].is_zero()) continue;
      const std::string c = coords_[i].str();
      if (!out.empty()) out += c[0] == '-' ? " - " : " + ";
      else if (c[0] == '-') out += "-";
      std::string mag = c[0] == '-' ? c.substr(1) : c;
      if (mag != "1") out += mag + " ";
      out += "e" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check_dim(const Element& o) const {
    if (o.dim() != dim()) throw std::invalid_argument("dimension");
  }
  std::vector<Rational> coords_;
};

}  // namespace homalg
