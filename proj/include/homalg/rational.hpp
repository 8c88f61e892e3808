#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homalg {

/// Arbitrary-precision rational scalar. Always stored in lowest terms with a
/// positive denominator; every operation is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
  Rational(long n) : v_(static_cast<long>(n)) {}
  Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("zero-denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Rejects anything else, including q == 0.
  static Rational parse(const std::string& s);

  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  std::string numerator() const { return v_.get_num().get_str(); }
  std::string denominator() const { return v_.get_den().get_str(); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Absolute value of the numerator fits and denominator is 1; used by the
  /// random-element generator contract checks.
  bool integer_in_range(long lo, long hi) const {
    if (!is_integer()) return false;
    const mpz_class& n = v_.get_num();
    return n >= lo && n <= hi;
  }

 private:
  struct NoCanon {};
  Rational(mpq_class q, NoCanon) : v_(std::move(q)) {}
  mpq_class v_;
};

inline Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t pos = 0;
  auto digits = [&](std::size_t at) {
    std::size_t n = 0;
    while (at + n < s.size() && s[at + n] >= '0' && s[at + n] <= '9') ++n;
    return n;
  };
  if (s[pos] == '-') ++pos;
  std::size_t nd = digits(pos);
  if (nd == 0) throw std::invalid_argument("malformed rational: " + s);
  pos += nd;
  if (pos == s.size()) return Rational(mpq_class(s));
  if (s[pos] != '/') throw std::invalid_argument("malformed rational: " + s);
  ++pos;
  std::size_t dd = digits(pos);
  if (dd == 0 || pos + dd != s.size())
    throw std::invalid_argument("malformed rational: " + s);
  mpz_class den(s.substr(pos));
  if (den == 0) throw std::invalid_argument("zero-denominator");
  mpq_class q(mpz_class(s.substr(0, pos - 1)), den);
  q.canonicalize();
  return Rational(q);
}

inline std::string Rational::str() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

}  // namespace homalg
