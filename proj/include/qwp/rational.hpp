#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qwp {

// Exact rational number. Thin wrapper over GMP's mpq_class that guarantees
// canonical form (lowest terms, positive denominator) on every path in and
// out, including the (p, q) constructor, which mpq_class does not normalize
// by itself.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long long n) { set_ll(n); }
  Rational(int n) : v_(n) {}
  Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    Rational n(num), d(den);
    v_ = n.v_ / d.v_;
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rational from_string(const std::string& s);

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
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

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  // Integer exponent power; e may be negative for nonzero values.
  Rational pow(long long e) const;

  // Canonical decimal string: "p" when the denominator is 1, else "p/q".
  std::string str() const { return v_.get_str(); }

  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

 private:
  void set_ll(long long n) {
    // mpz has no long long constructor on LLP64-safe paths; go through strings
    // only when the value does not fit a signed long.
    if (n >= -2147483648LL && n <= 2147483647LL) {
      v_ = mpq_class(static_cast<int>(n));
    } else {
      v_ = mpq_class(std::to_string(n));
    }
  }

  mpq_class v_;
};

inline Rational Rational::pow(long long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rational: 0 to a negative power");
    return Rational(0);
  }
  Rational base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                               : static_cast<unsigned long long>(e);
  Rational acc(1);
  while (k) {
    if (k & 1ULL) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

inline Rational Rational::from_string(const std::string& s) {
  // Accepts "p" or "p/q" with an optional leading sign; no whitespace,
  // no decimals. mpq set_str is laxer than we want, so validate first.
  auto bad = [&]() { return std::invalid_argument("Rational: cannot parse '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw bad();
  bool seen_slash = false, digit_before = false, digit_after = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      if (seen_slash || !digit_before) throw bad();
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw bad();
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) throw bad();
  mpq_class v;
  if (v.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw bad();
  if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
  v.canonicalize();
  return Rational(v);
}

}  // namespace qwp
