#pragma once

#include <stdexcept>
#include <string>

#include "qwp/rational.hpp"

namespace qwp {

// Monomial parameter value $c\,q^e$ with exact rational c and integer e.
// This is the only shape a free parameter may take; square roots are never
// represented (very-well-poised factor pairs are eliminated algebraically
// before evaluation).
struct QMonomial {
  Rational c;
  long long e = 0;

  QMonomial() : c(0) {}
  QMonomial(Rational coeff, long long expo) : c(std::move(coeff)), e(expo) {}
  QMonomial(long long n) : c(n), e(0) {}
  QMonomial(int n) : c(n), e(0) {}

  static QMonomial q(long long expo = 1) { return QMonomial(Rational(1), expo); }

  bool is_zero() const { return c.is_zero(); }
  bool is_one() const { return c.is_one() && e == 0; }

  QMonomial operator-() const { return QMonomial(-c, e); }

  friend QMonomial operator*(const QMonomial& a, const QMonomial& b) {
    return QMonomial(a.c * b.c, a.e + b.e);
  }
  friend QMonomial operator/(const QMonomial& a, const QMonomial& b) {
    if (b.is_zero()) throw std::domain_error("QMonomial: division by zero");
    return QMonomial(a.c / b.c, a.e - b.e);
  }
  friend bool operator==(const QMonomial& a, const QMonomial& b) {
    return a.e == b.e && a.c == b.c;
  }
  friend bool operator!=(const QMonomial& a, const QMonomial& b) { return !(a == b); }

  QMonomial inverse() const {
    if (is_zero()) throw std::domain_error("QMonomial: inverse of zero");
    return QMonomial(c.inverse(), -e);
  }

  QMonomial pow(long long n) const {
    if (is_zero() && n < 0) throw std::domain_error("QMonomial: inverse of zero");
    return QMonomial(c.pow(n), e * n);
  }

  // Multiply by q^s (s copies of the series variable).
  QMonomial shift(long long s) const { return QMonomial(c, e + s); }

  // Canonical wire form: "p/q" when e = 0, else "p/q*q^e".
  std::string str() const {
    if (e == 0) return c.str();
    return c.str() + "*q^" + std::to_string(e);
  }

  // Parses "p/q", "p/q*q^e", "q^e", "-q^e" and tolerates spaces around '*'.
  static QMonomial parse(const std::string& text);
};

inline QMonomial QMonomial::parse(const std::string& text) {
  auto bad = [&]() { return std::invalid_argument("QMonomial: cannot parse '" + text + "'"); };
  std::string s;
  s.reserve(text.size());
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (s.empty()) throw bad();

  auto parse_exp = [&](const std::string& t) -> long long {
    if (t.empty()) throw bad();
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw bad();
    for (std::size_t j = i; j < t.size(); ++j)
      if (t[j] < '0' || t[j] > '9') throw bad();
    return std::stoll(t);
  };

  std::size_t star = s.find('*');
  if (star != std::string::npos) {
    std::string lhs = s.substr(0, star), rhs = s.substr(star + 1);
    if (rhs.rfind("q^", 0) != 0) throw bad();
    return QMonomial(Rational::from_string(lhs), parse_exp(rhs.substr(2)));
  }
  // Bare "q^e" / "-q^e" / "q".
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  bool neg = !s.empty() && s[0] == '-';
  if (s.compare(i, 1, "q") == 0) {
    std::string rest = s.substr(i + 1);
    long long expo = 1;
    if (!rest.empty()) {
      if (rest[0] != '^') throw bad();
      expo = parse_exp(rest.substr(1));
    }
    return QMonomial(Rational(neg ? -1 : 1), expo);
  }
  return QMonomial(Rational::from_string(s), 0);
}

}  // namespace qwp
