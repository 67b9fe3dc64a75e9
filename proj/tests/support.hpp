#pragma once

// Shared test helpers: seeded random generators for property-style tests and
// small independent oracles whose values get frozen into expectations. The
// oracles deliberately avoid the library's own series machinery.

#include <cstdint>
#include <random>
#include <vector>

#include "qwp/laurent.hpp"
#include "qwp/qmonomial.hpp"
#include "qwp/rational.hpp"

namespace support {

using qwp::LaurentSeries;
using qwp::QMonomial;
using qwp::Rational;

inline Rational random_rational(std::mt19937& rng, int max_abs = 9) {
  std::uniform_int_distribution<int> num(-max_abs, max_abs);
  std::uniform_int_distribution<int> den(1, max_abs);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng, int max_abs = 9) {
  for (;;) {
    Rational r = random_rational(rng, max_abs);
    if (!r.is_zero()) return r;
  }
}

// Random series with valuation in [-3, 3], up to `len` stored coefficients,
// fixed order. Leading coefficient forced nonzero when nonempty.
inline LaurentSeries random_series(std::mt19937& rng, long long order = 20,
                                   int len = 10) {
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<int> n(0, len);
  int count = n(rng);
  std::vector<Rational> cs;
  cs.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) cs.push_back(random_rational(rng));
  if (!cs.empty() && cs.front().is_zero()) cs.front() = Rational(1);
  return LaurentSeries::from_coeffs(val(rng), std::move(cs), order);
}

inline LaurentSeries random_nonzero_series(std::mt19937& rng, long long order = 20,
                                           int len = 10) {
  for (;;) {
    LaurentSeries s = random_series(rng, order, len);
    if (!s.is_zero()) return s;
  }
}

// Oracle: coefficients of (q; q)_infty through q^order by direct factor
// multiplication on plain machine integers (coefficients of this product are
// tiny). Independent of the library's series type.
inline std::vector<long long> euler_product_oracle(int order) {
  std::vector<long long> c(static_cast<std::size_t>(order) + 1, 0);
  c[0] = 1;
  for (int j = 1; j <= order; ++j) {
    for (int e = order; e >= j; --e) c[static_cast<std::size_t>(e)] -= c[static_cast<std::size_t>(e - j)];
  }
  return c;
}

// Oracle: number of divisors of n (trial division).
inline long long divisor_count(long long n) {
  long long d = 0;
  for (long long k = 1; k * k <= n; ++k) {
    if (n % k) continue;
    d += (k * k == n) ? 1 : 2;
  }
  return d;
}

// Oracle: sum over divisors d of n of chi(d) for a 3-periodic character
// chi(1 mod 3) = 1, chi(2 mod 3) = -1, chi(0 mod 3) = 0.
inline long long divisor_character_3(long long n) {
  long long s = 0;
  for (long long k = 1; k * k <= n; ++k) {
    if (n % k) continue;
    auto chi = [](long long m) { return m % 3 == 1 ? 1 : (m % 3 == 2 ? -1 : 0); };
    s += chi(k);
    if (k * k != n) s += chi(n / k);
  }
  return s;
}

// Oracle: r(n) = #{(x, y) : x^2 + xy + y^2 = n} by bounded enumeration,
// independent of the library's lattice-sum builder.
inline long long hexagonal_lattice_count(long long n) {
  long long count = 0;
  long long b = 1;
  while (b * b < 2 * n + 2) ++b;
  for (long long x = -b; x <= b; ++x)
    for (long long y = -b; y <= b; ++y)
      if (x * x + x * y + y * y == n) ++count;
  return count;
}

inline std::vector<int> first_primes(int count) {
  std::vector<int> ps;
  for (int n = 2; static_cast<int>(ps.size()) < count; ++n) {
    bool prime = true;
    for (int p : ps) {
      if (p * p > n) break;
      if (n % p == 0) { prime = false; break; }
    }
    if (prime) ps.push_back(n);
  }
  return ps;
}

}  // namespace support
