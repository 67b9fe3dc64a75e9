#include "qwp/pochhammer.hpp"

namespace qwp {

namespace {

void require_step(long long r) {
  if (r < 1) throw std::invalid_argument("q-Pochhammer: base step must be >= 1");
}

}  // namespace

LaurentSeries poch_finite(const QMonomial& x, long long r, long long n, long long order) {
  require_step(r);
  if (n < 0) throw std::invalid_argument("poch_finite: negative index; use poch_negative");
  LaurentSeries acc = LaurentSeries::one();
  if (x.is_zero()) return acc;
  for (long long j = 0; j < n; ++j)
    acc = acc.times_one_minus(x.shift(r * j), order);
  return acc;
}

LaurentSeries poch_infinite(const QMonomial& x, long long r, long long order) {
  require_step(r);
  LaurentSeries acc = LaurentSeries::one();
  if (x.is_zero()) return acc;
  for (long long j = 0; x.e + r * j <= order; ++j) {
    acc = acc.times_one_minus(x.shift(r * j), order);
    if (acc.is_zero() && acc.is_exact()) return acc;  // a factor vanished exactly
  }
  return acc.truncated(order);
}

LaurentSeries poch_multi(const std::vector<QMonomial>& xs, long long r, long long n,
                         long long order) {
  LaurentSeries acc = LaurentSeries::one();
  for (const auto& x : xs) acc = acc * poch_finite(x, r, n, order);
  return acc;
}

LaurentSeries poch_multi_inf(const std::vector<QMonomial>& xs, long long r,
                             long long order) {
  LaurentSeries acc = LaurentSeries::one();
  for (const auto& x : xs) acc = acc * poch_infinite(x, r, order);
  return acc;
}

LaurentSeries poch_negative(const QMonomial& x, long long r, long long n,
                            long long order) {
  require_step(r);
  if (n < 0) throw std::invalid_argument("poch_negative: n must be >= 0");
  if (x.is_zero())
    throw degenerate_error("poch_negative: zero argument has no negative-index symbol");
  if (n == 0) return LaurentSeries::one();

  // (-1)^n q^{r n(n+1)/2} x^{-n}
  QMonomial prefix = x.pow(-n);
  if (n % 2 == 1) prefix = -prefix;
  prefix = prefix.shift(r * n * (n + 1) / 2);

  LaurentSeries den = poch_finite(x.inverse().shift(r), r, n, order - std::min(0LL, prefix.e));
  if (den.is_zero())
    throw degenerate_error("poch_negative: vanishing denominator symbol (q^" +
                           std::to_string(r) + "/x; q^" + std::to_string(r) + ")_n");
  return den.inverse(order - std::min(0LL, prefix.e)).times(prefix);
}

LaurentSeries vwp_ratio(const QMonomial& k, long long r, long long n, long long order) {
  require_step(r);
  if (n < 0) throw std::invalid_argument("vwp_ratio: n must be >= 0");
  if (k.is_zero() || n == 0) return LaurentSeries::one();
  if (k.is_one()) throw degenerate_error("vwp_ratio: k = 1 makes (1 - k) vanish");
  LaurentSeries num = LaurentSeries::one_minus(k.shift(2 * r * n));
  LaurentSeries den = LaurentSeries::one_minus(k);
  return num * den.inverse(order - std::min(0LL, k.e));
}

}  // namespace qwp
