#include "qwp/qfunctions.hpp"

#include <stdexcept>
#include <utility>

namespace qwp {

namespace {

constexpr long long kMaxOrder = 1'000'000;

void check_order(long long order) {
  if (order < -kMaxOrder || order > kMaxOrder)
    throw std::invalid_argument("qfunctions: order out of range");
}

void check_step(long long r) {
  if (r < 1) throw std::invalid_argument("qfunctions: base step must be >= 1");
}

LaurentSeries finish(const LaurentSeries& s, long long order) {
  if (s.order() < order)
    throw std::logic_error("qfunctions: working precision fell short of the requested order");
  return s.truncated(order);
}

// 1 / (1 - q^E) at the given order.
LaurentSeries inv_one_minus_q(long long expo, long long order) {
  return LaurentSeries::one_minus(QMonomial::q(expo)).inverse(order);
}

QMonomial scale_pow(const QMonomial& base, long long n, long long extra_q) {
  return QMonomial(base.c.pow(n), base.e * n + extra_q);
}

}  // namespace

LaurentSeries divide(const LaurentSeries& num, const LaurentSeries& den,
                     long long order) {
  return num * den.inverse(order);
}

LaurentSeries poch_inf_ratio(const std::vector<QMonomial>& nums,
                             const std::vector<QMonomial>& dens, long long r,
                             long long order) {
  LaurentSeries n = poch_multi_inf(nums, r, order);
  LaurentSeries d = poch_multi_inf(dens, r, order);
  if (d.is_zero())
    throw degenerate_error("vanishing infinite product in a denominator");
  return n * d.inverse(order);
}

// ---------------------------------------------------------------------------

LaurentSeries lambert(const QMonomial& x, long long r, long long order) {
  check_step(r);
  check_order(order);
  if (x.e + r < 1)
    throw degenerate_error("lambert: parameter x = c q^e needs e + step >= 1");
  if (x.c.is_zero() || order < 1) return LaurentSeries::zero(order);
  std::vector<Rational> acc(static_cast<std::size_t>(order) + 1);
  for (long long n = 1; x.e + r * n <= order; ++n) {
    const long long base = x.e + r * n;  // >= 1 and increasing
    Rational p(1);
    for (long long j = 1; j * base <= order; ++j) {
      p = p * x.c;
      auto idx = static_cast<std::size_t>(j * base);
      acc[idx] = acc[idx] + p;
    }
  }
  return LaurentSeries::from_coeffs(0, std::move(acc), order);
}

LaurentSeries lambert_odd(const QMonomial& x, long long r, long long order) {
  check_step(r);
  check_order(order);
  if (x.e + r < 1)
    throw degenerate_error("lambert_odd: parameter x = c q^e needs e + step >= 1");
  if (x.c.is_zero() || order < 1) return LaurentSeries::zero(order);
  const Rational c2 = x.c * x.c;
  std::vector<Rational> acc(static_cast<std::size_t>(order) + 1);
  for (long long n = 1; x.e + r * n <= order; ++n) {
    const long long base = x.e + r * n;
    Rational p = x.c;
    for (long long j = 1; j * base <= order; j += 2) {
      auto idx = static_cast<std::size_t>(j * base);
      acc[idx] = acc[idx] + p;
      p = p * c2;
    }
  }
  return LaurentSeries::from_coeffs(0, std::move(acc), order);
}

// ---------------------------------------------------------------------------

LaurentSeries la_vwp(const QMonomial& a, long long m, long long order) {
  check_step(m);
  check_order(order);
  const long long w = order + kPad;
  auto term = [&](long long n) {
    QMonomial pre = scale_pow(a, n, m * n * n);  // a^n q^{m n^2}
    LaurentSeries t = LaurentSeries::one_minus(a.shift(2 * m * n));
    t = t * LaurentSeries::one_minus(a.shift(m * n)).inverse(w);
    t = t * inv_one_minus_q(m * n, w);
    return t.times(pre);
  };
  return finish(sum_terms(1, term, order), order);
}

LaurentSeries la_alt(const QMonomial& a, long long m, long long order) {
  check_step(m);
  check_order(order);
  const long long w = order + kPad;
  auto term = [&](long long n) {
    QMonomial pre = scale_pow(-a, n, m * n * (n + 1) / 2);
    LaurentSeries den = poch_finite(a.shift(m), m, n, w)
                            .times_one_minus(QMonomial::q(m * n), w);
    return den.inverse(w).times(pre);
  };
  return finish(-sum_terms(1, term, order), order);
}

LaurentSeries la_weighted_inv(const QMonomial& a, long long m, long long order) {
  check_step(m);
  check_order(order);
  const long long w = order + kPad;
  LaurentSeries fac = poch_infinite(a.shift(m), m, w);
  if (fac.is_zero())
    throw degenerate_error("la_weighted_inv: (a q^m; q^m)_inf vanishes");
  auto term = [&](long long n) {
    QMonomial pre = scale_pow(-a, n, m * n * (n + 1) / 2);
    pre.c = pre.c * Rational(n);
    return poch_finite(QMonomial::q(m), m, n, w).inverse(w).times(pre);
  };
  return finish(-(fac.inverse(w) * sum_terms(1, term, w)), order);
}

LaurentSeries la_weighted(const QMonomial& a, long long m, long long order) {
  check_step(m);
  check_order(order);
  const long long w = order + kPad;
  auto term = [&](long long n) {
    QMonomial pre = scale_pow(a, n, m * n);
    pre.c = pre.c * Rational(n);
    return poch_finite(QMonomial::q(m), m, n, w).inverse(w).times(pre);
  };
  return finish(poch_infinite(a.shift(m), m, w) * sum_terms(1, term, w), order);
}

// ---------------------------------------------------------------------------

LaurentSeries f_series(const QMonomial& a, const QMonomial& k,
                       const QMonomial& z, long long m, long long order) {
  check_step(m);
  check_order(order);
  const long long w = order + kPad;
  const QMonomial arg = (a / z).shift(m);
  auto term = [&](long long n) {
    LaurentSeries num =
        vwp_ratio(k, m, n, w) * poch_multi({k, z, k / a}, m, n, w);
    LaurentSeries den =
        poch_multi({k.shift(m), (k / z).shift(m), a.shift(m)}, m, n, w)
            .times_one_minus(QMonomial::q(m * n), w);
    return (num * den.inverse(w)).times(arg.pow(n));
  };
  return finish(sum_terms(1, term, order), order);
}

LaurentSeries f_lambert_form(const QMonomial& a, const QMonomial& k,
                             const QMonomial& z, long long m, long long order) {
  return lambert(k, m, order) + lambert(a / z, m, order) -
         lambert(a, m, order) - lambert(k / z, m, order);
}

LaurentSeries f_closed_form(const QMonomial& a, const QMonomial& k,
                            const QMonomial& z, long long m, long long order) {
  check_step(m);
  check_order(order);
  const long long w = order + kPad;
  auto om = [](const QMonomial& x) { return LaurentSeries::one_minus(x); };
  LaurentSeries num =
      (LaurentSeries::monomial(a) - LaurentSeries::monomial(k)) *
      om(z.inverse()) * om(a * k / z);
  LaurentSeries den = om(a) * om(k) * om(a / z) * om(k / z);
  if (den.is_zero())
    throw degenerate_error("f_closed_form: (1-a)(1-k)(1-a/z)(1-k/z) vanishes");
  LaurentSeries part1 = num * den.inverse(w);

  const QMonomial Q = QMonomial::q(m);
  const QMonomial ak = a * k;
  LaurentSeries part2 =
      poch_inf_ratio({z, Q / z, k / a, Q * a / k, ak / z, Q * z / ak, Q, Q},
                     {z / k, Q * k / z, z / a, Q * a / z, a, Q / a, k, Q / k},
                     m, w)
          .times(z / k);
  return finish(part1 + part2, order);
}

LaurentSeries g_series(const QMonomial& a, const QMonomial& k,
                       const QMonomial& y, const QMonomial& z, long long m,
                       long long order) {
  check_step(m);
  check_order(order);
  const long long w = order + kPad;
  const QMonomial arg = (a / (y * z)).shift(m);
  auto term = [&](long long n) {
    LaurentSeries num =
        vwp_ratio(k, m, n, w) * poch_multi({k, y, z, k / a}, m, n, w);
    LaurentSeries den = poch_multi(
        {(k / y).shift(m), (k / z).shift(m), a.shift(m), QMonomial::q(m)}, m,
        n, w);
    return (num * den.inverse(w)).times(arg.pow(n));
  };
  return finish(sum_terms(0, term, order), order);
}

LaurentSeries g_product(const QMonomial& a, const QMonomial& k,
                        const QMonomial& y, const QMonomial& z, long long m,
                        long long order) {
  check_step(m);
  check_order(order);
  const long long w = order + kPad;
  const QMonomial yz = y * z;
  return finish(
      poch_inf_ratio({k.shift(m), (k / yz).shift(m), (a / y).shift(m),
                      (a / z).shift(m)},
                     {(k / y).shift(m), (k / z).shift(m), a.shift(m),
                      (a / yz).shift(m)},
                     m, w),
      order);
}

// ---------------------------------------------------------------------------

LaurentSeries f1_series(const QMonomial& a, const QMonomial& z, long long m,
                        long long order) {
  check_step(m);
  check_order(order);
  const long long w = order + kPad;
  const QMonomial arg = -(a / z);
  auto term = [&](long long n) {
    LaurentSeries num = vwp_ratio(a, m, n, w) * poch_multi({a, z}, m, n, w);
    LaurentSeries den =
        poch_multi({a.shift(m), (a / z).shift(m)}, m, n, w)
            .times_one_minus(QMonomial::q(m * n), w);
    QMonomial pre = scale_pow(arg, n, m * n * (n + 1) / 2);
    return (num * den.inverse(w)).times(pre);
  };
  return finish(-sum_terms(1, term, order), order);
}

LaurentSeries f1_simple(const QMonomial& a, const QMonomial& z, long long m,
                        long long order) {
  check_step(m);
  check_order(order);
  const long long w = order + kPad;
  const QMonomial arg = (a / z).shift(m);
  auto term = [&](long long n) {
    LaurentSeries num = poch_finite(z, m, n, w);
    LaurentSeries den = poch_finite(a.shift(m), m, n, w)
                            .times_one_minus(QMonomial::q(m * n), w);
    return (num * den.inverse(w)).times(arg.pow(n));
  };
  return finish(sum_terms(1, term, order), order);
}

LaurentSeries f1_lambert(const QMonomial& a, const QMonomial& z, long long m,
                         long long order) {
  return lambert(a / z, m, order) - lambert(a, m, order);
}

LaurentSeries f2_series(const QMonomial& a, long long m, long long order) {
  return -la_vwp(a, m, order);
}

LaurentSeries f2_simple(const QMonomial& a, long long m, long long order) {
  return -la_alt(a, m, order);
}

LaurentSeries f2_lambert(const QMonomial& a, long long m, long long order) {
  return -lambert(a, m, order);
}

LaurentSeries f3_series(const QMonomial& a, long long m, long long order) {
  check_step(m);
  check_order(order);
  const long long w = order + kPad;
  auto term = [&](long long n) {
    LaurentSeries num = vwp_ratio(a, m, n, w) * poch_finite(a, m, n, w) *
                        poch_finite(QMonomial(Rational(-1), m), m, n - 1, w);
    LaurentSeries den =
        poch_finite((a * a).shift(2 * m), 2 * m, n, w)
            .times_one_minus(QMonomial::q(m * n), w);
    QMonomial pre = scale_pow(a, n, m * n * (n + 1) / 2);
    return (num * den.inverse(w)).times(pre);
  };
  return finish(-sum_terms(1, term, order), order);
}

LaurentSeries f3_simple(const QMonomial& a, long long m, long long order) {
  check_step(m);
  check_order(order);
  const long long w = order + kPad;
  const QMonomial arg = -a.shift(m);
  auto term = [&](long long n) {
    LaurentSeries num = poch_finite(QMonomial(Rational(-1), m), m, n - 1, w);
    LaurentSeries den = poch_finite(a.shift(m), m, n, w)
                            .times_one_minus(QMonomial::q(m * n), w);
    return (num * den.inverse(w)).times(arg.pow(n));
  };
  return finish(sum_terms(1, term, order), order);
}

LaurentSeries f3_lambert(const QMonomial& a, long long m, long long order) {
  return -lambert_odd(a, m, order);
}

// ---------------------------------------------------------------------------

namespace {

bool is_pm_one(const Rational& c) { return c.is_one() || (-c).is_one(); }

void check_theta_arg(const QMonomial& t, const char* who) {
  if (!is_pm_one(t.c) || t.e < 1)
    throw std::invalid_argument(std::string(who) +
                                ": argument must be ±q^m with m >= 1");
}

}  // namespace

LaurentSeries theta_phi(const QMonomial& t, long long order) {
  check_order(order);
  check_theta_arg(t, "theta_phi");
  if (order < 0) return LaurentSeries::zero(order);
  const bool neg = (-t.c).is_one();
  std::vector<Rational> acc(static_cast<std::size_t>(order) + 1);
  acc[0] = Rational(1);
  for (long long n = 1; t.e * n * n <= order; ++n)
    acc[static_cast<std::size_t>(t.e * n * n)] =
        Rational((neg && n % 2 != 0) ? -2 : 2);
  return LaurentSeries::from_coeffs(0, std::move(acc), order);
}

LaurentSeries theta_phi_product(const QMonomial& t, long long order) {
  check_order(order);
  check_theta_arg(t, "theta_phi_product");
  const long long r2 = 2 * t.e;
  LaurentSeries half = poch_infinite(-t, r2, order);
  return half * half * poch_infinite(t * t, r2, order);
}

LaurentSeries theta_psi(const QMonomial& t, long long order) {
  check_order(order);
  check_theta_arg(t, "theta_psi");
  if (order < 0) return LaurentSeries::zero(order);
  const bool neg = (-t.c).is_one();
  std::vector<Rational> acc(static_cast<std::size_t>(order) + 1);
  for (long long n = 0;; ++n) {
    const long long tri = n * (n + 1) / 2;
    if (t.e * tri > order) break;
    acc[static_cast<std::size_t>(t.e * tri)] =
        Rational((neg && tri % 2 != 0) ? -1 : 1);
  }
  return LaurentSeries::from_coeffs(0, std::move(acc), order);
}

LaurentSeries theta_psi_product(const QMonomial& t, long long order) {
  check_order(order);
  check_theta_arg(t, "theta_psi_product");
  const long long r2 = 2 * t.e;
  return poch_infinite(t * t, r2, order) *
         poch_infinite(t, r2, order).inverse(order);
}

LaurentSeries borwein_a(long long order) {
  check_order(order);
  if (order < 0) return LaurentSeries::zero(order);
  std::vector<Rational> acc(static_cast<std::size_t>(order) + 1);
  long long bound = 1;
  while (bound * bound <= 2 * order + 2) ++bound;
  for (long long i = -bound; i <= bound; ++i)
    for (long long j = -bound; j <= bound; ++j) {
      const long long e = i * i + i * j + j * j;
      if (e <= order) {
        auto idx = static_cast<std::size_t>(e);
        acc[idx] = acc[idx] + Rational(1);
      }
    }
  return LaurentSeries::from_coeffs(0, std::move(acc), order);
}

}  // namespace qwp
