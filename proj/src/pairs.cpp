#include "qwp/pairs.hpp"

#include <utility>

#include "qwp/pochhammer.hpp"

namespace qwp {

namespace {

QMonomial scale_pow(const QMonomial& base, long long n, long long extra_q) {
  return QMonomial(base.c.pow(n), base.e * n + extra_q);
}

LaurentSeries delta0(long long n) {
  return n == 0 ? LaurentSeries::one() : LaurentSeries::zero();
}

// Laurent parameters push a member's valuation negative, which eats into the
// honestly-tracked order of products; recompute with the observed debt paid.
template <typename F>
WPPair::Member adaptive(F body) {
  return [body = std::move(body)](long long n, long long order) {
    return build_to_order(
        order, [&](long long w) { return body(n, w); });
  };
}

}  // namespace

LaurentSeries defining_beta(const WPPair& pair, long long n, long long order) {
  const long long m = pair.step;
  const QMonomial ka = pair.k / pair.a;
  const QMonomial aq = pair.a.shift(m);
  return build_to_order(order, [&](long long w) {
    LaurentSeries sum = LaurentSeries::zero(w);
    for (long long j = 0; j <= n; ++j) {
      LaurentSeries num =
          poch_finite(ka, m, n - j, w) * poch_finite(pair.k, m, n + j, w);
      LaurentSeries den = poch_finite(QMonomial::q(m), m, n - j, w) *
                          poch_finite(aq, m, n + j, w);
      sum = sum + num * den.inverse(w) * pair.alpha(j, w);
    }
    return sum;
  });
}

CheckResult defining_check(const WPPair& pair, long long nmax,
                           long long order) {
  CheckResult res;
  res.requested_order = order;
  for (long long n = 0; n <= nmax; ++n) {
    res = compare_to_order(pair.beta(n, order), defining_beta(pair, n, order),
                           order);
    if (!res.passed()) {
      res.detail = pair.family + ": defining relation fails at member n=" +
                   std::to_string(n);
      return res;
    }
  }
  return res;
}

WPPair make_unit_pair(const QMonomial& a, long long step) {
  WPPair p;
  p.family = "unit";
  p.a = a;
  p.k = QMonomial(0);
  p.step = step;
  const long long m = step;
  p.alpha = adaptive([a, m](long long n, long long w) {
    LaurentSeries ratio = poch_finite(a, m, n, w) *
                          poch_finite(QMonomial::q(m), m, n, w).inverse(w);
    return (vwp_ratio(a, m, n, w) * ratio)
        .times(scale_pow(QMonomial(-1), n, m * n * (n - 1) / 2));
  });
  p.beta = [](long long n, long long) { return delta0(n); };
  return p;
}

WPPair make_trivial_pair(const QMonomial& a, long long step) {
  WPPair p;
  p.family = "trivial";
  p.a = a;
  p.k = QMonomial(0);
  p.step = step;
  const long long m = step;
  p.alpha = [](long long n, long long) { return delta0(n); };
  p.beta = adaptive([a, m](long long n, long long w) {
    return poch_multi({a.shift(m), QMonomial::q(m)}, m, n, w).inverse(w);
  });
  return p;
}

WPPair make_singh_pair(const QMonomial& a, const QMonomial& k,
                       const QMonomial& p1, const QMonomial& p2,
                       long long step) {
  WPPair p;
  p.family = "singh";
  p.a = a;
  p.k = k;
  p.step = step;
  const long long m = step;
  const QMonomial ka = k / a;
  const QMonomial big = (a * a / (k * p1 * p2)).shift(m);  // a^2 q / (k p1 p2)
  const QMonomial kpp = k * p1 * p2 / a;
  p.alpha = adaptive([=](long long n, long long w) {
    LaurentSeries num = poch_multi({a, p1, p2, big}, m, n, w);
    LaurentSeries den = poch_multi(
        {QMonomial::q(m), (a / p1).shift(m), (a / p2).shift(m), kpp}, m, n, w);
    return (vwp_ratio(a, m, n, w) * num * den.inverse(w))
        .times(scale_pow(ka, n, 0));
  });
  p.beta = adaptive([=](long long n, long long w) {
    LaurentSeries num = poch_multi(
        {k * p1 / a, k * p2 / a, k, (a / (p1 * p2)).shift(m)}, m, n, w);
    LaurentSeries den = poch_multi(
        {(a / p1).shift(m), (a / p2).shift(m), kpp, QMonomial::q(m)}, m, n, w);
    return num * den.inverse(w);
  });
  return p;
}

WPPair make_ab_pair(const QMonomial& a, const QMonomial& k, long long step) {
  WPPair p;
  p.family = "ab";
  p.a = a;
  p.k = k;
  p.step = step;
  const long long m = step;
  const QMonomial ka = k / a;
  p.alpha = adaptive([=](long long n, long long w) {
    LaurentSeries num = poch_multi({a, (k / a).shift(-m)}, m, n, w) *
                        poch_finite((a * a / k).shift(m), m, 2 * n, w);
    LaurentSeries den =
        poch_multi({QMonomial::q(m), (a * a / k).shift(2 * m)}, m, n, w) *
        poch_finite(k, m, 2 * n, w);
    return (vwp_ratio(a, m, n, w) * num * den.inverse(w))
        .times(scale_pow(ka, n, 0));
  });
  p.beta = adaptive([=](long long n, long long w) {
    return poch_finite((k * k / (a * a)).shift(-m), m, n, w) *
           poch_finite(QMonomial::q(m), m, n, w).inverse(w);
  });
  return p;
}

WPPair make_slater_pair(const QMonomial& a, const QMonomial& c,
                        const QMonomial& d, long long step) {
  WPPair p;
  p.family = "slater";
  p.a = a;
  p.k = QMonomial(0);
  p.step = step;
  const long long m = step;
  p.alpha = adaptive([=](long long n, long long w) {
    LaurentSeries num = poch_multi({a, c, d}, m, n, w);
    LaurentSeries den = poch_multi(
        {(a / c).shift(m), (a / d).shift(m), QMonomial::q(m)}, m, n, w);
    return (vwp_ratio(a, m, n, w) * num * den.inverse(w))
        .times(scale_pow(-(a / (c * d)), n, m * n * (n + 1) / 2));
  });
  p.beta = adaptive([=](long long n, long long w) {
    LaurentSeries num = poch_finite((a / (c * d)).shift(m), m, n, w);
    LaurentSeries den = poch_multi(
        {(a / c).shift(m), (a / d).shift(m), QMonomial::q(m)}, m, n, w);
    return num * den.inverse(w);
  });
  return p;
}

WPPair make_slater_limit_pair(const QMonomial& a, long long step) {
  WPPair p;
  p.family = "slater-limit";
  p.a = a;
  p.k = QMonomial(0);
  p.step = step;
  const long long m = step;
  p.alpha = adaptive([a, m](long long n, long long w) {
    LaurentSeries ratio = poch_finite(a, m, n, w) *
                          poch_finite(QMonomial::q(m), m, n, w).inverse(w);
    return (vwp_ratio(a, m, n, w) * ratio)
        .times(scale_pow(-a, n, m * (3 * n * n - n) / 2));
  });
  p.beta = adaptive([m](long long n, long long w) {
    return poch_finite(QMonomial::q(m), m, n, w).inverse(w);
  });
  return p;
}

WPPair make_msz_pair(const QMonomial& a, const QMonomial& d, long long step) {
  WPPair p;
  p.family = "msz";
  p.a = a;
  p.k = QMonomial(0);
  p.step = step;
  const long long m = step;
  p.alpha = adaptive([=](long long n, long long w) {
    if (n % 2 == 1) return LaurentSeries::zero();
    const long long r = n / 2;
    LaurentSeries num = poch_multi({a, d}, 2 * m, r, w);
    LaurentSeries den =
        poch_multi({(a / d).shift(2 * m), QMonomial::q(2 * m)}, 2 * m, r, w);
    return (vwp_ratio(a, m, n, w) * num * den.inverse(w))
        .times(scale_pow(a / d, r, 2 * m * r * r));
  });
  p.beta = adaptive([=](long long n, long long w) {
    LaurentSeries num = poch_finite((a / d).shift(m), 2 * m, n, w);
    LaurentSeries den = poch_finite(a.shift(m), 2 * m, n, w) *
                        poch_finite((a / d).shift(m), m, n, w) *
                        poch_finite(QMonomial::q(m), m, n, w);
    return num * den.inverse(w);
  });
  return p;
}

WPPair chain_transform(const WPPair& base, const QMonomial& y,
                       const QMonomial& z, const QMonomial& k) {
  const long long m = base.step;
  const QMonomial c = base.k;
  if (k * y * z != c * base.a.shift(m))
    throw degenerate_error(
        "chain_transform: parameters must satisfy c = k y z / (a q^m)");
  WPPair p;
  p.family = "chain(" + base.family + ")";
  p.a = base.a;
  p.k = k;
  p.step = m;
  const QMonomial a = base.a;
  const QMonomial kc = k / c;  // equals a q^m / (y z)
  p.alpha = adaptive([=](long long n, long long w) {
    LaurentSeries num = poch_multi({y, z}, m, n, w);
    LaurentSeries den =
        poch_multi({(a / y).shift(m), (a / z).shift(m)}, m, n, w);
    return (num * den.inverse(w) * base.alpha(n, w))
        .times(scale_pow(kc, n, 0));
  });
  p.beta = adaptive([=](long long n, long long w) {
    LaurentSeries sum = LaurentSeries::zero(w);
    for (long long j = 0; j <= n; ++j) {
      LaurentSeries num =
          vwp_ratio(c, m, j, w) * poch_multi({y, z}, m, j, w) *
          poch_finite(kc, m, n - j, w) * poch_finite(k, m, n + j, w);
      LaurentSeries den = poch_multi({k * y / a, k * z / a}, m, j, w) *
                          poch_finite(QMonomial::q(m), m, n - j, w) *
                          poch_finite(c.shift(m), m, n + j, w);
      sum = sum + (num * den.inverse(w) * base.beta(j, w))
                      .times(scale_pow(kc, j, 0));
    }
    LaurentSeries pre =
        poch_multi({k * y / a, k * z / a}, m, n, w) *
        poch_multi({(a / y).shift(m), (a / z).shift(m)}, m, n, w).inverse(w);
    return pre * sum;
  });
  return p;
}

}  // namespace qwp
