#pragma once
// WP-Bailey pairs: sequence pairs (alpha_n, beta_n) tied together by the
// discrete convolution
//
//   beta_n = sum_{j=0}^n (k/a; q)_{n-j} (k; q)_{n+j}
//            / [ (q; q)_{n-j} (aq; q)_{n+j} ] * alpha_j,
//
// alpha_0 = beta_0 = 1.  k = 0 degenerates the kernel to the classical
// Bailey relation beta_n = sum_j alpha_j / [(q;q)_{n-j} (aq;q)_{n+j}].
//
// A pair carries a base step m: its members are series in q^m and every
// occurrence of q in the defining formulas is read as q^m, while the
// parameter monomials (often Laurent, e.g. a = q^{-2}) enter verbatim.

#include <functional>
#include <string>

#include "qwp/check.hpp"
#include "qwp/laurent.hpp"
#include "qwp/qmonomial.hpp"

namespace qwp {

struct WPPair {
  // Members return series valid at least to the requested order (exact when
  // the term is a finite product of pochhammers and monomials).
  using Member = std::function<LaurentSeries(long long n, long long order)>;

  std::string family;
  QMonomial a;
  QMonomial k;  // zero coefficient marks a plain Bailey pair
  long long step = 1;
  Member alpha, beta;

  bool is_bailey() const { return k.c.is_zero(); }
};

// The convolution kernel evaluated directly: sum over j of the defining
// relation applied to pair.alpha.  Used to arbitrate every constructor.
LaurentSeries defining_beta(const WPPair& pair, long long n, long long order);

// Check beta_n == defining_beta(n) for n = 0..nmax to the given order.
CheckResult defining_check(const WPPair& pair, long long nmax, long long order);

// alpha_n = vwp_n(a) (a;q)_n / (q;q)_n (-1)^n q^{n(n-1)/2},  beta_n = [n=0].
WPPair make_unit_pair(const QMonomial& a, long long step);

// alpha_n = [n=0],  beta_n = 1 / ((aq, q; q)_n).
WPPair make_trivial_pair(const QMonomial& a, long long step);

// alpha_n = vwp_n(a) (a, p1, p2, a^2 q/(k p1 p2); q)_n
//           / ((q, aq/p1, aq/p2, k p1 p2 / a; q)_n) (k/a)^n,
// beta_n  = (k p1/a, k p2/a, k, aq/(p1 p2); q)_n
//           / ((aq/p1, aq/p2, k p1 p2/a, q; q)_n).
WPPair make_singh_pair(const QMonomial& a, const QMonomial& k,
                       const QMonomial& p1, const QMonomial& p2,
                       long long step);

// alpha_n = vwp_n(a) (a, k/(aq); q)_n / ((q, a^2 q^2/k; q)_n)
//           * (q a^2/k; q)_{2n} / ((k; q)_{2n}) (k/a)^n,
// beta_n  = (k^2/(q a^2); q)_n / (q; q)_n.
WPPair make_ab_pair(const QMonomial& a, const QMonomial& k, long long step);

// Bailey pair with two free parameters:
// alpha_n = vwp_n(a) (a, c, d; q)_n / ((aq/c, aq/d, q; q)_n)
//           * (-a/(cd))^n q^{n(n+1)/2},
// beta_n  = (aq/(cd); q)_n / ((aq/c, aq/d, q; q)_n).
WPPair make_slater_pair(const QMonomial& a, const QMonomial& c,
                        const QMonomial& d, long long step);

// The c, d -> infinity limit of the above:
// alpha_n = vwp_n(a) (a;q)_n / (q;q)_n (-a)^n q^{(3n^2-n)/2},
// beta_n  = 1 / (q; q)_n.
WPPair make_slater_limit_pair(const QMonomial& a, long long step);

// Even-indexed Bailey pair:
// alpha_{2r}   = vwp_{2r}(a) (a, d; q^2)_r a^r q^{2 r^2}
//                / ((a q^2/d, q^2; q^2)_r d^r),
// alpha_{2r-1} = 0,
// beta_n       = (aq/d; q^2)_n / ((aq; q^2)_n (aq/d, q; q)_n).
WPPair make_msz_pair(const QMonomial& a, const QMonomial& d, long long step);

// One step along the WP-Bailey chain: from a pair with parameters (a, c)
// build the pair with parameters (a, k), where c = k y z / (a q^m):
// alpha'_n = (y, z; q)_n / ((aq/y, aq/z; q)_n) (k/c)^n alpha_n(a, c),
// beta'_n  = 1/((aq/y, aq/z; q)_n) sum_{j=0}^n vwp_j(c) (y, z; q)_j
//            * (k/c; q)_{n-j} (k; q)_{n+j}
//            / ((q; q)_{n-j} (qc; q)_{n+j}) (k/c)^j beta_j(a, c).
// Throws degenerate_error unless k y z == base.k * a q^m exactly.
WPPair chain_transform(const WPPair& base, const QMonomial& y,
                       const QMonomial& z, const QMonomial& k);

}  // namespace qwp
