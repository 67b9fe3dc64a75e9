#pragma once

#include <vector>

#include "qwp/laurent.hpp"
#include "qwp/qmonomial.hpp"

namespace qwp {

// q-Pochhammer symbols over base q^r (r >= 1). Arguments are monomials
// $x = c q^e$, so factors $(1 - x q^{r j})$ are exact Laurent binomials; a
// vanishing factor makes the whole product the exact zero series, which is
// legal here and only flagged where a later inversion requires otherwise.
// `order` is the working truncation: stored coefficients above it are
// dropped (the result's order field reports whether anything was lost).

// $(x; q^r)_n = \prod_{j=0}^{n-1} (1 - x q^{r j})$, n >= 0.
LaurentSeries poch_finite(const QMonomial& x, long long r, long long n, long long order);

// $(x; q^r)_\infty$, truncated: factors with exponent beyond `order` are == 1
// modulo q^{order+1} and are dropped.
LaurentSeries poch_infinite(const QMonomial& x, long long r, long long order);

// $(x_1, ..., x_m; q^r)_n$ and the infinite version.
LaurentSeries poch_multi(const std::vector<QMonomial>& xs, long long r, long long n,
                         long long order);
LaurentSeries poch_multi_inf(const std::vector<QMonomial>& xs, long long r,
                             long long order);

// Negative index via the standard rewrite
//   $(x; q^r)_{-n} = (-1)^n q^{r n(n+1)/2} / (x^n (q^r/x; q^r)_n)$,  n >= 0.
// Throws degenerate_error when the denominator symbol vanishes.
LaurentSeries poch_negative(const QMonomial& x, long long r, long long n,
                            long long order);

// Very-well-poised ratio with the square roots eliminated:
//   $(q\sqrt k, -q\sqrt k; q)_n / (\sqrt k, -\sqrt k; q)_n
//      = (1 - k q^{2 n}) / (1 - k)$,
// generalized to base q^r as $(1 - k q^{2 r n})/(1 - k)$. k = 0 gives 1;
// k = 1 is degenerate.
LaurentSeries vwp_ratio(const QMonomial& k, long long r, long long n, long long order);

}  // namespace qwp
