#pragma once

#include <vector>

#include "qwp/laurent.hpp"
#include "qwp/pochhammer.hpp"
#include "qwp/qmonomial.hpp"

namespace qwp {

// Extra working precision used inside builders. Intermediate inversions of
// series with negative valuation lose absolute order, so everything internal
// runs at (order + kPad) and the final result is checked against the
// requested order: a shortfall throws std::logic_error instead of letting a
// comparison pass vacuously on a too-short window.
inline constexpr long long kPad = 24;

// num / den, inverting den with target `order`. The result's order is the
// honest propagated one and may land below `order` when valuations are
// negative; callers pad and re-check.
LaurentSeries divide(const LaurentSeries& num, const LaurentSeries& den,
                     long long order);

// prod_i (nums[i]; q^r)_inf / prod_j (dens[j]; q^r)_inf.
LaurentSeries poch_inf_ratio(const std::vector<QMonomial>& nums,
                             const std::vector<QMonomial>& dens, long long r,
                             long long order);

// ---------------------------------------------------------------------------
// Lambert-type series. x = c q^e must satisfy e + r >= 1 so the expanded
// double sum sum_{n,j} has exponents that grow in both indices; otherwise the
// series is not a formal Laurent series and degenerate_error is thrown.

// sum_{n>=1} x q^{rn} / (1 - x q^{rn}).
LaurentSeries lambert(const QMonomial& x, long long r, long long order);

// sum_{n>=1} x q^{rn} / (1 - x^2 q^{2rn})  (odd part of the inner geometric).
LaurentSeries lambert_odd(const QMonomial& x, long long r, long long order);

// ---------------------------------------------------------------------------
// Four series representations of L_a(q^m) = lambert(a, m, .), all with the
// base step m applied to every q in the shape (shifts by m, steps m,
// prefactor exponents scaled by m); parameter monomials enter verbatim.

// sum_{n>=1} (1 - a q^{2mn}) q^{m n^2} a^n / ((1 - a q^{mn})(1 - q^{mn})).
LaurentSeries la_vwp(const QMonomial& a, long long m, long long order);

// -sum_{n>=1} q^{m n(n+1)/2} (-a)^n / ((a q^m; q^m)_n (1 - q^{mn})).
LaurentSeries la_alt(const QMonomial& a, long long m, long long order);

// -(a q^m; q^m)_inf^{-1} sum_{n>=1} n (-a)^n q^{m n(n+1)/2} / (q^m; q^m)_n.
LaurentSeries la_weighted_inv(const QMonomial& a, long long m, long long order);

// (a q^m; q^m)_inf sum_{n>=1} n a^n q^{mn} / (q^m; q^m)_n.
LaurentSeries la_weighted(const QMonomial& a, long long m, long long order);

// ---------------------------------------------------------------------------
// The very-well-poised kernel series f and its closed/Lambert forms.

// sum_{n>=1} [(1-k q^{2mn})/(1-k)] (k, z, k/a; q^m)_n
//            / ((k q^m, k q^m/z, a q^m; q^m)_n (1 - q^{mn})) (a q^m / z)^n.
LaurentSeries f_series(const QMonomial& a, const QMonomial& k,
                       const QMonomial& z, long long m, long long order);

// L_k + L_{a/z} - L_a - L_{k/z}, each at base step m.
LaurentSeries f_lambert_form(const QMonomial& a, const QMonomial& k,
                             const QMonomial& z, long long m, long long order);

// Closed form of f(a,k,z) - f(1/a,1/k,1/z): a rational prefix plus an
// eight-over-eight infinite product.
LaurentSeries f_closed_form(const QMonomial& a, const QMonomial& k,
                            const QMonomial& z, long long m, long long order);

// sum_{n>=0} [(1-k q^{2mn})/(1-k)] (k, y, z, k/a; q^m)_n
//        / ((k q^m/y, k q^m/z, a q^m, q^m; q^m)_n) (a q^m / (y z))^n,
// the series whose reciprocal swaps a and k, with its product form.
LaurentSeries g_series(const QMonomial& a, const QMonomial& k,
                       const QMonomial& y, const QMonomial& z, long long m,
                       long long order);
LaurentSeries g_product(const QMonomial& a, const QMonomial& k,
                        const QMonomial& y, const QMonomial& z, long long m,
                        long long order);

// ---------------------------------------------------------------------------
// The k -> 0 limit family, each in its distinct printed representations.

// -sum_{n>=1} [(1-a q^{2mn})/(1-a)] (a, z; q^m)_n q^{m n(n+1)/2}
//             / ((a q^m, a q^m/z; q^m)_n (1 - q^{mn})) (-a/z)^n.
LaurentSeries f1_series(const QMonomial& a, const QMonomial& z, long long m,
                        long long order);
// sum_{n>=1} (z; q^m)_n / ((a q^m; q^m)_n (1 - q^{mn})) (a q^m / z)^n.
LaurentSeries f1_simple(const QMonomial& a, const QMonomial& z, long long m,
                        long long order);
// L_{a/z} - L_a.
LaurentSeries f1_lambert(const QMonomial& a, const QMonomial& z, long long m,
                         long long order);

// -sum_{n>=1} (1 - a q^{2mn}) q^{m n^2} a^n / ((1 - a q^{mn})(1 - q^{mn})).
LaurentSeries f2_series(const QMonomial& a, long long m, long long order);
// sum_{n>=1} q^{m n(n+1)/2} (-a)^n / ((a q^m; q^m)_n (1 - q^{mn})).
LaurentSeries f2_simple(const QMonomial& a, long long m, long long order);
// -L_a.
LaurentSeries f2_lambert(const QMonomial& a, long long m, long long order);

// -sum_{n>=1} [(1-a q^{2mn})/(1-a)] (a; q^m)_n (-q^m; q^m)_{n-1}
//    q^{m n(n+1)/2} a^n / ((a^2 q^{2m}; q^{2m})_n (1 - q^{mn})).
LaurentSeries f3_series(const QMonomial& a, long long m, long long order);
// sum_{n>=1} (-q^m; q^m)_{n-1} (-a q^m)^n / ((a q^m; q^m)_n (1 - q^{mn})).
LaurentSeries f3_simple(const QMonomial& a, long long m, long long order);
// -sum_{n>=1} a q^{mn} / (1 - a^2 q^{2mn}).
LaurentSeries f3_lambert(const QMonomial& a, long long m, long long order);

// ---------------------------------------------------------------------------
// Theta functions. Arguments are restricted to t = ±q^m with m >= 1 (the only
// shapes that stay inside exact Laurent arithmetic).

// phi(t) = sum_{n in Z} t^{n^2} = 1 + 2 sum_{n>=1} (±1)^n q^{m n^2}.
LaurentSeries theta_phi(const QMonomial& t, long long order);
// phi(t) = (-t, -t, t^2; t^2)_inf.
LaurentSeries theta_phi_product(const QMonomial& t, long long order);

// psi(t) = sum_{n>=0} t^{n(n+1)/2}.
LaurentSeries theta_psi(const QMonomial& t, long long order);
// psi(t) = (t^2; t^2)_inf / (t; t^2)_inf.
LaurentSeries theta_psi_product(const QMonomial& t, long long order);

// Cubic lattice theta sum_{m,n in Z} q^{m^2 + mn + n^2}.
LaurentSeries borwein_a(long long order);

}  // namespace qwp
