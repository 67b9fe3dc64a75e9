#pragma once

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwp/qmonomial.hpp"
#include "qwp/rational.hpp"

namespace qwp {

// Raised when a parameter binding makes a required denominator vanish
// (zero-series inversion, vanishing Pochhammer denominator, k = 1 in a
// very-well-poised ratio, ...). The message names the offending factor.
class degenerate_error : public std::domain_error {
 public:
  explicit degenerate_error(const std::string& what) : std::domain_error(what) {}
};

// Raised when a term sum fails to leave the working window: the per-term
// valuation stopped growing, which signals an invalid parameter binding.
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Truncated Laurent series over exact rationals in one variable q.
//
// A value represents  sum_{e=val}^{top} c_e q^e  +  O(q^{order+1}):
// every coefficient with exponent <= order is exactly known (exponents below
// val and between top and order are exactly zero), exponents above order are
// unknown. `order` may carry the saturating sentinel exact_order() for series
// that are exactly known at every exponent (finite Laurent polynomials).
//
// Orders propagate honestly through arithmetic:
//   add:      order = min(orders)
//   mul:      order = min(a.order + val(b), b.order + val(a))
//   inverse:  order = order - 2*val   (capped by the requested target)
// so relative (valuation-adjusted) precision is never overstated. Equality is
// only defined up to an order; see agrees_to / first_mismatch in check.hpp.
class LaurentSeries {
 public:
  static long long exact_order() { return kExact; }

  LaurentSeries() : val_(0), order_(kExact) {}  // zero, exactly

  static LaurentSeries zero(long long order = kExact) {
    LaurentSeries s;
    s.order_ = order;
    return s;
  }
  static LaurentSeries one(long long order = kExact) {
    return monomial(QMonomial(1), order);
  }
  static LaurentSeries monomial(const QMonomial& m, long long order = kExact);
  // 1 - m, as an exact binomial.
  static LaurentSeries one_minus(const QMonomial& m, long long order = kExact);
  // Explicit coefficient list c_val..c_top for tests and oracles.
  static LaurentSeries from_coeffs(long long val, std::vector<Rational> coeffs,
                                   long long order);

  bool is_zero() const { return coeffs_.empty(); }
  // Lowest exponent with a nonzero coefficient; only meaningful when nonzero.
  long long valuation() const;
  long long top() const;  // highest stored exponent; only when nonzero
  long long order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }

  // Exact coefficient of q^e; requires e <= order.
  Rational coeff(long long e) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

  // Multiply by a monomial (exact shift-and-scale).
  LaurentSeries times(const QMonomial& m) const;
  // Multiply by the binomial (1 - c q^E), truncating stored coefficients at
  // `cap` (order is lowered to cap only if something was actually dropped).
  LaurentSeries times_one_minus(const QMonomial& m, long long cap = kExact) const;

  // Multiplicative inverse with result order min(target, order - 2*valuation).
  // Throws degenerate_error on the zero series.
  LaurentSeries inverse(long long target_order) const;

  LaurentSeries truncated(long long new_order) const;
  // Substitute q -> q^m (m >= 1).
  LaurentSeries dilated(long long m) const;
  LaurentSeries pow(long long n) const;  // n >= 0

  std::string str(long long max_terms = 12) const;

  bool well_formed() const;  // canonical-form check, used by tests

 private:
  static constexpr long long kExact = std::numeric_limits<long long>::max() / 4;
  static long long sat_add(long long o, long long d) {
    if (o >= kExact) return kExact;
    return o + d;
  }

  // First exponent whose coefficient is not known to be zero; kExact-ish for
  // the exact zero series. This is what order propagation needs.
  long long eff_val() const {
    return coeffs_.empty() ? sat_add(order_, 1) : val_;
  }

  void canonicalize();

  long long val_;                  // exponent of coeffs_[0] (0 when zero)
  long long order_;                // certain through q^order_
  std::vector<Rational> coeffs_;  // dense, leading/trailing nonzero
};

// Sum of term(n) for n >= start over all terms whose valuation is <= order.
// Stops cleanly after `guard` consecutive terms with valuation beyond order
// (exact zero terms count as beyond); throws guard_error if the valuations
// never leave the window. The result's order is capped at `order`.
LaurentSeries sum_terms(long long start,
                        const std::function<LaurentSeries(long long)>& term,
                        long long order, int guard = 4);

// Evaluate build(w) at a working order w >= order, retrying with exactly the
// observed shortfall added when negative valuations eat into the result's
// order. Raising the working order by d raises every downstream order by at
// least d, so this settles in one retry; guard_error if it somehow does not.
LaurentSeries build_to_order(
    long long order, const std::function<LaurentSeries(long long)>& build);

}  // namespace qwp
