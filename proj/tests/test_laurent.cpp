#include <random>

#include "doctest.h"
#include "qwp/check.hpp"
#include "qwp/laurent.hpp"
#include "support.hpp"

using qwp::LaurentSeries;
using qwp::QMonomial;
using qwp::Rational;

namespace {
QMonomial Q(long long e) { return QMonomial::q(e); }
}

TEST_SUITE("laurent") {

TEST_CASE("zero and one are canonical") {
  CHECK(LaurentSeries::zero().is_zero());
  CHECK(LaurentSeries::zero().well_formed());
  CHECK(LaurentSeries::one().coeff(0).is_one());
  CHECK(LaurentSeries::one().is_exact());
}

TEST_CASE("(1 - q) + q = 1 exactly") {
  LaurentSeries s = LaurentSeries::one_minus(Q(1)) + LaurentSeries::monomial(Q(1));
  CHECK(!s.is_zero());
  CHECK(s.valuation() == 0);
  CHECK(s.top() == 0);
  CHECK(s.coeff(0).is_one());
  CHECK(s.is_exact());
}

TEST_CASE("invert(1 - q) is the geometric series") {
  LaurentSeries g = LaurentSeries::one_minus(Q(1)).inverse(12);
  CHECK(g.order() == 12);
  for (long long e = 0; e <= 12; ++e) CHECK(g.coeff(e).is_one());
}

TEST_CASE("inverse handles valuation and negative exponents") {
  // 1/(q^2 - q^3) = q^-2 * (1 + q + q^2 + ...)
  LaurentSeries s = LaurentSeries::monomial(Q(2)) - LaurentSeries::monomial(Q(3));
  LaurentSeries inv = s.inverse(8);
  CHECK(inv.valuation() == -2);
  for (long long e = -2; e <= 8; ++e) CHECK(inv.coeff(e).is_one());
  // q^-2 * q^2 = 1
  LaurentSeries unit = LaurentSeries::monomial(Q(-2)) * LaurentSeries::monomial(Q(2));
  CHECK(unit.coeff(0).is_one());
}

TEST_CASE("inverse of zero is degenerate") {
  CHECK_THROWS_AS(LaurentSeries::zero().inverse(10), qwp::degenerate_error);
}

TEST_CASE("two-sided inverse: s * invert(s) = 1 (random)") {
  std::mt19937 rng(20260815u);
  for (int i = 0; i < 100; ++i) {
    LaurentSeries s = support::random_nonzero_series(rng, 20);
    LaurentSeries p = s * s.inverse(20);
    long long order = p.order();
    CHECK(order >= 20 - 2 * 3 - 3);  // valuation costs are bounded by the generator
    CHECK(qwp::agrees_to(p, LaurentSeries::one(), order));
  }
}

TEST_CASE("ring axioms to a shared order (random property)") {
  std::mt19937 rng(424243u);
  for (int i = 0; i < 60; ++i) {
    LaurentSeries a = support::random_series(rng);
    LaurentSeries b = support::random_series(rng);
    LaurentSeries c = support::random_series(rng);
    LaurentSeries lhs = (a + b) * c;
    LaurentSeries rhs = a * c + b * c;
    long long n = std::min(lhs.order(), rhs.order());
    CHECK(qwp::agrees_to(lhs, rhs, n));

    LaurentSeries ab = a * b, ba = b * a;
    CHECK(qwp::agrees_to(ab, ba, std::min(ab.order(), ba.order())));

    LaurentSeries abc1 = (a * b) * c, abc2 = a * (b * c);
    CHECK(qwp::agrees_to(abc1, abc2, std::min(abc1.order(), abc2.order())));

    CHECK(ab.well_formed());
    CHECK((a + b).well_formed());
  }
}

TEST_CASE("order bookkeeping: add takes min, mul adds valuations") {
  LaurentSeries a = LaurentSeries::from_coeffs(0, {Rational(1)}, 10);
  LaurentSeries b = LaurentSeries::from_coeffs(0, {Rational(1)}, 15);
  CHECK((a + b).order() == 10);
  LaurentSeries m = LaurentSeries::monomial(Q(5));  // exact
  CHECK((a * m).order() == 15);   // 10 + 5
  CHECK((m * m).is_exact());      // exact * exact stays exact
  LaurentSeries neg = LaurentSeries::from_coeffs(-2, {Rational(1)}, 10);
  CHECK((a * neg).order() == 8);  // min(10 + (-2), 10 + 0)
}

TEST_CASE("truncation coherence") {
  std::mt19937 rng(77u);
  for (int i = 0; i < 40; ++i) {
    LaurentSeries a = support::random_series(rng, 20);
    LaurentSeries b = support::random_series(rng, 20);
    LaurentSeries full = a * b;
    LaurentSeries direct = a.truncated(12) * b.truncated(12);
    long long n = std::min(full.truncated(direct.order()).order(), direct.order());
    CHECK(qwp::agrees_to(full.truncated(n), direct, n));

    LaurentSeries sum_full = (a + b).truncated(12);
    LaurentSeries sum_direct = a.truncated(12) + b.truncated(12);
    CHECK(qwp::agrees_to(sum_full, sum_direct, 12));
  }
}

TEST_CASE("dilation substitutes q -> q^m") {
  LaurentSeries s = LaurentSeries::one_minus(Q(1)).pow(2);  // 1 - 2q + q^2
  LaurentSeries d = s.dilated(3);
  CHECK(d.coeff(0).is_one());
  CHECK(d.coeff(3) == Rational(-2));
  CHECK(d.coeff(6).is_one());
  CHECK(d.coeff(1).is_zero());
  LaurentSeries t = LaurentSeries::from_coeffs(0, {Rational(1)}, 10).dilated(2);
  CHECK(t.order() == 21);  // known through q^10 becomes known through q^21
}

TEST_CASE("equality is relative to the shared order") {
  LaurentSeries g10 = LaurentSeries::one_minus(Q(1)).inverse(10);
  LaurentSeries g20 = LaurentSeries::one_minus(Q(1)).inverse(20);
  CHECK(qwp::agrees_to(g10, g20, 10));
  CHECK_THROWS_AS(qwp::agrees_to(g10, g20, 15), std::logic_error);

  LaurentSeries perturbed = g20 + LaurentSeries::monomial(Q(7));
  auto mm = qwp::first_mismatch(g20, perturbed, 10);
  REQUIRE(mm.has_value());
  CHECK(mm->exponent == 7);
  CHECK(mm->rhs - mm->lhs == Rational(1));
}

TEST_CASE("compare_to_order reports pass and mismatch") {
  LaurentSeries g = LaurentSeries::one_minus(Q(1)).inverse(25);
  auto ok = qwp::compare_to_order(g, g, 25);
  CHECK(ok.passed());
  CHECK(ok.matched_order == 25);

  LaurentSeries bad = g * LaurentSeries::one(25) + LaurentSeries::monomial(Q(20));
  auto res = qwp::compare_to_order(g, bad, 25);
  CHECK(res.status == qwp::CheckResult::Status::mismatch);
  CHECK(res.matched_order == 19);
  REQUIRE(res.mismatch.has_value());
  CHECK(res.mismatch->exponent == 20);
}

TEST_CASE("sum_terms: geometric series") {
  LaurentSeries s = qwp::sum_terms(
      1, [](long long n) { return LaurentSeries::monomial(Q(n)); }, 15);
  LaurentSeries expect =
      LaurentSeries::one_minus(Q(1)).inverse(15).times(Q(1));
  CHECK(qwp::agrees_to(s, expect, 15));
  CHECK(s.order() == 15);
}

TEST_CASE("sum_terms: all-zero generator terminates at zero") {
  LaurentSeries s = qwp::sum_terms(
      1, [](long long) { return LaurentSeries::zero(); }, 10);
  CHECK(s.is_zero());
}

TEST_CASE("sum_terms: stuck valuation trips the guard") {
  CHECK_THROWS_AS(qwp::sum_terms(
                      1, [](long long) { return LaurentSeries::monomial(Q(1)); }, 10),
                  qwp::guard_error);
}

TEST_CASE("sum_terms skips interleaved beyond-order terms without stopping early") {
  // Terms q^n for even n, exact zero for odd n: guard must not trip before
  // the even terms leave the window.
  LaurentSeries s = qwp::sum_terms(
      1,
      [](long long n) {
        if (n % 2) return LaurentSeries::zero();
        return LaurentSeries::monomial(Q(n / 2));
      },
      12);
  for (long long e = 1; e <= 12; ++e) CHECK(s.coeff(e).is_one());
}

TEST_CASE("canonicalization strips and re-strips") {
  LaurentSeries s = LaurentSeries::from_coeffs(
      -1, {Rational(0), Rational(0), Rational(3), Rational(0)}, 30);
  CHECK(s.valuation() == 1);
  CHECK(s.top() == 1);
  CHECK(s.well_formed());
  LaurentSeries z = LaurentSeries::from_coeffs(5, {Rational(0)}, 30);
  CHECK(z.is_zero());
  CHECK(z.well_formed());
}

TEST_CASE("times_one_minus matches explicit multiplication") {
  std::mt19937 rng(99u);
  for (int i = 0; i < 40; ++i) {
    LaurentSeries s = support::random_series(rng, 18);
    QMonomial m(support::random_nonzero_rational(rng),
                std::uniform_int_distribution<int>(-3, 6)(rng));
    LaurentSeries fast = s.times_one_minus(m, 18);
    LaurentSeries slow = s * LaurentSeries::one_minus(m);
    long long n = std::min(fast.order(), slow.order());
    CHECK(qwp::agrees_to(fast, slow, n));
  }
}

}  // TEST_SUITE
