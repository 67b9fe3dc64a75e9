#include "qwp/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qwp {

void LaurentSeries::canonicalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    val_ = 0;
    return;
  }
  std::size_t tail = coeffs_.size();
  while (tail > lead && coeffs_[tail - 1].is_zero()) --tail;
  if (lead > 0 || tail < coeffs_.size()) {
    std::vector<Rational> kept(coeffs_.begin() + lead, coeffs_.begin() + tail);
    coeffs_.swap(kept);
    val_ += static_cast<long long>(lead);
  }
  // Stored coefficients may never extend past the certainty horizon.
  if (!coeffs_.empty() && val_ + static_cast<long long>(coeffs_.size()) - 1 > order_) {
    if (val_ > order_) {
      coeffs_.clear();
      val_ = 0;
    } else {
      coeffs_.resize(static_cast<std::size_t>(order_ - val_ + 1));
      canonicalize();
    }
  }
}

LaurentSeries LaurentSeries::monomial(const QMonomial& m, long long order) {
  LaurentSeries s;
  s.order_ = order;
  if (!m.c.is_zero() && m.e <= order) {
    s.val_ = m.e;
    s.coeffs_.push_back(m.c);
  }
  return s;
}

LaurentSeries LaurentSeries::one_minus(const QMonomial& m, long long order) {
  return one(order) - monomial(m, order);
}

LaurentSeries LaurentSeries::from_coeffs(long long val, std::vector<Rational> coeffs,
                                         long long order) {
  LaurentSeries s;
  s.val_ = val;
  s.order_ = order;
  s.coeffs_ = std::move(coeffs);
  s.canonicalize();
  return s;
}

long long LaurentSeries::valuation() const {
  if (coeffs_.empty()) throw std::logic_error("LaurentSeries: valuation of zero series");
  return val_;
}

long long LaurentSeries::top() const {
  if (coeffs_.empty()) throw std::logic_error("LaurentSeries: top of zero series");
  return val_ + static_cast<long long>(coeffs_.size()) - 1;
}

Rational LaurentSeries::coeff(long long e) const {
  if (e > order_)
    throw std::logic_error("LaurentSeries: coefficient q^" + std::to_string(e) +
                           " beyond certainty horizon q^" + std::to_string(order_));
  if (coeffs_.empty() || e < val_ || e > top()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(e - val_)];
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
  long long order = std::min(a.order(), b.order());
  if (a.is_zero() && b.is_zero()) return LaurentSeries::zero(order);

  long long lo = std::numeric_limits<long long>::max();
  long long hi = std::numeric_limits<long long>::min();
  if (!a.is_zero()) {
    lo = std::min(lo, a.valuation());
    hi = std::max(hi, a.top());
  }
  if (!b.is_zero()) {
    lo = std::min(lo, b.valuation());
    hi = std::max(hi, b.top());
  }
  hi = std::min(hi, order);
  if (hi < lo) return LaurentSeries::zero(order);

  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long long e = lo; e <= hi; ++e) {
    Rational v = a.coeff(e);
    Rational w = b.coeff(e);
    out.push_back(subtract ? v - w : v + w);
  }
  return LaurentSeries::from_coeffs(lo, std::move(out), order);
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  return combine(a, b, false);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return combine(a, b, true);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  long long order = std::min(LaurentSeries::sat_add(a.order_, b.eff_val()),
                             LaurentSeries::sat_add(b.order_, a.eff_val()));
  if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(order);

  long long lo = a.val_ + b.val_;
  long long hi = std::min(a.top() + b.top(), order);
  if (hi < lo) return LaurentSeries::zero(order);

  const std::vector<Rational>& ac = a.coeffs_;
  const std::vector<Rational>& bc = b.coeffs_;
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  const long long na = static_cast<long long>(ac.size());
  const long long nb = static_cast<long long>(bc.size());
  for (long long i = 0; i < na; ++i) {
    if (ac[static_cast<std::size_t>(i)].is_zero()) continue;
    long long jmax = std::min(nb - 1, hi - lo - i);
    for (long long j = 0; j <= jmax; ++j) {
      if (bc[static_cast<std::size_t>(j)].is_zero()) continue;
      out[static_cast<std::size_t>(i + j)] +=
          ac[static_cast<std::size_t>(i)] * bc[static_cast<std::size_t>(j)];
    }
  }
  return LaurentSeries::from_coeffs(lo, std::move(out), order);
}

LaurentSeries LaurentSeries::times(const QMonomial& m) const {
  if (m.c.is_zero()) return zero();  // exact zero
  if (is_zero()) return zero(sat_add(order_, m.e));
  LaurentSeries r(*this);
  r.val_ += m.e;
  r.order_ = sat_add(order_, m.e);
  if (!m.c.is_one())
    for (auto& c : r.coeffs_) c *= m.c;
  return r;
}

LaurentSeries LaurentSeries::times_one_minus(const QMonomial& m, long long cap) const {
  // this * (1 - c q^E): coefficient at e is  a_e - c * a_{e-E}.
  if (m.c.is_zero()) return truncated(cap);
  if (m.e == 0 && m.c.is_one()) return zero();  // zero factor annihilates exactly
  long long order = std::min(sat_add(order_, std::min(0LL, m.e)), cap);
  if (is_zero()) return zero(order);
  long long lo = std::min(val_, val_ + m.e);
  long long hi_true = std::max(top(), top() + m.e);
  // A polynomial times (1 - c q^E) is still a polynomial; keep it exact as
  // long as nothing above the cap gets clipped away.
  if (is_exact() && hi_true <= cap) order = kExact;
  long long hi = std::min(hi_true, order);
  if (hi < lo) return zero(order);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long long e = lo; e <= hi; ++e) {
    Rational v = (e >= val_ && e <= top()) ? coeffs_[static_cast<std::size_t>(e - val_)]
                                           : Rational(0);
    long long src = e - m.e;
    if (src >= val_ && src <= top())
      v -= m.c * coeffs_[static_cast<std::size_t>(src - val_)];
    out.push_back(std::move(v));
  }
  return from_coeffs(lo, std::move(out), order);
}

LaurentSeries LaurentSeries::inverse(long long target_order) const {
  if (is_zero()) throw degenerate_error("inverse of a zero series");
  const long long v = val_;
  long long order = std::min(target_order, sat_add(order_, -2 * v));
  long long rel = order + v;  // relative precision of the unit part
  if (rel < 0) return zero(order);

  const std::size_t n = static_cast<std::size_t>(rel) + 1;
  const Rational lead_inv = coeffs_[0].inverse();
  std::vector<Rational> out(n, Rational(0));
  out[0] = lead_inv;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc(0);
    std::size_t jmax = std::min(k, coeffs_.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) {
      if (coeffs_[j].is_zero()) continue;
      acc += coeffs_[j] * out[k - j];
    }
    if (!acc.is_zero()) out[k] = -(lead_inv * acc);
  }
  return from_coeffs(-v, std::move(out), order);
}

LaurentSeries LaurentSeries::truncated(long long new_order) const {
  LaurentSeries r(*this);
  r.order_ = std::min(order_, new_order);
  r.canonicalize();
  return r;
}

LaurentSeries LaurentSeries::dilated(long long m) const {
  if (m < 1) throw std::invalid_argument("dilated: step must be >= 1");
  if (m == 1) return *this;
  LaurentSeries r;
  r.order_ = order_ >= kExact / m ? kExact : m * order_ + (m - 1);
  if (is_zero()) return r;
  r.val_ = val_ * m;
  r.coeffs_.assign(static_cast<std::size_t>((coeffs_.size() - 1) * m + 1), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * m] = coeffs_[i];
  return r;
}

LaurentSeries LaurentSeries::pow(long long n) const {
  if (n < 0) throw std::invalid_argument("pow: negative exponent; use inverse()");
  LaurentSeries acc = one();
  LaurentSeries base(*this);
  while (n) {
    if (n & 1) acc = acc * base;
    if (n >>= 1) base = base * base;
  }
  return acc;
}

std::string LaurentSeries::str(long long max_terms) const {
  std::ostringstream os;
  if (is_zero()) {
    os << "0";
  } else {
    long long shown = 0;
    long long last_shown = val_;
    for (long long e = val_; e <= top() && shown < max_terms; ++e) {
      Rational c = coeff(e);
      if (c.is_zero()) continue;
      if (shown == 0) {
        os << c.str();
      } else {
        os << (c.sign() > 0 ? " + " : " - ") << (c.sign() > 0 ? c : -c).str();
      }
      if (e != 0) os << "*q^" << e;
      last_shown = e;
      ++shown;
    }
    if (last_shown < top()) os << " + ...";
  }
  if (!is_exact()) os << " + O(q^" << order_ + 1 << ")";
  return os.str();
}

bool LaurentSeries::well_formed() const {
  if (coeffs_.empty()) return val_ == 0;
  if (coeffs_.front().is_zero() || coeffs_.back().is_zero()) return false;
  return val_ + static_cast<long long>(coeffs_.size()) - 1 <= order_;
}

LaurentSeries sum_terms(long long start,
                        const std::function<LaurentSeries(long long)>& term,
                        long long order, int guard) {
  LaurentSeries acc = LaurentSeries::zero();
  int beyond = 0;
  const long long iter_cap = start + 8 * (order + 8) + 64;
  for (long long n = start;; ++n) {
    if (n > iter_cap)
      throw guard_error("sum_terms: term valuation failed to pass q^" +
                        std::to_string(order) + " after " + std::to_string(n - start) +
                        " terms");
    LaurentSeries t = term(n);
    bool beyond_window = t.is_zero() ? t.order() >= order : t.valuation() > order;
    if (beyond_window) {
      if (++beyond >= guard) break;
      continue;
    }
    beyond = 0;
    acc = acc + t;
  }
  return acc.truncated(order);
}

LaurentSeries build_to_order(
    long long order, const std::function<LaurentSeries(long long)>& build) {
  long long w = order;
  for (int tries = 0; tries < 8; ++tries) {
    LaurentSeries s = build(w);
    if (s.order() >= order) return s;
    w += order - s.order();
  }
  throw guard_error("build_to_order: could not reach order " +
                    std::to_string(order));
}

}  // namespace qwp
