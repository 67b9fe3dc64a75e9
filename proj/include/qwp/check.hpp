#pragma once

#include <optional>
#include <string>

#include "qwp/laurent.hpp"

namespace qwp {

struct Mismatch {
  long long exponent = 0;
  Rational lhs, rhs;
};

// Outcome of one truncated-series equality check. `pass` means both sides
// agree coefficient-for-coefficient through the requested order; on mismatch
// `matched_order` is the last exponent through which they still agreed.
struct CheckResult {
  enum class Status { pass, mismatch, degenerate };

  Status status = Status::degenerate;
  long long requested_order = 0;
  long long matched_order = 0;
  std::optional<Mismatch> mismatch;
  std::string detail;  // offending factor for degenerate results

  bool passed() const { return status == Status::pass; }
};

inline const char* to_string(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::pass: return "pass";
    case CheckResult::Status::mismatch: return "mismatch";
    case CheckResult::Status::degenerate: return "degenerate";
  }
  return "?";
}

// First exponent <= order where the two series differ, if any. Both series
// must be certain through `order`; anything less is an internal precision
// bug, not a verification outcome, and throws.
inline std::optional<Mismatch> first_mismatch(const LaurentSeries& lhs,
                                              const LaurentSeries& rhs,
                                              long long order) {
  if (lhs.order() < order || rhs.order() < order)
    throw std::logic_error(
        "first_mismatch: working precision fell short of the requested order (have " +
        std::to_string(std::min(lhs.order(), rhs.order())) + ", need " +
        std::to_string(order) + ")");
  long long lo = order, hi = std::numeric_limits<long long>::min();
  if (!lhs.is_zero()) {
    lo = std::min(lo, lhs.valuation());
    hi = std::max(hi, lhs.top());
  }
  if (!rhs.is_zero()) {
    lo = std::min(lo, rhs.valuation());
    hi = std::max(hi, rhs.top());
  }
  // Past both stored tops every coefficient <= order is known zero, so the
  // scan stops there (order itself may be the saturating exact sentinel).
  hi = std::min(hi, order);
  for (long long e = lo; e <= hi; ++e) {
    Rational l = lhs.coeff(e), r = rhs.coeff(e);
    if (l != r) return Mismatch{e, std::move(l), std::move(r)};
  }
  return std::nullopt;
}

inline bool agrees_to(const LaurentSeries& lhs, const LaurentSeries& rhs,
                      long long order) {
  return !first_mismatch(lhs, rhs, order).has_value();
}

inline CheckResult compare_to_order(const LaurentSeries& lhs, const LaurentSeries& rhs,
                                    long long order) {
  CheckResult res;
  res.requested_order = order;
  auto mm = first_mismatch(lhs, rhs, order);
  if (mm) {
    res.status = CheckResult::Status::mismatch;
    res.matched_order = mm->exponent - 1;
    res.mismatch = std::move(mm);
  } else {
    res.status = CheckResult::Status::pass;
    res.matched_order = order;
  }
  return res;
}

}  // namespace qwp
