#include "qwp/report.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace qwp {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string bindings_str(const Bindings& bs) {
  std::string out;
  for (const auto& [name, value] : bs) {
    if (!out.empty()) out += " ";
    out += name + "=" + value.str();
  }
  return out;
}

}  // namespace

std::string report_json(const std::vector<CaseOutcome>& outcomes,
                        bool suppress_timing) {
  ordered_json arr = ordered_json::array();
  for (const auto& out : outcomes) {
    ordered_json row;
    row["id"] = out.id;
    row["paper_eq"] = out.paper_eq;
    ordered_json bs = ordered_json::object();
    for (const auto& [name, value] : out.bindings) bs[name] = value.str();
    row["bindings"] = std::move(bs);
    row["order"] = out.order;
    row["matched_order"] = out.result.matched_order;
    row["status"] = to_string(out.result.status);
    if (out.result.mismatch) {
      ordered_json mm;
      mm["exponent"] = out.result.mismatch->exponent;
      mm["lhs"] = out.result.mismatch->lhs.str();
      mm["rhs"] = out.result.mismatch->rhs.str();
      row["mismatch"] = std::move(mm);
    } else {
      row["mismatch"] = nullptr;
    }
    row["millis"] = suppress_timing ? 0 : out.millis;
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

std::string report_text(const std::vector<CaseOutcome>& outcomes,
                        bool suppress_timing) {
  std::ostringstream os;
  long long pass = 0, mismatch = 0, degenerate = 0;
  for (const auto& out : outcomes) {
    std::string status = to_string(out.result.status);
    os << status;
    for (size_t i = status.size(); i < 12; ++i) os << ' ';
    os << out.id;
    for (size_t i = out.id.size(); i < 22; ++i) os << ' ';
    os << "order=" << out.order;
    switch (out.result.status) {
      case CheckResult::Status::pass:
        ++pass;
        os << " matched=" << out.result.matched_order;
        break;
      case CheckResult::Status::mismatch:
        ++mismatch;
        os << " matched=" << out.result.matched_order;
        if (out.result.mismatch)
          os << " q^" << out.result.mismatch->exponent << ": lhs "
             << out.result.mismatch->lhs.str() << ", rhs "
             << out.result.mismatch->rhs.str();
        break;
      case CheckResult::Status::degenerate:
        ++degenerate;
        if (!out.result.detail.empty()) os << " " << out.result.detail;
        break;
    }
    std::string bs = bindings_str(out.bindings);
    if (!bs.empty()) os << "  [" << bs << "]";
    os << "  " << (suppress_timing ? 0 : out.millis) << "ms\n";
  }
  os << outcomes.size() << " case" << (outcomes.size() == 1 ? "" : "s")
     << ": " << pass << " pass, " << mismatch << " mismatch, " << degenerate
     << " degenerate\n";
  return os.str();
}

std::vector<CaseOutcome> run_seeded(
    const std::vector<const IdentityCase*>& sel, unsigned long long seed,
    const Bindings& overrides, std::optional<long long> order,
    unsigned threads) {
  std::vector<CaseOutcome> out(sel.size());
  if (sel.empty()) return out;

  // Bindings are drawn up front so they depend only on (id, seed). A case
  // with no admissible random binding reports as degenerate instead of
  // aborting the batch.
  std::vector<std::optional<Bindings>> drawn(sel.size());
  std::vector<std::string> draw_errors(sel.size());
  for (size_t i = 0; i < sel.size(); ++i) {
    try {
      Bindings bs = random_prime_bindings(*sel[i], seed);
      for (const auto& [name, value] : overrides) {
        auto it = bs.find(name);
        if (it != bs.end()) it->second = value;
      }
      drawn[i] = std::move(bs);
    } catch (const std::domain_error& e) {
      draw_errors[i] = e.what();
    }
  }

  unsigned workers = threads ? threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(sel.size()));
  std::atomic<size_t> next{0};
  auto drain = [&]() {
    for (size_t i = next.fetch_add(1); i < sel.size();
         i = next.fetch_add(1)) {
      if (drawn[i]) {
        out[i] = run_case(*sel[i], *drawn[i], order);
      } else {
        out[i].id = sel[i]->id;
        out[i].paper_eq = sel[i]->paper_eq;
        out[i].bindings = sel[i]->defaults;
        out[i].order = order.value_or(sel[i]->default_order);
        out[i].result.status = CheckResult::Status::degenerate;
        out[i].result.requested_order = out[i].order;
        out[i].result.matched_order = -1;
        out[i].result.detail = draw_errors[i];
      }
    }
  };
  if (workers == 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
  }
  return out;
}

int exit_code(const std::vector<CaseOutcome>& outcomes) {
  bool any_degenerate = false;
  for (const auto& out : outcomes) {
    if (out.result.status == CheckResult::Status::mismatch) return 1;
    if (out.result.status == CheckResult::Status::degenerate)
      any_degenerate = true;
  }
  return any_degenerate ? 3 : 0;
}

}  // namespace qwp
