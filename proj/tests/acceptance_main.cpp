// Integration gate. Each criterion prints exactly one PASS/FAIL line; the
// process exits 0 only when every criterion holds. The first argument is the
// path to the command-line binary, which criterion 1 drives end to end.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qwp/catalog.hpp"
#include "qwp/pairs.hpp"
#include "qwp/pochhammer.hpp"
#include "qwp/qfunctions.hpp"
#include "qwp/report.hpp"
#include "support.hpp"

using namespace qwp;

namespace {

QMonomial mono(long long num, long long den = 1, long long e = 0) {
  return QMonomial(Rational(num) / Rational(den), e);
}
QMonomial Q(long long e) { return QMonomial::q(e); }

bool agree(const LaurentSeries& a, const LaurentSeries& b, long long order,
           std::string& note, const std::string& what) {
  CheckResult res = compare_to_order(a, b, order);
  if (res.passed()) return true;
  std::ostringstream os;
  os << what << ": " << res.detail;
  if (res.mismatch) os << " at q^" << res.mismatch->exponent;
  note = os.str();
  return false;
}

// 1. The CLI verifies the whole catalog at order 25: exit 0, at least 30
// cases, all passing, and comfortably inside two minutes.
bool full_catalog_via_cli(const std::string& cli, std::string& note) {
  std::string cmd = cli + " run --all --order 25 --json";
  auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    note = "could not launch " + cmd;
    return false;
  }
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int rc = pclose(pipe);
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  int status = (rc != -1 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  if (status != 0) {
    note = "exit code " + std::to_string(status);
    return false;
  }
  auto doc = nlohmann::json::parse(out, nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) {
    note = "unparseable report";
    return false;
  }
  if (doc.size() < 30) {
    note = "only " + std::to_string(doc.size()) + " cases";
    return false;
  }
  for (const auto& row : doc) {
    if (row.value("status", "") != "pass") {
      note = row.value("id", "?") + " did not pass";
      return false;
    }
    if (row.value("matched_order", -1) < 25) {
      note = row.value("id", "?") + " matched below the requested order";
      return false;
    }
  }
  if (secs > 120.0) {
    note = "took too long";
    return false;
  }
  std::ostringstream os;
  os << doc.size() << " cases in " << static_cast<int>(secs * 1000) << "ms";
  note = os.str();
  return true;
}

// 2. One chain step on top of both explicit pair constructions still
// satisfies the defining relation.
bool chain_preserves_defining(std::string& note) {
  QMonomial a = mono(2), k = mono(3), y = mono(11), z = mono(13);
  QMonomial c = k * y * z / a.shift(1);
  for (const char* label : {"quotient", "double-length"}) {
    WPPair base = std::string(label) == "quotient"
                      ? make_singh_pair(a, c, mono(5), mono(7), 1)
                      : make_ab_pair(a, c, 1);
    WPPair next = chain_transform(base, y, z, k);
    CheckResult res = defining_check(next, 5, 25);
    if (!res.passed()) {
      note = std::string(label) + ": " + res.detail;
      return false;
    }
  }
  return true;
}

// 3. The four kernel-series lemmas hold on ten randomized prime bindings
// each, at order 25.
bool randomized_kernel_lemmas(std::string& note) {
  for (const char* id : {"f-antisym", "f-lambert", "f-doubling", "f-closed"}) {
    const IdentityCase* c = find_case(id);
    if (!c) {
      note = std::string("missing case ") + id;
      return false;
    }
    for (unsigned long long seed = 1; seed <= 10; ++seed) {
      Bindings bs = random_prime_bindings(*c, seed);
      CaseOutcome out = run_case(*c, bs, 25);
      if (out.result.status != CheckResult::Status::pass) {
        std::ostringstream os;
        os << id << " seed " << seed << ": "
           << to_string(out.result.status);
        note = os.str();
        return false;
      }
    }
  }
  return true;
}

// 4. The limit kernels and the Lambert series agree across all their
// representations at order 30, on bindings that include base step 3 with
// Laurent arguments 1/q and 1/q^2.
bool representation_agreement(std::string& note) {
  const long long N = 30;
  struct B {
    QMonomial a, z;
    long long m;
  };
  const std::vector<B> bindings = {
      {mono(2), mono(5), 1},  {mono(-3), mono(7), 1}, {mono(1, 2), mono(5, 2), 1},
      {Q(-1), mono(5), 3},    {Q(-2), mono(7), 3},
  };
  for (const auto& b : bindings) {
    std::string where = "a=" + b.a.str() + " m=" + std::to_string(b.m);
    LaurentSeries f1 = f1_lambert(b.a, b.z, b.m, N);
    if (!agree(f1, f1_series(b.a, b.z, b.m, N), N, note, "f1 " + where) ||
        !agree(f1, f1_simple(b.a, b.z, b.m, N), N, note, "f1 " + where))
      return false;
    LaurentSeries f2 = f2_lambert(b.a, b.m, N);
    if (!agree(f2, f2_series(b.a, b.m, N), N, note, "f2 " + where) ||
        !agree(f2, f2_simple(b.a, b.m, N), N, note, "f2 " + where))
      return false;
    LaurentSeries f3 = f3_lambert(b.a, b.m, N);
    if (!agree(f3, f3_series(b.a, b.m, N), N, note, "f3 " + where) ||
        !agree(f3, f3_simple(b.a, b.m, N), N, note, "f3 " + where))
      return false;
    LaurentSeries la = lambert(b.a, b.m, N);
    if (!agree(la, la_vwp(b.a, b.m, N), N, note, "La " + where) ||
        !agree(la, la_alt(b.a, b.m, N), N, note, "La " + where) ||
        !agree(la, la_weighted_inv(b.a, b.m, N), N, note, "La " + where) ||
        !agree(la, la_weighted(b.a, b.m, N), N, note, "La " + where))
      return false;
  }
  return true;
}

// 5. Theta values match independent lattice enumeration at order 40,
// including the documented leading coefficients.
bool theta_cross_checks(std::string& note) {
  const long long N = 40;
  LaurentSeries phi = theta_phi(QMonomial::q(), N);
  const long long phi_head[] = {1, 2, 0, 0, 2};
  for (long long e = 0; e <= 4; ++e)
    if (phi.coeff(e) != Rational(phi_head[e])) {
      note = "phi head coefficient at q^" + std::to_string(e);
      return false;
    }
  for (long long e = 0; e <= N; ++e) {
    long long square_reps = 0;
    for (long long x = -7; x <= 7; ++x)
      if (x * x == e) ++square_reps;
    if (phi.coeff(e) != Rational(square_reps)) {
      note = "phi disagrees with square counting at q^" + std::to_string(e);
      return false;
    }
  }
  LaurentSeries aq = borwein_a(N);
  const long long a_head[] = {1, 6, 0, 6, 6};
  for (long long e = 0; e <= 4; ++e)
    if (aq.coeff(e) != Rational(a_head[e])) {
      note = "lattice head coefficient at q^" + std::to_string(e);
      return false;
    }
  for (long long e = 0; e <= N; ++e) {
    if (aq.coeff(e) != Rational(support::hexagonal_lattice_count(e))) {
      note = "lattice count disagrees at q^" + std::to_string(e);
      return false;
    }
    long long expected = e == 0 ? 1 : 6 * support::divisor_character_3(e);
    if (aq.coeff(e) != Rational(expected)) {
      note = "character sum disagrees at q^" + std::to_string(e);
      return false;
    }
  }
  return true;
}

// 6. The classical summation anchors verify at order 30.
bool classical_anchors(std::string& note) {
  for (const char* id : {"6psi6", "6phi5", "qbin", "qbin-a0", "qbin-euler"}) {
    const IdentityCase* c = find_case(id);
    if (!c) {
      note = std::string("missing case ") + id;
      return false;
    }
    CaseOutcome out = run_case(*c, {}, 30);
    if (out.result.status != CheckResult::Status::pass) {
      note = std::string(id) + ": " + to_string(out.result.status) +
             (out.result.detail.empty() ? "" : " " + out.result.detail);
      return false;
    }
  }
  return true;
}

// 7. A deliberately planted factor (1 + q^20) on one side is detected at
// exactly exponent 20.
bool planted_defect_detected(std::string& note) {
  const IdentityCase* base = find_case("aq-entry");
  if (!base) {
    note = "missing case aq-entry";
    return false;
  }
  CaseOutcome out = run_case(negative_control(*base, 20), {}, 25);
  if (out.result.status != CheckResult::Status::mismatch) {
    note = "control did not mismatch";
    return false;
  }
  if (!out.result.mismatch || out.result.mismatch->exponent != 20) {
    note = "mismatch at the wrong exponent";
    return false;
  }
  if (out.result.matched_order != 19) {
    note = "matched order should stop just below the defect";
    return false;
  }
  return true;
}

// 8. The infinite product and the divisor generating function match
// independent oracles at order 40.
bool product_and_divisor_oracles(std::string& note) {
  const long long N = 40;
  LaurentSeries euler = poch_infinite(QMonomial::q(), 1, N);
  auto pent = support::euler_product_oracle(static_cast<int>(N));
  for (long long e = 0; e <= N; ++e)
    if (euler.coeff(e) != Rational(pent[static_cast<size_t>(e)])) {
      note = "product disagrees with the oracle at q^" + std::to_string(e);
      return false;
    }
  LaurentSeries dgf = lambert(mono(1), 1, N);
  if (!dgf.coeff(0).is_zero()) {
    note = "divisor generating function has a constant term";
    return false;
  }
  for (long long e = 1; e <= N; ++e)
    if (dgf.coeff(e) != Rational(support::divisor_count(e))) {
      note = "divisor count disagrees at q^" + std::to_string(e);
      return false;
    }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance_tests <path-to-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  struct Criterion {
    std::string name;
    std::function<bool(std::string&)> check;
  };
  const std::vector<Criterion> criteria = {
      {"full catalog verifies at order 25 through the CLI",
       [&](std::string& n) { return full_catalog_via_cli(cli, n); }},
      {"chain step preserves the defining relation for both pair families",
       chain_preserves_defining},
      {"kernel-series lemmas hold on 10 randomized prime bindings each",
       randomized_kernel_lemmas},
      {"limit-kernel and Lambert representations agree at order 30",
       representation_agreement},
      {"theta values match independent lattice counts at order 40",
       theta_cross_checks},
      {"classical summation anchors verify at order 30", classical_anchors},
      {"planted defect is caught at exactly the planted exponent",
       planted_defect_detected},
      {"infinite product and divisor counts match oracles at order 40",
       product_and_divisor_oracles},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    bool ok = false;
    try {
      ok = criteria[i].check(note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". "
              << criteria[i].name;
    if (!note.empty()) std::cout << "  (" << note << ")";
    std::cout << "\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
