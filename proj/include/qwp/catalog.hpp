#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwp/check.hpp"
#include "qwp/laurent.hpp"
#include "qwp/qmonomial.hpp"

namespace qwp {

// Named parameter values for one identity check. Keys are the short parameter
// names printed by `list` (a, k, z, y, p1, ...).
using Bindings = std::map<std::string, QMonomial>;

// One verifiable identity. `lhs` and `rhs` build the two sides independently
// from the bound parameters; `validate` rejects bindings that would hit a
// vanishing denominator (or otherwise leave the formal Laurent ring) by
// throwing degenerate_error before any series work starts.
struct IdentityCase {
  std::string id;        // stable CLI identifier, unique, kebab-case
  std::string title;     // one-line human description
  std::string paper_eq;  // opaque upstream equation tag for reports
  std::vector<std::string> tags;
  std::string constraints;  // documented nondegeneracy conditions, free text
  Bindings defaults;
  // Parameter names that --seed robustness runs may rebind to random primes.
  std::vector<std::string> randomizable;
  long long default_order = 25;
  std::function<void(const Bindings&)> validate;  // throws degenerate_error
  std::function<LaurentSeries(const Bindings&, long long order)> lhs, rhs;
};

// Result of running one case at concrete bindings.
struct CaseOutcome {
  std::string id;
  std::string paper_eq;
  Bindings bindings;
  long long order = 0;
  CheckResult result;
  long long millis = 0;
};

// The full registry, sorted by id. Built once, thread-safe to read.
const std::vector<IdentityCase>& catalog();

// Case lookup by exact id; nullptr when absent.
const IdentityCase* find_case(const std::string& id);

// All cases carrying `tag`, in id order.
std::vector<const IdentityCase*> cases_with_tag(const std::string& tag);

// Defaults overlaid with `overrides`; override names not used by the case are
// ignored so one --param flag can apply across a multi-case selection.
Bindings merged_bindings(const IdentityCase& c, const Bindings& overrides);

// Validate, build both sides, compare. Binding problems (validate throws, or
// a guard trips while summing) land in the outcome as status degenerate with
// a detail message; the call itself only throws on internal logic errors.
CaseOutcome run_case(const IdentityCase& c, const Bindings& overrides = {},
                     std::optional<long long> order = std::nullopt);

// Run a selection on `threads` workers (0 = hardware concurrency). Results
// come back in the order the cases were given regardless of scheduling.
std::vector<CaseOutcome> run_cases(const std::vector<const IdentityCase*>& sel,
                                   const Bindings& overrides = {},
                                   std::optional<long long> order = std::nullopt,
                                   unsigned threads = 0);

// Deterministic random prime rebinding of c's randomizable parameters: the
// draw depends only on (seed, c.id), never on scheduling. Draws distinct
// small primes, also distinct from the case's fixed parameter values, and
// retries until `validate` accepts (degenerate_error after 100 failures).
Bindings random_prime_bindings(const IdentityCase& c, unsigned long long seed);

// Copy of `c` whose right side is multiplied by (1 + q^exponent): running it
// must report a mismatch exactly at `exponent`. Used as a self-test that the
// comparison machinery cannot silently pass.
IdentityCase negative_control(const IdentityCase& c, long long exponent = 20);

}  // namespace qwp
