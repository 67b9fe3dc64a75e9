#pragma once

// Rendering and batch-execution helpers shared by the command-line tool and
// the tests. Reports are deterministic: rows are emitted in selection order
// (the tool always selects in id order), JSON object keys keep insertion
// order, and timings can be suppressed so two runs of the same selection are
// byte-identical regardless of thread count.

#include <optional>
#include <string>
#include <vector>

#include "qwp/catalog.hpp"

namespace qwp {

// JSON array with one object per outcome:
//   {id, paper_eq, bindings, order, matched_order, status, mismatch, millis}
// Bindings and mismatch coefficients are rendered as strings; mismatch is
// null for non-mismatch outcomes. With suppress_timing, millis is 0.
std::string report_json(const std::vector<CaseOutcome>& outcomes,
                        bool suppress_timing);

// One line per outcome plus a final tally line.
std::string report_text(const std::vector<CaseOutcome>& outcomes,
                        bool suppress_timing);

// Runs every selected case on seeded per-case bindings (see
// random_prime_bindings), with explicit overrides taking precedence. The
// drawn bindings depend only on (case id, seed), never on thread count.
std::vector<CaseOutcome> run_seeded(
    const std::vector<const IdentityCase*>& sel, unsigned long long seed,
    const Bindings& overrides = {},
    std::optional<long long> order = std::nullopt, unsigned threads = 0);

// Worst outcome of a batch as a process exit code: 0 all pass, 1 any
// mismatch, 3 degenerate but no mismatch.
int exit_code(const std::vector<CaseOutcome>& outcomes);

}  // namespace qwp
