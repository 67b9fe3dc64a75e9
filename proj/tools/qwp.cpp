// Command-line front end: lists the identity catalog and runs verifications.
//
// Exit codes for `run`: 0 all selected cases pass, 1 at least one mismatch,
// 2 usage error (unknown id, malformed --param, empty selection), 3 at least
// one degenerate case and no mismatch.

#include <algorithm>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwp/catalog.hpp"
#include "qwp/report.hpp"

namespace {

using qwp::Bindings;
using qwp::IdentityCase;

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ",";
    out += p;
  }
  return out;
}

int list_cases(const std::string& tag, bool as_json) {
  std::vector<const IdentityCase*> sel;
  for (const auto& c : qwp::catalog())
    if (tag.empty() ||
        std::find(c.tags.begin(), c.tags.end(), tag) != c.tags.end())
      sel.push_back(&c);
  if (as_json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto* c : sel) {
      nlohmann::ordered_json row;
      row["id"] = c->id;
      row["paper_eq"] = c->paper_eq;
      row["title"] = c->title;
      row["tags"] = c->tags;
      nlohmann::ordered_json defs = nlohmann::ordered_json::object();
      for (const auto& [name, value] : c->defaults) defs[name] = value.str();
      row["defaults"] = std::move(defs);
      row["randomizable"] = c->randomizable;
      row["default_order"] = c->default_order;
      row["constraints"] = c->constraints;
      arr.push_back(std::move(row));
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto* c : sel) {
      std::cout << c->id;
      for (size_t i = c->id.size(); i < 22; ++i) std::cout << ' ';
      std::string tags = "[" + join(c->tags) + "]";
      std::cout << tags;
      for (size_t i = tags.size(); i < 22; ++i) std::cout << ' ';
      std::cout << "order " << c->default_order << "  " << c->title << "\n";
    }
    std::cout << sel.size() << " case" << (sel.size() == 1 ? "" : "s")
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of q-series identities as truncated "
               "Laurent expansions"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the identity catalog");
  std::string list_tag;
  bool list_json = false;
  list->add_option("--tag", list_tag, "Only cases carrying this tag");
  list->add_flag("--json", list_json, "Emit JSON");

  auto* run = app.add_subcommand("run", "Verify selected identities");
  std::vector<std::string> ids;
  std::string run_tag;
  bool run_all = false, run_json = false;
  long long order = -1;
  unsigned long long seed = 0;
  std::vector<std::string> params;
  run->add_option("ids", ids, "Case ids to verify");
  run->add_flag("--all", run_all, "Verify every case in the catalog");
  run->add_option("--tag", run_tag, "Also verify all cases with this tag");
  run->add_option("--order", order,
                  "Truncation order (default: per-case setting)")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--param", params,
                  "Override a binding, e.g. --param a=3/2 or --param "
                  "z=2*q^3 (repeatable)");
  run->add_flag("--json", run_json, "Emit the JSON report");
  auto* seed_opt = run->add_option(
      "--seed", seed,
      "Draw per-case prime bindings from this seed; timings report as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (list->parsed()) return list_cases(list_tag, list_json);

  // Selection: explicit ids, plus a whole tag, plus everything with --all.
  std::vector<const IdentityCase*> sel;
  std::set<std::string> seen;
  auto add = [&](const IdentityCase* c) {
    if (seen.insert(c->id).second) sel.push_back(c);
  };
  if (run_all)
    for (const auto& c : qwp::catalog()) add(&c);
  if (!run_tag.empty()) {
    auto tagged = qwp::cases_with_tag(run_tag);
    if (tagged.empty()) {
      std::cerr << "error: no cases carry tag '" << run_tag << "'\n";
      return 2;
    }
    for (const auto* c : tagged) add(c);
  }
  for (const auto& id : ids) {
    const IdentityCase* c = qwp::find_case(id);
    if (!c) {
      std::cerr << "error: unknown case id '" << id << "'\n";
      return 2;
    }
    add(c);
  }
  if (sel.empty()) {
    std::cerr << "error: nothing selected; pass case ids, --tag, or --all\n";
    return 2;
  }
  std::sort(sel.begin(), sel.end(),
            [](const IdentityCase* x, const IdentityCase* y) {
              return x->id < y->id;
            });

  Bindings overrides;
  for (const auto& p : params) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == p.size()) {
      std::cerr << "error: malformed --param '" << p
                << "' (expected name=value)\n";
      return 2;
    }
    try {
      overrides[p.substr(0, eq)] = qwp::QMonomial::parse(p.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: malformed --param '" << p << "': " << e.what()
                << "\n";
      return 2;
    }
  }

  std::optional<long long> order_opt;
  if (order >= 0) order_opt = order;

  std::vector<qwp::CaseOutcome> outcomes;
  bool suppress_timing = seed_opt->count() > 0;
  if (suppress_timing)
    outcomes = qwp::run_seeded(sel, seed, overrides, order_opt);
  else
    outcomes = qwp::run_cases(sel, overrides, order_opt);

  if (run_json)
    std::cout << qwp::report_json(outcomes, suppress_timing);
  else
    std::cout << qwp::report_text(outcomes, suppress_timing);
  return qwp::exit_code(outcomes);
}
