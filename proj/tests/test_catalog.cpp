#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "qwp/catalog.hpp"

using namespace qwp;

namespace {
QMonomial mono(long long num, long long den = 1, long long e = 0) {
  return QMonomial(Rational(num) / Rational(den), e);
}
}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("registry is sorted, unique, and well formed") {
  const auto& cs = catalog();
  CHECK(cs.size() >= 30);
  for (size_t i = 0; i < cs.size(); ++i) {
    CAPTURE(cs[i].id);
    CHECK(!cs[i].id.empty());
    CHECK(!cs[i].title.empty());
    CHECK(!cs[i].paper_eq.empty());
    CHECK(cs[i].default_order >= 20);
    CHECK(bool(cs[i].lhs));
    CHECK(bool(cs[i].rhs));
    if (i) CHECK(cs[i - 1].id < cs[i].id);
  }
}

TEST_CASE("lookup and tag filtering") {
  CHECK(find_case("thm1") != nullptr);
  CHECK(find_case("no-such-case") == nullptr);
  auto wp = cases_with_tag("wp");
  CHECK(!wp.empty());
  for (const auto* c : wp) {
    CHECK(std::find(c->tags.begin(), c->tags.end(), "wp") != c->tags.end());
  }
  std::set<std::string> all_tags;
  for (const auto& c : catalog())
    all_tags.insert(c.tags.begin(), c.tags.end());
  for (const auto& tag : all_tags) CHECK(!cases_with_tag(tag).empty());
  CHECK(cases_with_tag("no-such-tag").empty());
}

TEST_CASE("merged bindings override known names and drop unknown ones") {
  const IdentityCase* c = find_case("thm1");
  REQUIRE(c != nullptr);
  Bindings merged =
      merged_bindings(*c, {{"a", mono(7)}, {"bogus", mono(13)}});
  CHECK(merged.at("a") == mono(7));
  CHECK(merged.at("k") == c->defaults.at("k"));
  CHECK(merged.count("bogus") == 0);
}

TEST_CASE("every case passes at its default bindings and order") {
  std::vector<const IdentityCase*> all;
  for (const auto& c : catalog()) all.push_back(&c);
  auto outcomes = run_cases(all);
  REQUIRE(outcomes.size() == all.size());
  for (const auto& out : outcomes) {
    CAPTURE(out.id);
    CAPTURE(out.result.detail);
    CHECK(out.result.status == CheckResult::Status::pass);
    CHECK(out.result.matched_order >= out.order);
  }
}

TEST_CASE("randomized prime bindings keep the core transforms green") {
  for (const char* id : {"thm1", "thm2", "f-closed", "f-lambert"}) {
    const IdentityCase* c = find_case(id);
    REQUIRE(c != nullptr);
    for (unsigned long long seed = 1; seed <= 10; ++seed) {
      Bindings bs = random_prime_bindings(*c, seed);
      CaseOutcome out = run_case(*c, bs);
      CAPTURE(id);
      CAPTURE(seed);
      CAPTURE(out.result.detail);
      CHECK(out.result.status == CheckResult::Status::pass);
    }
  }
}

TEST_CASE("random bindings are reproducible per seed") {
  const IdentityCase* c = find_case("f-closed");
  REQUIRE(c != nullptr);
  CHECK(random_prime_bindings(*c, 42) == random_prime_bindings(*c, 42));
}

TEST_CASE("negative control mismatches exactly at the planted exponent") {
  const IdentityCase* c = find_case("aq-entry");
  REQUIRE(c != nullptr);
  IdentityCase control = negative_control(*c, 20);
  CHECK(control.id == "aq-entry-negative-control");
  CaseOutcome out = run_case(control, {}, 25);
  CHECK(out.result.status == CheckResult::Status::mismatch);
  REQUIRE(out.result.mismatch.has_value());
  CHECK(out.result.mismatch->exponent == 20);
  CHECK(out.result.matched_order == 19);
}

TEST_CASE("validators reject collapsing parameter collisions") {
  const IdentityCase* c = find_case("thm1");
  REQUIRE(c != nullptr);
  // z = 3 collides with the default k = 3, so k/z degenerates to 1.
  CaseOutcome out = run_case(*c, {{"z", mono(3)}});
  CHECK(out.result.status == CheckResult::Status::degenerate);
  CHECK(out.result.matched_order == -1);
  CHECK(!out.result.detail.empty());
}

TEST_CASE("validators reject zero parameters before any series work") {
  const IdentityCase* c = find_case("f-closed");
  REQUIRE(c != nullptr);
  CaseOutcome out = run_case(*c, {{"z", mono(0)}});
  CHECK(out.result.status == CheckResult::Status::degenerate);
}

TEST_CASE("two-sum inversion difference vanishes identically at a = k") {
  const IdentityCase* c = find_case("wpeq7a");
  REQUIRE(c != nullptr);
  CaseOutcome out = run_case(*c, {{"a", mono(3)}, {"k", mono(3)}});
  CAPTURE(out.result.detail);
  CHECK(out.result.status == CheckResult::Status::pass);
}

TEST_CASE("threaded and sequential runs agree") {
  std::vector<const IdentityCase*> sel;
  for (const char* id : {"f-antisym", "g-recip", "La-reps", "qbin"})
    sel.push_back(find_case(id));
  auto seq = run_cases(sel, {}, std::nullopt, 1);
  auto par = run_cases(sel, {}, std::nullopt, 4);
  REQUIRE(seq.size() == par.size());
  for (size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].id == par[i].id);
    CHECK(seq[i].result.status == par[i].result.status);
    CHECK(seq[i].result.matched_order == par[i].result.matched_order);
  }
}

}  // TEST_SUITE
