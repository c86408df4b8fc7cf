#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "finalg/claims.hpp"

using namespace finalg;

namespace {

std::vector<std::string> all_ids() {
  std::vector<std::string> ids;
  for (const auto& ci : claim_registry()) ids.push_back(ci.id);
  return ids;
}

// One shared capped corpus; building it per test case would dominate runtime.
const Corpus& small_corpus() {
  static const Corpus c = [] {
    CorpusParams p;
    p.max_ring_order = 8;
    return build_corpus(p);
  }();
  return c;
}

}  // namespace

TEST_CASE("registry is complete and well formed") {
  const auto& reg = claim_registry();
  CHECK(reg.size() == 47);
  std::set<std::string> ids;
  for (const auto& ci : reg) {
    CHECK(ids.insert(ci.id).second);
    CHECK(!ci.description.empty());
    CHECK(claim_known(ci.id));
  }
  CHECK(claim_known("HIER"));
  CHECK(claim_known("DUP2"));
  CHECK(!claim_known("NOPE"));
  CHECK(!claim_known("hier"));
}

TEST_CASE("unknown claim ids are rejected") {
  CorpusParams p;
  p.max_ring_order = 4;
  Corpus c = build_corpus(p);
  CHECK_THROWS_AS(verify_claims(c, {"HIER", "NOPE"}), Error);
  try {
    verify_claims(c, {"NOPE"});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_claim);
  }
}

TEST_CASE("reports come back in registry order") {
  CorpusParams p;
  p.max_ring_order = 4;
  Corpus c = build_corpus(p);
  auto reps = verify_claims(c, {"E1-2", "HIER", "SAT"});
  REQUIRE(reps.size() == 3);
  CHECK(reps[0].claim_id == "HIER");
  CHECK(reps[1].claim_id == "SAT");
  CHECK(reps[2].claim_id == "E1-2");
}

TEST_CASE("every claim holds on the capped corpus") {
  auto reps = verify_claims(small_corpus(), all_ids());
  REQUIRE(reps.size() == 47);
  // Frozen instances that need larger rings fall out of a capped corpus, as
  // does the two-prime family (Z6 contributes no proper exponent pairs).
  std::set<std::string> expect_vacuous = {"NM-CE", "EX11", "QUOT-CE",
                                          "INT-CE-Z72", "E1-4"};
  for (const auto& r : reps) {
    INFO(r.claim_id);
    CHECK(r.holds);
    CHECK(r.counterexamples.empty());
    CHECK(r.vacuous == (expect_vacuous.count(r.claim_id) > 0));
    CHECK(r.vacuous == (r.instances_checked == 0));
  }
  auto find = [&](const std::string& id) {
    return std::find_if(reps.begin(), reps.end(),
                        [&](const ClaimReport& r) { return r.claim_id == id; });
  };
  CHECK(find("CART")->instances_checked > 1000);
  CHECK(find("CART3")->instances_checked >= 100);
  CHECK(find("CHAR-EQ")->instances_skipped > 0);
  CHECK(find("EX2")->instances_checked == 1);
}

TEST_CASE("verdicts are deterministic across runs") {
  std::vector<std::string> ids = {"HIER", "NM-1",  "SAT",  "AMALG-2",
                                  "DUP2", "IDEAL", "E1-2", "LOC-1"};
  auto a = verify_claims(small_corpus(), ids);
  auto b = verify_claims(small_corpus(), ids);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].claim_id == b[i].claim_id);
    CHECK(a[i].instances_checked == b[i].instances_checked);
    CHECK(a[i].instances_skipped == b[i].instances_skipped);
    CHECK(a[i].holds == b[i].holds);
    CHECK(a[i].vacuous == b[i].vacuous);
    REQUIRE(a[i].counterexamples.size() == b[i].counterexamples.size());
    for (std::size_t j = 0; j < a[i].counterexamples.size(); ++j) {
      CHECK(a[i].counterexamples[j].instance == b[i].counterexamples[j].instance);
      CHECK(a[i].counterexamples[j].detail == b[i].counterexamples[j].detail);
    }
  }
}
