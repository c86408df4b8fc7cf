#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finalg/corpus.hpp"
#include "finalg/oracle.hpp"
#include "finalg/predicates.hpp"

using namespace finalg;

TEST_CASE("fingerprint tracks parameter changes") {
  CorpusParams a, b;
  CHECK(params_fingerprint(a) == params_fingerprint(b));
  b.max_ring_order = 12;
  CHECK(params_fingerprint(a) != params_fingerprint(b));
  b = a;
  b.ring_orders.pop_back();
  CHECK(params_fingerprint(a) != params_fingerprint(b));
}

TEST_CASE("ring and module recipes") {
  CorpusParams p;
  p.ring_orders = {4};
  p.fixture_ring_orders = {};
  Corpus c = build_corpus(p);

  // Fixture resolution pulls in the rings the candidates need.
  std::vector<Idx> orders;
  for (const auto& rd : c.rings) orders.push_back(rd.ring->order());
  CHECK(orders == std::vector<Idx>{4, 6, 8, 12, 30, 36, 72, 90});

  const RingData* z4 = c.ring_by_order(4);
  REQUIRE(z4);
  REQUIRE(!z4->modules.empty());
  CHECK(z4->modules.front().module->id() == "reg(Z4)");
  CHECK(z4->modules.front().lattice.size() == 3);
  // regular, Z2, Z2+Z2, Z2+Z4, Z4+Z4(16<=24), zero
  CHECK(z4->modules.size() == 6);
  for (const auto& md : z4->modules) {
    CHECK(md.lattice_ok);
    CHECK(md.lattice.front().size() == 1);
  }
  // mult sets: dedup'd closures of singletons and pairs, zero-containing kept
  bool has_zero_set = false;
  for (const auto& ms : z4->multsets) {
    CHECK(ms.set.elements.size() >= 1);
    if (ms.contains_zero) has_zero_set = true;
  }
  CHECK(has_zero_set);
}

TEST_CASE("max_ring_order filters rings and fixture candidates") {
  CorpusParams p;
  p.max_ring_order = 12;
  Corpus c = build_corpus(p);
  for (const auto& rd : c.rings) CHECK(rd.ring->order() <= 12);
  const FixtureRecord* e14 = c.fixture("e1-4");
  REQUIRE(e14);
  CHECK(e14->chosen == -1);
  CHECK(e14->rejected.size() == e14->candidates.size());
}

TEST_CASE("default corpus: fixtures freeze with oracle-confirmed separations") {
  Corpus c = build_corpus();

  const FixtureRecord* e14 = c.fixture("e1-4");
  REQUIRE(e14);
  CHECK(e14->chosen == 0);
  CHECK(!e14->substituted);
  CHECK(e14->module->ring()->order() == 36);
  CHECK(e14->s->elements.members() == std::vector<Idx>{3, 9, 27});

  const FixtureRecord* ice = c.fixture("int-ce");
  REQUIRE(ice);
  CHECK(ice->chosen == 0);
  IndexSet meet = ice->n.intersect(ice->k);
  CHECK(meet.size() == 2);  // (36) in Z72
  CHECK(predicate_holds(PredicateKind::w_s_primary, Submodule(ice->module, meet),
                        &*ice->s));
  CHECK(!predicate_holds(PredicateKind::w_primary, Submodule(ice->module, meet)));

  // The first two stand-ins fail to separate; the documented list ends at a
  // working modulus.
  const FixtureRecord* ex11 = c.fixture("ex11");
  REQUIRE(ex11);
  CHECK(ex11->chosen == 2);
  CHECK(ex11->substituted);
  CHECK(ex11->rejected.size() == 2);
  CHECK(ex11->module->ring()->order() == 30);
  CHECK(ex11->module->order() == 30);  // Z5 (+) Z6
  CHECK(c.ring_by_order(30) != nullptr);
  for (Idx s : ex11->s->elements.members()) {
    IndexSet col = residual_in_module(
        ex11->module, ex11->n, IndexSet::singleton(30, s));
    CHECK(oracle_check(PredicateKind::w_primary, ex11->module, col, nullptr)
              .outcome == OracleOutcome::fails);
  }

  const FixtureRecord* nm = c.fixture("nm-ce");
  REQUIRE(nm);
  CHECK(nm->chosen == 0);
  CHECK(nm->module->order() == 100);
  CHECK(nm->k.size() == 9);  // (10) in Z90

  const FixtureRecord* qce = c.fixture("quot-ce");
  REQUIRE(qce);
  CHECK(qce->chosen == 0);
  CHECK(qce->n == qce->k);

  const FixtureRecord* ex2 = c.fixture("ex2");
  REQUIRE(ex2);
  CHECK(ex2->chosen == 0);
  CHECK(ex2->module->ring()->order() == 6);
  CHECK(ex2->k.size() == 3);  // (2) in Z6

  const FixtureRecord* e13 = c.fixture("e1-3");
  REQUIRE(e13);
  CHECK(e13->chosen == 0);
  CHECK(e13->n.size() == 16);
}

TEST_CASE("default corpus: contexts and determinism") {
  Corpus c = build_corpus();
  CHECK(!c.idealizations.empty());
  CHECK(!c.amalgamations.empty());
  bool has_dup = false, has_mixed = false, has_nonepi = false;
  for (const auto& a : c.amalgamations) {
    if (a.is_duplication) has_dup = true;
    if (!a.is_duplication && a.f_epi) has_mixed = true;
    if (!a.f_epi) has_nonepi = true;
    CHECK(a.amalg_ring->order() <= 96);
    CHECK(a.amalg_module->order() <= 96);
  }
  CHECK(has_dup);
  CHECK(has_mixed);
  CHECK(has_nonepi);
  for (const auto& t : c.idealizations)
    CHECK(t.ring->order() <= 96);

  // The Z12 stand-in for the colon-family example stays in the corpus even
  // though the frozen fixture lives over Z30.
  const RingData* z12 = c.ring_by_order(12);
  REQUIRE(z12);
  bool has_sum46 = false;
  for (const auto& md : z12->modules)
    if (md.module->id() == "Z4(Z12)+Z6(Z12)") has_sum46 = true;
  CHECK(has_sum46);

  Corpus c2 = build_corpus();
  REQUIRE(c2.rings.size() == c.rings.size());
  for (std::size_t i = 0; i < c.rings.size(); ++i) {
    CHECK(c2.rings[i].ring->order() == c.rings[i].ring->order());
    CHECK(c2.rings[i].multsets.size() == c.rings[i].multsets.size());
    CHECK(c2.rings[i].modules.size() == c.rings[i].modules.size());
  }
  REQUIRE(c2.fixtures.size() == c.fixtures.size());
  for (std::size_t i = 0; i < c.fixtures.size(); ++i) {
    CHECK(c2.fixtures[i].chosen == c.fixtures[i].chosen);
    CHECK(c2.fixtures[i].n == c.fixtures[i].n);
  }
}
