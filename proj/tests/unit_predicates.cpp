#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <utility>
#include <vector>

#include "finalg/module.hpp"
#include "finalg/oracle.hpp"
#include "finalg/predicates.hpp"

using namespace finalg;

namespace {

Submodule ideal_sub(const ModulePtr& m, std::vector<Idx> gens) {
  return Submodule(m, submodule_span(m, gens));
}

// Mirror of check() that folds precondition throws into an OracleOutcome.
OracleOutcome engine_outcome(PredicateKind k, const Submodule& n,
                             const MultClosedSet* s) {
  try {
    return check(k, n, s).holds ? OracleOutcome::holds : OracleOutcome::fails;
  } catch (const Error& e) {
    if (e.code() == Errc::not_proper) return OracleOutcome::not_proper;
    if (e.code() == Errc::not_disjoint) return OracleOutcome::not_disjoint;
    throw;
  }
}

}  // namespace

TEST_CASE("weakly S-primary on Z36 with S generated by 3") {
  RingPtr z36 = make_zn(36);
  ModulePtr m = make_regular(z36);
  Submodule n = ideal_sub(m, {6});
  MultClosedSet s = mult_set_closure(z36, {3});
  CHECK(s.elements == IndexSet(36, {3, 9, 27}));

  PredicateVerdict v = check(PredicateKind::w_s_primary, n, &s);
  CHECK(v.holds);
  CHECK(v.disjointness_checked);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == 3);
  CHECK(v.defeats.empty());
  CHECK(!v.counterexample.has_value());
}

TEST_CASE("weakly primary failure on Z12 reports the least violating pair") {
  RingPtr z12 = make_zn(12);
  ModulePtr m = make_regular(z12);
  Submodule n = ideal_sub(m, {6});

  PredicateVerdict v = check(PredicateKind::w_primary, n);
  CHECK(!v.holds);
  REQUIRE(v.counterexample.has_value());
  CHECK(*v.counterexample == std::pair<Idx, Idx>{2, 3});
  CHECK(!v.witness.has_value());
  CHECK(oracle_pair_defeats(PredicateKind::w_primary, m, n.elements,
                            std::nullopt, 2, 3));

  // Non-S kinds ignore a supplied mult-set entirely.
  MultClosedSet s = mult_set_closure(z12, {5});
  PredicateVerdict v2 = check(PredicateKind::w_primary, n, &s);
  CHECK(v2.holds == v.holds);
  CHECK(v2.counterexample == v.counterexample);
  CHECK(!v2.disjointness_checked);

  CHECK(!predicate_holds(PredicateKind::prime, n));
  CHECK(!predicate_holds(PredicateKind::primary, n));
}

TEST_CASE("witness skips defeated candidates on Z72") {
  RingPtr z72 = make_zn(72);
  ModulePtr m = make_regular(z72);
  Submodule n = ideal_sub(m, {36});
  MultClosedSet s = mult_set_closure(z72, {3});
  CHECK(s.elements == IndexSet(72, {3, 9, 27}));

  PredicateVerdict v = check(PredicateKind::w_s_primary, n, &s);
  CHECK(v.holds);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == 9);
  REQUIRE(v.defeats.size() == 1);
  CHECK(v.defeats[0].s == 3);
  CHECK(v.defeats[0].a == 9);
  CHECK(v.defeats[0].m == 4);
  CHECK(oracle_pair_defeats(PredicateKind::w_s_primary, m, n.elements, 3, 9, 4));

  // The same submodule is not weakly primary: the S-witness is essential.
  PredicateVerdict plain = check(PredicateKind::w_primary, n);
  CHECK(!plain.holds);
  REQUIRE(plain.counterexample.has_value());
  CHECK(*plain.counterexample == std::pair<Idx, Idx>{2, 18});

  CHECK(weakly_s_elements(n, s) == IndexSet(72, {9, 27}));
}

TEST_CASE("weakly S-element extremes") {
  RingPtr z12 = make_zn(12);
  ModulePtr m = make_regular(z12);

  // Unit mult-set on a non-instance: nothing qualifies.
  Submodule n6 = ideal_sub(m, {6});
  MultClosedSet one = mult_set_closure(z12, {1});
  CHECK(weakly_s_elements(n6, one).is_empty());
  PredicateVerdict v = check(PredicateKind::w_s_primary, n6, &one);
  CHECK(!v.holds);
  REQUIRE(v.counterexample.has_value());
  CHECK(*v.counterexample == std::pair<Idx, Idx>{2, 3});
  REQUIRE(v.defeats.size() == 1);
  CHECK(v.defeats[0].s == 1);

  // The zero submodule has no nonzero products landing in it, so every
  // disjoint candidate works.
  Submodule z = zero_submodule(m);
  MultClosedSet s2 = mult_set_closure(z12, {2});
  CHECK(weakly_s_elements(z, s2) == IndexSet(12, {2, 4, 8}));
  PredicateVerdict vz = check(PredicateKind::w_s_primary, z, &s2);
  CHECK(vz.holds);
  CHECK(*vz.witness == 2);
}

TEST_CASE("condition record for a holding instance") {
  RingPtr z36 = make_zn(36);
  ModulePtr m = make_regular(z36);
  Submodule n = ideal_sub(m, {6});
  MultClosedSet s = mult_set_closure(z36, {3});

  auto lat = enumerate_submodules(m);
  auto ideals = enumerate_ideals(z36);
  ModuleProperties props = module_properties(m, lat);
  CHECK(props.faithful);
  CHECK(props.multiplication);

  CharOptions opts;
  opts.include_fm = true;
  opts.lattice = &lat;
  opts.ideals = &ideals;
  opts.props = &props;
  CharConditions cc = char_conditions(n, s, opts);
  CHECK(cc.c2);
  CHECK(cc.c3);
  CHECK(cc.c4);
  CHECK(cc.c5);
  REQUIRE(cc.w2.has_value());
  CHECK(*cc.w2 == 3);
  CHECK(*cc.w3 == 3);
  CHECK(*cc.w4 == 3);
  CHECK(*cc.w5 == 3);
  REQUIRE(cc.fm.has_value());
  CHECK(*cc.fm);
  CHECK(*cc.wfm == 3);

  // Same record without the product condition; internal fallbacks cover the
  // lattice and ideal lists.
  CharConditions cc2 = char_conditions(n, s);
  CHECK(cc2.c2);
  CHECK(cc2.c5);
  CHECK(!cc2.fm.has_value());
}

TEST_CASE("product condition needs a faithful multiplication module") {
  RingPtr z12 = make_zn(12);
  ModulePtr z6 = make_reduction(z12, 6);
  Submodule z = zero_submodule(z6);
  MultClosedSet s = mult_set_closure(z12, {5});
  CharOptions opts;
  opts.include_fm = true;
  CHECK_THROWS_WITH_AS(char_conditions(z, s, opts),
                       doctest::Contains("FmHypothesisUnmet"), Error);
}

TEST_CASE("precondition errors") {
  RingPtr z12 = make_zn(12);
  ModulePtr m = make_regular(z12);
  Submodule whole = whole_submodule(m);
  Submodule n2 = ideal_sub(m, {2});
  MultClosedSet s2 = mult_set_closure(z12, {2});

  CHECK_THROWS_WITH_AS(check(PredicateKind::prime, whole),
                       doctest::Contains("NotProper"), Error);
  CHECK_THROWS_WITH_AS(check(PredicateKind::s_prime, n2, nullptr),
                       doctest::Contains("MissingMultSet"), Error);
  CHECK_THROWS_WITH_AS(check(PredicateKind::w_s_primary, n2, &s2),
                       doctest::Contains("NotDisjoint"), Error);

  MultClosedSet foreign = mult_set_closure(make_zn(6), {5});
  CHECK_THROWS_AS(check(PredicateKind::w_s_primary, n2, &foreign), Error);

  CHECK(!predicate_holds(PredicateKind::prime, whole));
  CHECK(!predicate_holds(PredicateKind::w_s_primary, n2, &s2));
}

TEST_CASE("prime versus primary separation on a direct sum") {
  RingPtr z8 = make_zn(8);
  ModulePtr m = make_direct_sum(make_regular(z8), make_regular(z8));
  REQUIRE(m->order() == 64);

  std::vector<Idx> gens = {pair_index(4, 0, 8), pair_index(0, 1, 8)};
  Submodule n(m, submodule_span(m, gens));
  CHECK(n.elements.size() == 16);
  CHECK(residual_in_ring(m, n.elements) == IndexSet(8, {0, 4}));

  MultClosedSet s = mult_set_closure(z8, {3});
  CHECK(s.elements == IndexSet(8, {1, 3}));

  CHECK(predicate_holds(PredicateKind::primary, n));
  PredicateVerdict sp = check(PredicateKind::s_primary, n, &s);
  CHECK(sp.holds);
  CHECK(*sp.witness == 1);
  CHECK(predicate_holds(PredicateKind::w_s_primary, n, &s));

  CHECK(!predicate_holds(PredicateKind::prime, n));
  PredicateVerdict wsp = check(PredicateKind::w_s_prime, n, &s);
  CHECK(!wsp.holds);
  REQUIRE(wsp.counterexample.has_value());
  CHECK(*wsp.counterexample ==
        std::pair<Idx, Idx>{2, static_cast<Idx>(pair_index(2, 0, 8))});
  CHECK(wsp.defeats.size() == 2);
  for (Idx cand : s.elements.members())
    CHECK(oracle_pair_defeats(PredicateKind::w_s_prime, m, n.elements, cand, 2,
                              pair_index(2, 0, 8)));
  CHECK(!predicate_holds(PredicateKind::s_prime, n, &s));
}

TEST_CASE("maximality among weakly S-primary submodules") {
  RingPtr z8 = make_zn(8);
  ModulePtr m = make_regular(z8);
  MultClosedSet one = mult_set_closure(z8, {1});
  auto lat = enumerate_submodules(m);

  CHECK(is_maximal_weakly_s_primary(ideal_sub(m, {2}), one, &lat));
  CHECK(!is_maximal_weakly_s_primary(ideal_sub(m, {4}), one, &lat));
  CHECK_THROWS_WITH_AS(is_maximal_weakly_s_primary(whole_submodule(m), one),
                       doctest::Contains("NotWeaklySPrimary"), Error);
}

TEST_CASE("engine agrees with the definitional oracle") {
  RingPtr z12 = make_zn(12);
  std::vector<ModulePtr> modules = {
      make_regular(z12),
      make_reduction(z12, 6),
      make_direct_sum(make_reduction(z12, 2), make_reduction(z12, 2)),
  };
  std::vector<std::vector<Idx>> seeds = {{1}, {2}, {3}, {5}, {6}, {11}};

  for (const ModulePtr& m : modules) {
    std::vector<MultClosedSet> multsets;
    for (const auto& g : seeds) multsets.push_back(mult_set_closure(z12, g));
    for (const IndexSet& elems : enumerate_submodules(m)) {
      Submodule n(m, elems);
      for (PredicateKind k : all_kinds) {
        if (kind_uses_multset(k)) {
          for (const MultClosedSet& s : multsets) {
            OracleResult o = oracle_check(k, m, elems, &s.elements);
            CHECK(engine_outcome(k, n, &s) == o.outcome);
            if (o.outcome == OracleOutcome::holds) {
              PredicateVerdict v = check(k, n, &s);
              REQUIRE(v.witness.has_value());
              CHECK(*v.witness == *o.witness);
            } else if (o.outcome == OracleOutcome::fails) {
              PredicateVerdict v = check(k, n, &s);
              REQUIRE(v.counterexample.has_value());
              // the reported pair must defeat every candidate in S
              for (Idx cand : s.elements.members())
                CHECK(oracle_pair_defeats(k, m, elems, cand,
                                          v.counterexample->first,
                                          v.counterexample->second));
            }
          }
        } else {
          OracleResult o = oracle_check(k, m, elems, nullptr);
          CHECK(engine_outcome(k, n, nullptr) == o.outcome);
          if (o.outcome == OracleOutcome::fails) {
            PredicateVerdict v = check(k, n);
            REQUIRE(v.counterexample.has_value());
            CHECK(oracle_pair_defeats(k, m, elems, std::nullopt,
                                      v.counterexample->first,
                                      v.counterexample->second));
          }
        }
      }
    }
  }
}
