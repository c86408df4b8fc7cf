#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "finalg/module.hpp"

using namespace finalg;

namespace {

IndexSet mk(Idx carrier, std::vector<Idx> v) { return IndexSet(carrier, std::move(v)); }

bool naive_is_submodule(const ModulePtr& m, const std::set<Idx>& s) {
  if (!s.count(m->zero())) return false;
  for (Idx a : s)
    for (Idx b : s)
      if (!s.count(m->add(a, b))) return false;
  for (Idx a : s)
    for (Idx r = 0; r < m->ring()->order(); ++r)
      if (!s.count(m->act(r, a))) return false;
  return true;
}

std::set<std::set<Idx>> naive_all_submodules(const ModulePtr& m) {
  Idx n = m->order();
  REQUIRE(n <= 16);
  std::set<std::set<Idx>> out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    std::set<Idx> s;
    for (Idx i = 0; i < n; ++i)
      if (bits & (1u << i)) s.insert(i);
    if (naive_is_submodule(m, s)) out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("regular module mirrors the ring") {
  RingPtr z12 = make_zn(12);
  ModulePtr m = make_regular(z12);
  CHECK(m->order() == 12);
  CHECK(m->act(5, 7) == z12->mul(5, 7));
  CHECK(m->neg(5) == 7);
  CHECK(submodule_span(m, {4}) == mk(12, {0, 4, 8}));

  auto lat = enumerate_submodules(m);
  CHECK(lat.size() == 6);  // one per divisor of 12

  auto latB = naive_all_submodules(m);
  REQUIRE(lat.size() == latB.size());
  for (const IndexSet& s : lat)
    CHECK(latB.count(std::set<Idx>(s.members().begin(), s.members().end())) == 1);
}

TEST_CASE("reduction modules") {
  RingPtr z12 = make_zn(12);
  ModulePtr z6 = make_reduction(z12, 6);
  CHECK(z6->order() == 6);
  CHECK(z6->act(7, 5) == (7 * 5) % 6);
  CHECK_THROWS_AS(make_reduction(z12, 5), Error);

  auto lat = enumerate_submodules(z6);
  CHECK(lat.size() == 4);  // one per divisor of 6
  ModuleProperties props = module_properties(z6, lat);
  CHECK(!props.faithful);
  CHECK(props.multiplication);
  CHECK(props.zdivisors == mk(12, {0, 2, 3, 4, 6, 8, 9, 10}));
}

TEST_CASE("direct sum of reductions") {
  RingPtr z12 = make_zn(12);
  ModulePtr m = make_direct_sum(make_reduction(z12, 4), make_reduction(z12, 6));
  REQUIRE(m->order() == 24);
  // elements killed by 2: pairs from {0,2} x {0,3}
  IndexSet tors = residual_in_module(m, mk(24, {0}), mk(12, {2}));
  std::vector<Idx> expect;
  for (Idx a : {0, 2})
    for (Idx b : {0, 3}) expect.push_back(pair_index(Idx(a), Idx(b), 6));
  CHECK(tors == mk(24, expect));

  CHECK_THROWS_AS(make_direct_sum(make_regular(z12), make_regular(make_zn(6))), Error);
}

TEST_CASE("vector space lattice over Z2") {
  RingPtr z2 = make_zn(2);
  ModulePtr v = make_direct_sum(make_regular(z2), make_regular(z2));
  auto lat = enumerate_submodules(v);
  CHECK(lat.size() == 5);  // 0, three lines, plane
  auto latB = naive_all_submodules(v);
  CHECK(lat.size() == latB.size());
}

TEST_CASE("annihilator of a torsion product") {
  RingPtr z90 = make_zn(90);
  ModulePtr m = make_direct_sum(make_reduction(z90, 10), make_reduction(z90, 10));
  std::vector<Idx> mult10;
  for (Idx x = 0; x < 90; x += 10) mult10.push_back(x);
  CHECK(annihilator(m) == mk(90, mult10));
  auto props = module_properties(m, enumerate_submodules(m));
  CHECK(!props.faithful);
  CHECK(!props.multiplication);
}

TEST_CASE("residuals in ring and module") {
  RingPtr z12 = make_zn(12);
  ModulePtr m = make_regular(z12);
  IndexSet n6 = submodule_span(m, {6});
  CHECK(residual_in_ring(m, n6) == mk(12, {0, 6}));
  CHECK(residual_by_element(m, n6, 2) == mk(12, {0, 3, 6, 9}));
  CHECK(residual_in_ring(m, n6, mk(12, {0, 4, 8})) == mk(12, {0, 3, 6, 9}));
}

TEST_CASE("prime submodules and radicals in reg Z12") {
  RingPtr z12 = make_zn(12);
  ModulePtr m = make_regular(z12);
  IndexSet p2 = submodule_span(m, {2});
  IndexSet p3 = submodule_span(m, {3});
  IndexSet n4 = submodule_span(m, {4});
  CHECK(is_prime_submodule(m, p2));
  CHECK(is_prime_submodule(m, p3));
  CHECK(!is_prime_submodule(m, n4));
  CHECK(!is_prime_submodule(m, IndexSet::full(12)));

  auto lat = enumerate_submodules(m);
  auto props = module_properties(m, lat);
  CHECK(props.faithful);
  CHECK(props.multiplication);
  CHECK(m_radical(m, n4, RadicalMethod::definition, &lat) == p2);
  CHECK(m_radical(m, n4, RadicalMethod::mult_formula, nullptr, &props) == p2);
  CHECK(m_radical(m, n4, RadicalMethod::auto_pick, &lat, &props) == p2);
  // no prime contains the whole module, so the radical collapses to M
  CHECK(m_radical(m, IndexSet::full(12), RadicalMethod::definition, &lat).is_full());
}

TEST_CASE("submodule products on a multiplication module") {
  RingPtr z72 = make_zn(72);
  ModulePtr m = make_regular(z72);
  IndexSet n4 = submodule_span(m, {4});
  IndexSet n9 = submodule_span(m, {9});
  CHECK(submodule_product(m, n4, n9) == submodule_span(m, {36}));

  RingPtr z90 = make_zn(90);
  ModulePtr bad = make_direct_sum(make_reduction(z90, 10), make_reduction(z90, 10));
  IndexSet whole = IndexSet::full(bad->order());
  IndexSet line = submodule_span(bad, {pair_index(1, 0, 10)});
  CHECK_THROWS_AS(submodule_product(bad, line, whole), Error);
}

TEST_CASE("quotient modules") {
  RingPtr z12 = make_zn(12);
  ModulePtr m = make_regular(z12);
  Submodule n(m, submodule_span(m, {4}));
  QuotientModule q = make_quotient_module(m, n);
  REQUIRE(q.module->order() == 4);
  CHECK(q.module->zero() == q.class_of[0]);
  CHECK(q.class_of[4] == q.class_of[0]);
  CHECK(q.class_of[5] == q.class_of[1]);
  CHECK(q.projection.map(7) == q.class_of[7]);
  CHECK(q.projection.surjective());
  CHECK(q.projection.kernel() == n.elements);
  // quotient of reg Z12 by (4) behaves like Z4
  for (Idx x = 0; x < 12; ++x)
    for (Idx y = 0; y < 12; ++y)
      CHECK(q.class_of[m->add(x, y)] ==
            q.module->add(q.class_of[x], q.class_of[y]));
}

TEST_CASE("submodule as module with inclusion") {
  RingPtr z12 = make_zn(12);
  ModulePtr m = make_regular(z12);
  Submodule n(m, submodule_span(m, {2}));
  SubmoduleModule s = make_submodule_module(m, n);
  REQUIRE(s.module->order() == 6);
  CHECK(s.inclusion.injective());
  CHECK(!s.inclusion.surjective());
  for (Idx i = 0; i < 6; ++i)
    CHECK(s.to_sub[s.inclusion.map(i)] == i);
}

TEST_CASE("hom transport") {
  RingPtr z12 = make_zn(12);
  ModulePtr m = make_regular(z12);
  Submodule n(m, submodule_span(m, {6}));
  QuotientModule q = make_quotient_module(m, n);
  IndexSet zero_q = mk(q.module->order(), {q.module->zero()});
  CHECK(hom_transport(q.projection, zero_q, TransportDir::preimage) == n.elements);
  IndexSet img = hom_transport(q.projection, submodule_span(m, {2}), TransportDir::image);
  CHECK(img.size() == 3);
  CHECK_THROWS_AS(Submodule(m, mk(12, {0, 5})), Error);
}

TEST_CASE("module product over a product ring") {
  RingPtr z2 = make_zn(2), z3 = make_zn(3);
  RingPtr pr = make_ring_product(z2, z3);
  ModulePtr mp = make_module_product(make_regular(z2), make_regular(z3), pr);
  REQUIRE(mp->order() == 6);
  CHECK(mp->ring() == pr);
  // componentwise action
  Idx r = pair_index(1, 2, 3);
  Idx x = pair_index(1, 1, 3);
  CHECK(mp->act(r, x) == pair_index(1, 2, 3));
  auto lat = enumerate_submodules(mp);
  CHECK(lat.size() == 4);  // 0, Z2 x 0, 0 x Z3, whole
}
