#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "finalg/ring.hpp"

using namespace finalg;

namespace {

IndexSet mk(Idx carrier, std::vector<Idx> v) { return IndexSet(carrier, std::move(v)); }

// Brute-force ideal test on a subset, independent of the Ideal audit.
bool naive_is_ideal(const RingPtr& r, const std::set<Idx>& s) {
  if (!s.count(r->zero())) return false;
  for (Idx a : s)
    for (Idx b : s)
      if (!s.count(r->add(a, b))) return false;
  for (Idx a : s)
    for (Idx c = 0; c < r->order(); ++c)
      if (!s.count(r->mul(c, a))) return false;
  return true;
}

std::set<std::set<Idx>> naive_all_ideals(const RingPtr& r) {
  Idx n = r->order();
  std::set<std::set<Idx>> out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    std::set<Idx> s;
    for (Idx i = 0; i < n; ++i)
      if (bits & (1u << i)) s.insert(i);
    if (naive_is_ideal(r, s)) out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("index set basics") {
  IndexSet a = mk(6, {4, 2, 2, 0});
  CHECK(a.size() == 3);
  CHECK(a.members() == std::vector<Idx>{0, 2, 4});
  CHECK(a.contains(4));
  CHECK(!a.contains(1));
  IndexSet b = mk(6, {2, 3});
  CHECK(a.intersects(b));
  CHECK(a.intersect(b) == mk(6, {2}));
  CHECK(a.unite(b) == mk(6, {0, 2, 3, 4}));
  CHECK(mk(6, {1}).subset_of(IndexSet::full(6)));
  CHECK(!IndexSet::full(6).subset_of(mk(6, {1})));
  CHECK(mk(6, {5}) < mk(6, {1, 2}));
  CHECK(mk(6, {1, 2}) < mk(6, {1, 3}));
  CHECK_THROWS_AS(mk(4, {7}), Error);
}

TEST_CASE("zn arithmetic and units") {
  RingPtr z6 = make_zn(6);
  CHECK(z6->order() == 6);
  CHECK(z6->add(4, 5) == 3);
  CHECK(z6->mul(4, 5) == 2);
  CHECK(z6->neg(2) == 4);
  CHECK(z6->sub(1, 4) == 3);
  CHECK(z6->pow(5, 2) == 1);
  CHECK(z6->pow(2, 0) == 1);
  CHECK(units(z6) == mk(6, {1, 5}));
  CHECK(z6->is_unit(5));
  CHECK(!z6->is_unit(3));
}

TEST_CASE("table audit rejects non-rings") {
  // flip one entry of the Z2 multiplication table
  std::vector<Idx> add = {0, 1, 1, 0};
  std::vector<Idx> mul = {0, 0, 0, 0};
  CHECK_THROWS_AS(FiniteRing::from_tables("bad", 2, add, mul, 0, 1), Error);
  std::vector<Idx> mul2 = {0, 0, 0, 1};
  CHECK_NOTHROW(FiniteRing::from_tables("z2", 2, add, mul2, 0, 1));
  std::vector<Idx> add2 = {0, 1, 1, 1};
  CHECK_THROWS_AS(FiniteRing::from_tables("bad2", 2, add2, mul2, 0, 1), Error);
}

TEST_CASE("ideal spans in Z12") {
  RingPtr z12 = make_zn(12);
  CHECK(ideal_span(z12, {4}) == mk(12, {0, 4, 8}));
  CHECK(ideal_span(z12, {4, 6}) == mk(12, {0, 2, 4, 6, 8, 10}));
  CHECK(ideal_span(z12, {}) == mk(12, {0}));
  CHECK(principal_ideal(z12, 0).elements == mk(12, {0}));
  CHECK(unit_ideal(z12).elements.is_full());
  CHECK_THROWS_AS(Ideal(z12, mk(12, {0, 4})), Error);
}

TEST_CASE("ideal enumeration matches subset brute force") {
  for (Idx n : {Idx(8), Idx(12)}) {
    RingPtr r = make_zn(n);
    auto expected = naive_all_ideals(r);
    auto got = enumerate_ideals(r);
    REQUIRE(got.size() == expected.size());
    for (const IndexSet& i : got) {
      std::set<Idx> s(i.members().begin(), i.members().end());
      CHECK(expected.count(s) == 1);
    }
  }
  RingPtr z2z3 = make_ring_product(make_zn(2), make_zn(3));
  auto expected = naive_all_ideals(z2z3);
  CHECK(enumerate_ideals(z2z3).size() == expected.size());
}

TEST_CASE("radical and residual") {
  RingPtr z12 = make_zn(12);
  CHECK(radical_of_ideal(z12, mk(12, {0, 4, 8})) == mk(12, {0, 2, 4, 6, 8, 10}));
  CHECK(ideal_residual(z12, mk(12, {0, 6}), Idx(2)) == mk(12, {0, 3, 6, 9}));
  CHECK(ideal_residual(z12, mk(12, {0}), mk(12, {0, 6})) ==
        mk(12, {0, 2, 4, 6, 8, 10}));

  RingPtr z72 = make_zn(72);
  IndexSet i36 = ideal_span(z72, {36});
  std::vector<Idx> mult6;
  for (Idx x = 0; x < 72; x += 6) mult6.push_back(x);
  CHECK(radical_of_ideal(z72, i36) == mk(72, mult6));
  CHECK(ideal_product(z72, ideal_span(z72, {4}), ideal_span(z72, {9})) == i36);

  RingPtr z36 = make_zn(36);
  IndexSet i6 = ideal_span(z36, {6});
  CHECK(ideal_product(z36, i6, i6) == mk(36, {0}));
}

TEST_CASE("multiplicative sets") {
  RingPtr z36 = make_zn(36);
  MultClosedSet s = mult_set_closure(z36, {3});
  CHECK(s.elements == mk(36, {3, 9, 27}));
  std::vector<Idx> odds;
  for (Idx x = 1; x < 36; x += 2) odds.push_back(x);
  CHECK(saturate(s).elements == mk(36, odds));

  RingPtr z6 = make_zn(6);
  CHECK(saturate(MultClosedSet(z6, mk(6, {1}))).elements == mk(6, {1, 5}));
  CHECK_THROWS_AS(mult_set_closure(z6, {}), Error);
  CHECK_THROWS_AS(MultClosedSet(z6, mk(6, {2, 3})), Error);
}

TEST_CASE("zero divisors modulo an ideal") {
  RingPtr z12 = make_zn(12);
  CHECK(zdiv_mod_ideal(z12, mk(12, {0})) == mk(12, {0, 2, 3, 4, 6, 8, 9, 10}));
  CHECK(zdiv_mod_ideal(z12, mk(12, {0, 4, 8})) == mk(12, {0, 2, 4, 6, 8, 10}));
  CHECK_THROWS_AS(zdiv_mod_ideal(z12, IndexSet::full(12)), Error);
}

TEST_CASE("product ring agrees with the residue pairing") {
  RingPtr z2 = make_zn(2), z3 = make_zn(3);
  RingPtr p = make_ring_product(z2, z3);
  RingPtr z6 = make_zn(6);
  REQUIRE(p->order() == 6);
  // x mod 6 -> (x mod 2, x mod 3) is a ring isomorphism
  std::vector<Idx> iso(6);
  for (Idx x = 0; x < 6; ++x) iso[x] = pair_index(Idx(x % 2), Idx(x % 3), 3);
  std::set<Idx> image(iso.begin(), iso.end());
  REQUIRE(image.size() == 6);
  for (Idx x = 0; x < 6; ++x)
    for (Idx y = 0; y < 6; ++y) {
      CHECK(iso[z6->add(x, y)] == p->add(iso[x], iso[y]));
      CHECK(iso[z6->mul(x, y)] == p->mul(iso[x], iso[y]));
    }
  CHECK(p->zero() == iso[0]);
  CHECK(p->one() == iso[1]);
  CHECK(p->label(pair_index(1, 2, 3)) == "(1|2)");
}
