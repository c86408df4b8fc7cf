#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "finalg/constructions.hpp"
#include "finalg/module.hpp"
#include "finalg/ring.hpp"

using namespace finalg;

TEST_CASE("trivial extension of Z4 by Z2") {
  RingPtr z4 = make_zn(4);
  ModulePtr z2 = make_reduction(z4, 2);
  Idealization t = idealize(z4, z2);
  REQUIRE(t.ring->order() == 8);
  CHECK(t.ring->zero() == t.pair(0, 0));
  CHECK(t.ring->one() == t.pair(1, 0));

  // embedded module part squares to zero
  for (Idx m = 0; m < 2; ++m)
    CHECK(t.ring->mul(t.pair(0, m), t.pair(0, m)) == t.ring->zero());
  CHECK(t.ring->mul(t.pair(1, 1), t.pair(1, 1)) == t.pair(1, 0));
  CHECK(t.ring->add(t.pair(1, 1), t.pair(3, 1)) == t.pair(0, 0));
  CHECK(t.first(t.pair(3, 1)) == 3);
  CHECK(t.second(t.pair(3, 1)) == 1);

  Ideal h = t.homog_ideal(IndexSet(4, {0, 2}), IndexSet(2, {0, 1}));
  CHECK(h.elements == IndexSet(8, {0, 1, 4, 5}));
  // radical of I x N agrees with sqrt(I) x M
  CHECK(radical_of_ideal(t.ring, h.elements) ==
        t.embed(radical_of_ideal(z4, IndexSet(4, {0, 2})), IndexSet(2, {0, 1})));
  Ideal zero = t.homog_ideal(IndexSet(4, {0}), IndexSet(2, {0}));
  CHECK(radical_of_ideal(t.ring, zero.elements) == IndexSet(8, {0, 1, 4, 5}));

  CHECK_THROWS_WITH_AS(t.homog_ideal(IndexSet(4, {0, 1, 2, 3}), IndexSet(2, {0})),
                       doctest::Contains("NotHomogeneous"), Error);

  MultClosedSet s = t.multset(IndexSet(4, {1, 3}), IndexSet(2, {0, 1}));
  CHECK(s.elements == IndexSet(8, {2, 3, 6, 7}));

  RingPtr z12 = make_zn(12);
  CHECK_THROWS_WITH_AS(idealize(z12, make_regular(z12)),
                       doctest::Contains("CapExceeded"), Error);
}

TEST_CASE("extension by the zero module reproduces the ring") {
  RingPtr z4 = make_zn(4);
  Idealization t = idealize(z4, make_zero_module(z4));
  REQUIRE(t.ring->order() == 4);
  for (Idx a = 0; a < 4; ++a)
    for (Idx b = 0; b < 4; ++b) {
      CHECK(t.ring->mul(a, b) == z4->mul(a, b));
      CHECK(t.ring->add(a, b) == z4->add(a, b));
    }
}

TEST_CASE("duplication of Z6 along the ideal (3)") {
  RingPtr z6 = make_zn(6);
  ModulePtr m = make_regular(z6);
  AmalgContext ctx = make_duplication(m, ideal_span(z6, {3}));
  REQUIRE(ctx.amalg_ring->order() == 12);
  REQUIRE(ctx.amalg_module->order() == 12);
  CHECK(ctx.is_duplication);
  CHECK(ctx.f_epi);
  CHECK(ctx.phi_epi);

  CHECK(ctx.ring_pairs[6] == std::pair<Idx, Idx>{3, 0});
  for (auto [r, x] : ctx.ring_pairs)
    CHECK(ctx.j_ideal.contains(z6->sub(x, r)));
  for (auto [a, x] : ctx.module_pairs)
    CHECK(ctx.jm2.contains(m->sub(x, a)));

  // (1,4) is idempotent: 4*4 = 4 mod 6
  Idx e = ctx.ring_elt(1, 4);
  CHECK(ctx.amalg_ring->mul(e, e) == e);
  CHECK(ctx.amalg_module->act(ctx.ring_elt(2, 5), ctx.module_elt(1, 4)) ==
        ctx.module_elt(2, 2));
  CHECK_THROWS_AS(ctx.ring_elt(3, 4), Error);  // 4 - 3 not in J

  CHECK(ctx.submodule_first(IndexSet(6, {0, 3})).elements.size() == 4);
  CHECK(ctx.submodule_second(IndexSet(6, {0, 2, 4})).elements.size() == 6);
  CHECK(ctx.multset_first(IndexSet(6, {1, 5})).elements.size() == 4);
  CHECK(ctx.multset_second(IndexSet(6, {1})).elements.size() == 2);

  AmalgContext flat = make_duplication(m, IndexSet(6, {0}));
  CHECK(flat.amalg_ring->order() == 6);
  CHECK(flat.amalg_module->order() == 6);

  CHECK_THROWS_WITH_AS(
      make_duplication(make_regular(make_zn(12)), IndexSet(12, IndexSet::full(12).members())),
      doctest::Contains("CapExceeded"), Error);
}

TEST_CASE("amalgamation along a reduction hom") {
  RingPtr z12 = make_zn(12);
  RingPtr z4 = make_zn(4);
  std::vector<Idx> f(12), phi(12);
  for (Idx r = 0; r < 12; ++r) f[r] = Idx(r % 4);
  for (Idx a = 0; a < 12; ++a) phi[a] = Idx(a % 4);

  AmalgContext ctx =
      make_amalgamation(z12, z4, f, IndexSet(4, {0, 2}), make_regular(z12),
                        make_regular(z4), phi);
  REQUIRE(ctx.amalg_ring->order() == 24);
  REQUIRE(ctx.amalg_module->order() == 24);
  CHECK(!ctx.is_duplication);
  CHECK(ctx.f_epi);
  CHECK(ctx.phi_epi);

  IndexSet n1(12, {0, 6});
  IndexSet n2(4, {0, 2});
  HaProbe probe = lemma_ha_probe(ctx, &n1, &n2);
  CHECK(probe.part1_fwd);
  CHECK(probe.part1_bwd);
  REQUIRE(probe.has_part2);
  CHECK(probe.part2_fwd);
  CHECK(probe.part2_bwd);
}

TEST_CASE("second-side features need an epimorphism") {
  RingPtr z2 = make_zn(2);
  RingPtr r2 = make_ring_product(z2, z2);
  std::vector<Idx> diag = {0, 3};  // r -> (r, r)
  AmalgContext ctx =
      make_amalgamation(z2, r2, diag, IndexSet(4, {0}), make_regular(z2),
                        make_regular(r2), diag);
  REQUIRE(ctx.amalg_ring->order() == 2);
  CHECK(!ctx.f_epi);

  IndexSet n1(2, {0});
  HaProbe probe = lemma_ha_probe(ctx, &n1, nullptr);
  CHECK(probe.part1_fwd);
  CHECK(!probe.has_part2);

  IndexSet n2(4, {0});
  CHECK_THROWS_WITH_AS(lemma_ha_probe(ctx, &n1, &n2),
                       doctest::Contains("EpimorphismRequired"), Error);

  // (1,0) is multiplicatively closed in the target but misses the carrier
  CHECK_THROWS_WITH_AS(ctx.multset_second(IndexSet(4, {2})),
                       doctest::Contains("EmptySet"), Error);
}
