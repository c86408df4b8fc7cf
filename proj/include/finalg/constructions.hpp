#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "finalg/module.hpp"
#include "finalg/ring.hpp"
#include "finalg/types.hpp"

namespace finalg {

// Trivial extension R x M with (r,m)(s,n) = (rs, rn+sm).
struct Idealization {
  RingPtr base_ring;
  ModulePtr base_module;
  RingPtr ring;

  Idx pair(Idx r, Idx m) const { return Idx(r * base_module->order() + m); }
  Idx first(Idx p) const { return Idx(p / base_module->order()); }
  Idx second(Idx p) const { return Idx(p % base_module->order()); }

  // {(a, x) : a in I, x in X} as a subset of the extension.
  IndexSet embed(const IndexSet& i, const IndexSet& x) const;
  // I x N, requiring IM within N.
  Ideal homog_ideal(const IndexSet& i, const IndexSet& n) const;
  // S x K for a multiplicatively closed S and submodule K.
  MultClosedSet multset(const IndexSet& s, const IndexSet& k) const;
};

Idealization idealize(const RingPtr& r, const ModulePtr& m, std::size_t cap = 96);

// R1 join^f J on pairs (r, f(r)+j), acting on M1 join^phi JM2.
struct AmalgContext {
  RingPtr ring1, ring2;
  std::vector<Idx> f;    // ring hom table R1 -> R2
  IndexSet j_ideal;      // ideal of ring2
  ModulePtr module1, module2;
  std::vector<Idx> phi;  // module hom table M1 -> M2, linear over f
  IndexSet jm2;          // J M2 inside M2

  RingPtr amalg_ring;
  ModulePtr amalg_module;
  std::vector<std::pair<Idx, Idx>> ring_pairs;    // element -> (r1, f(r1)+j)
  std::vector<std::pair<Idx, Idx>> module_pairs;  // element -> (m1, phi(m1)+m2)
  bool f_epi = false, phi_epi = false, is_duplication = false;

  Idx ring_elt(Idx r1, Idx x) const;    // reverse lookup
  Idx module_elt(Idx m1, Idx x) const;

  // {(m1, x) : m1 in N1} and {(m1, x) : x in N2}.
  Submodule submodule_first(const IndexSet& n1) const;
  Submodule submodule_second(const IndexSet& n2) const;
  // {(s, f(s)+j)} and {(r, f(r)+j) : f(r)+j in S2} (EmptySet when empty).
  MultClosedSet multset_first(const IndexSet& s1) const;
  MultClosedSet multset_second(const IndexSet& s2) const;

  std::vector<Idx> ring_lookup, module_lookup;  // pair key -> element or order()
};

AmalgContext make_amalgamation(RingPtr r1, RingPtr r2, std::vector<Idx> f,
                               IndexSet j, ModulePtr m1, ModulePtr m2,
                               std::vector<Idx> phi, std::size_t cap = 96);
AmalgContext make_duplication(const ModulePtr& m, const IndexSet& j,
                              std::size_t cap = 96);

struct HaProbe {
  bool part1_fwd = true, part1_bwd = true;
  std::optional<Idx> fail1_fwd, fail1_bwd;  // amalg ring element
  bool has_part2 = false;
  bool part2_fwd = true, part2_bwd = true;
  std::optional<Idx> fail2_fwd, fail2_bwd;
};

// Residual membership transfer: (r1, f(r1)+j) lies in (N1 join JM2 : amalg)
// iff r1 in (N1:M1); with f, phi epi the second family mirrors (N2:M2).
HaProbe lemma_ha_probe(const AmalgContext& ctx, const IndexSet* n1,
                       const IndexSet* n2);

}  // namespace finalg
