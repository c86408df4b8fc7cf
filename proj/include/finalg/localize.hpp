#pragma once

#include <utility>
#include <vector>

#include "finalg/module.hpp"
#include "finalg/ring.hpp"
#include "finalg/types.hpp"

namespace finalg {

// Fraction construction S^{-1}R: classes of R x S under
// (x,s) ~ (y,t) iff u(tx - sy) = 0 for some u in S.
struct LocalizedRing {
  RingPtr base;
  MultClosedSet mult_set;
  RingPtr ring;
  std::vector<Idx> class_of;       // pair key x*|S|+k -> class
  std::vector<Idx> canonical_map;  // x -> class of (x*s0, s0), s0 least in S
  std::vector<std::pair<Idx, Idx>> rep;  // class -> (numerator, denominator)

  Idx pair_class(Idx x, Idx s_member_pos) const {
    return class_of[std::size_t(x) * mult_set.elements.size() + s_member_pos];
  }
};

LocalizedRing localize_ring(const MultClosedSet& s);

struct LocalizedModule {
  ModulePtr base;
  MultClosedSet mult_set;
  LocalizedRing scalars;
  ModulePtr module;
  std::vector<Idx> class_of;
  std::vector<Idx> canonical_map;
  std::vector<std::pair<Idx, Idx>> rep;

  // S^{-1}N: classes containing some (n, s) with n in N.
  IndexSet localize_submodule(const IndexSet& n) const;
};

LocalizedModule localize_module(const ModulePtr& m, const MultClosedSet& s);
LocalizedModule localize_module(const ModulePtr& m, const LocalizedRing& scalars);

}  // namespace finalg
