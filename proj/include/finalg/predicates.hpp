#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "finalg/module.hpp"
#include "finalg/ring.hpp"
#include "finalg/types.hpp"

namespace finalg {

enum class PredicateKind {
  prime,
  primary,
  w_primary,
  s_prime,
  w_s_prime,
  s_primary,
  w_s_primary,
};

constexpr PredicateKind all_kinds[] = {
    PredicateKind::prime,     PredicateKind::primary,
    PredicateKind::w_primary, PredicateKind::s_prime,
    PredicateKind::w_s_prime, PredicateKind::s_primary,
    PredicateKind::w_s_primary,
};

const char* kind_name(PredicateKind k);
std::optional<PredicateKind> kind_from_name(std::string_view name);
bool kind_uses_multset(PredicateKind k);
// Weak kinds trigger only on 0 != am in N.
bool kind_is_weak(PredicateKind k);
// Primary kinds conclude into sqrt((N:M)); prime kinds into (N:M).
bool kind_targets_radical(PredicateKind k);

struct DefeatEntry {
  Idx s;
  Idx a;
  Idx m;
};

struct PredicateVerdict {
  PredicateKind kind = PredicateKind::prime;
  bool holds = false;
  std::optional<Idx> witness;                         // least working s
  std::optional<std::pair<Idx, Idx>> counterexample;  // (a, m)
  std::vector<DefeatEntry> defeats;  // least defeating pair per defeated s
  bool disjointness_checked = false;
};

// Exhaustive decision of one predicate kind. S is required for S-kinds
// (MissingMultSet) and ignored otherwise. Errors: NotProper (non-S kinds
// with N = M), NotDisjoint ((N:M) meets S).
PredicateVerdict check(PredicateKind kind, const Submodule& n,
                       const MultClosedSet* s = nullptr);

// check() wrapped so precondition failures read as false.
bool predicate_holds(PredicateKind kind, const Submodule& n,
                     const MultClosedSet* s = nullptr);

// All s in S validating the weakly S-primary condition for N.
IndexSet weakly_s_elements(const Submodule& n, const MultClosedSet& s);

struct CharConditions {
  bool c2 = false, c3 = false, c4 = false, c5 = false;
  std::optional<Idx> w2, w3, w4, w5;  // least witnessing s per condition
  std::optional<bool> fm;             // present iff requested
  std::optional<Idx> wfm;
};

struct CharOptions {
  bool include_fm = false;
  const std::vector<IndexSet>* lattice = nullptr;  // c4/c5/fm
  const std::vector<IndexSet>* ideals = nullptr;   // c5
  const ModuleProperties* props = nullptr;         // fm
  std::size_t lattice_cap = 4096;
};

CharConditions char_conditions(const Submodule& n, const MultClosedSet& s,
                               const CharOptions& opts = {});

// True iff N is weakly S-primary and no strictly larger submodule is.
bool is_maximal_weakly_s_primary(const Submodule& n, const MultClosedSet& s,
                                 const std::vector<IndexSet>* lattice = nullptr);

}  // namespace finalg
