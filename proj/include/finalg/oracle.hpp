#pragma once

#include <optional>

#include "finalg/predicates.hpp"

namespace finalg {

// Independent slow path for cross-checking the predicate engine and for
// replaying reported counterexamples. Everything below recomputes residuals
// and radicals from the definitions on every call and never touches the
// engine's scan order or masks.

enum class OracleOutcome { holds, fails, not_proper, not_disjoint };

struct OracleResult {
  OracleOutcome outcome = OracleOutcome::fails;
  std::optional<Idx> witness;
};

OracleResult oracle_check(PredicateKind kind, const ModulePtr& m,
                          const IndexSet& n, const IndexSet* s);

// Does (a, x) defeat candidate s for the kind's condition?  Pass s only for
// S-kinds; non-S kinds take the bare condition.
bool oracle_pair_defeats(PredicateKind kind, const ModulePtr& m,
                         const IndexSet& n, std::optional<Idx> s, Idx a, Idx x);

}  // namespace finalg
