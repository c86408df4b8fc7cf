#include "finalg/oracle.hpp"

#include <algorithm>

namespace finalg {

namespace {

bool member(const IndexSet& set, Idx v) {
  const auto& m = set.members();
  return std::find(m.begin(), m.end(), v) != m.end();
}

std::vector<bool> colon_flags(const ModulePtr& m, const IndexSet& n) {
  std::vector<bool> out(m->ring()->order(), false);
  for (Idx r = 0; r < m->ring()->order(); ++r) {
    bool all = true;
    for (Idx x = 0; x < m->order(); ++x)
      if (!member(n, m->act(r, x))) { all = false; break; }
    out[r] = all;
  }
  return out;
}

std::vector<bool> radical_flags(const RingPtr& r, const std::vector<bool>& ideal) {
  std::vector<bool> out(r->order(), false);
  for (Idx a = 0; a < r->order(); ++a) {
    Idx p = a;
    for (Idx e = 1; e <= r->order(); ++e) {
      if (ideal[p]) { out[a] = true; break; }
      p = r->mul(p, a);
    }
  }
  return out;
}

}  // namespace

OracleResult oracle_check(PredicateKind kind, const ModulePtr& m,
                          const IndexSet& n, const IndexSet* s) {
  const RingPtr& r = m->ring();
  std::vector<bool> colon = colon_flags(m, n);
  std::vector<bool> target =
      kind_targets_radical(kind) ? radical_flags(r, colon) : colon;
  bool weak = kind_is_weak(kind);

  if (!kind_uses_multset(kind)) {
    if (n.size() == m->order()) return {OracleOutcome::not_proper, {}};
    for (Idx a = 0; a < r->order(); ++a)
      for (Idx x = 0; x < m->order(); ++x) {
        Idx prod = m->act(a, x);
        if (!member(n, prod)) continue;
        if (weak && prod == m->zero()) continue;
        if (!member(n, x) && !target[a]) return {OracleOutcome::fails, {}};
      }
    return {OracleOutcome::holds, {}};
  }

  for (Idx cand : s->members())
    if (colon[cand]) return {OracleOutcome::not_disjoint, {}};

  for (Idx cand : s->members()) {
    bool good = true;
    for (Idx a = 0; a < r->order() && good; ++a)
      for (Idx x = 0; x < m->order(); ++x) {
        Idx prod = m->act(a, x);
        if (!member(n, prod)) continue;
        if (weak && prod == m->zero()) continue;
        if (!target[r->mul(cand, a)] && !member(n, m->act(cand, x))) {
          good = false;
          break;
        }
      }
    if (good) return {OracleOutcome::holds, cand};
  }
  return {OracleOutcome::fails, {}};
}

bool oracle_pair_defeats(PredicateKind kind, const ModulePtr& m,
                         const IndexSet& n, std::optional<Idx> s, Idx a, Idx x) {
  const RingPtr& r = m->ring();
  Idx prod = m->act(a, x);
  if (!member(n, prod)) return false;
  if (kind_is_weak(kind) && prod == m->zero()) return false;
  std::vector<bool> colon = colon_flags(m, n);
  std::vector<bool> target =
      kind_targets_radical(kind) ? radical_flags(r, colon) : colon;
  if (kind_uses_multset(kind)) {
    if (!s) fail(Errc::missing_mult_set, "pair replay needs s");
    return !target[r->mul(*s, a)] && !member(n, m->act(*s, x));
  }
  return !target[a] && !member(n, x);
}

}  // namespace finalg
