#include "finalg/predicates.hpp"

#include <algorithm>

namespace finalg {

const char* kind_name(PredicateKind k) {
  switch (k) {
    case PredicateKind::prime: return "prime";
    case PredicateKind::primary: return "primary";
    case PredicateKind::w_primary: return "weakly-primary";
    case PredicateKind::s_prime: return "s-prime";
    case PredicateKind::w_s_prime: return "weakly-s-prime";
    case PredicateKind::s_primary: return "s-primary";
    case PredicateKind::w_s_primary: return "weakly-s-primary";
  }
  return "?";
}

std::optional<PredicateKind> kind_from_name(std::string_view name) {
  for (PredicateKind k : all_kinds)
    if (name == kind_name(k)) return k;
  return std::nullopt;
}

bool kind_uses_multset(PredicateKind k) {
  switch (k) {
    case PredicateKind::s_prime:
    case PredicateKind::w_s_prime:
    case PredicateKind::s_primary:
    case PredicateKind::w_s_primary: return true;
    default: return false;
  }
}

bool kind_is_weak(PredicateKind k) {
  switch (k) {
    case PredicateKind::w_primary:
    case PredicateKind::w_s_prime:
    case PredicateKind::w_s_primary: return true;
    default: return false;
  }
}

bool kind_targets_radical(PredicateKind k) {
  switch (k) {
    case PredicateKind::primary:
    case PredicateKind::w_primary:
    case PredicateKind::s_primary:
    case PredicateKind::w_s_primary: return true;
    default: return false;
  }
}

namespace {

// Least (a,m) defeating candidate s, or nullopt when s handles every pair.
std::optional<std::pair<Idx, Idx>> least_defeat(
    const ModulePtr& m, const IndexSet& n, const IndexSet& target, bool weak,
    Idx s) {
  const RingPtr& r = m->ring();
  Idx mn = m->order(), rn = r->order();
  std::vector<std::uint8_t> sm_in_n(mn);
  for (Idx x = 0; x < mn; ++x) sm_in_n[x] = n.contains(m->act(s, x));
  for (Idx a = 0; a < rn; ++a) {
    if (target.contains(r->mul(s, a))) continue;
    for (Idx x = 0; x < mn; ++x) {
      Idx prod = m->act(a, x);
      if (!n.contains(prod)) continue;
      if (weak && prod == m->zero()) continue;
      if (!sm_in_n[x]) return std::make_pair(a, x);
    }
  }
  return std::nullopt;
}

}  // namespace

PredicateVerdict check(PredicateKind kind, const Submodule& n,
                       const MultClosedSet* s) {
  const ModulePtr& m = n.module;
  const RingPtr& r = m->ring();
  PredicateVerdict v;
  v.kind = kind;

  IndexSet colon = residual_in_ring(m, n.elements);
  IndexSet target =
      kind_targets_radical(kind) ? radical_of_ideal(r, colon) : colon;
  bool weak = kind_is_weak(kind);

  if (!kind_uses_multset(kind)) {
    if (n.elements.is_full())
      fail(Errc::not_proper, kind_name(kind) + std::string(" needs N != M"));
    for (Idx a = 0; a < r->order(); ++a) {
      if (target.contains(a)) continue;
      for (Idx x = 0; x < m->order(); ++x) {
        Idx prod = m->act(a, x);
        if (!n.contains(prod)) continue;
        if (weak && prod == m->zero()) continue;
        if (!n.contains(x)) {
          v.counterexample = std::make_pair(a, x);
          return v;
        }
      }
    }
    v.holds = true;
    return v;
  }

  if (!s)
    fail(Errc::missing_mult_set,
         kind_name(kind) + std::string(" needs a multiplicative set"));
  if (s->ring != r) fail(Errc::invalid_spec, "multiplicative set over another ring");
  v.disjointness_checked = true;
  if (colon.intersects(s->elements))
    fail(Errc::not_disjoint, "(N:M) meets the multiplicative set");

  const auto& sm = s->elements.members();
  for (Idx cand : sm) {
    auto defeat = least_defeat(m, n.elements, target, weak, cand);
    if (!defeat) {
      v.holds = true;
      v.witness = cand;
      return v;
    }
    v.defeats.push_back(DefeatEntry{cand, defeat->first, defeat->second});
  }

  // Failed for every s: report the lexicographically least pair among those
  // defeating the most candidates.
  std::size_t best = 0;
  for (Idx a = 0; a < r->order() && best < sm.size(); ++a)
    for (Idx x = 0; x < m->order(); ++x) {
      Idx prod = m->act(a, x);
      if (!n.contains(prod)) continue;
      if (weak && prod == m->zero()) continue;
      std::size_t cnt = 0;
      for (Idx cand : sm)
        if (!target.contains(r->mul(cand, a)) &&
            !n.contains(m->act(cand, x)))
          ++cnt;
      if (cnt > best) {
        best = cnt;
        v.counterexample = std::make_pair(a, x);
        if (best == sm.size()) break;
      }
    }
  return v;
}

bool predicate_holds(PredicateKind kind, const Submodule& n,
                     const MultClosedSet* s) {
  try {
    return check(kind, n, s).holds;
  } catch (const Error& e) {
    if (e.code() == Errc::not_proper || e.code() == Errc::not_disjoint)
      return false;
    throw;
  }
}

IndexSet weakly_s_elements(const Submodule& n, const MultClosedSet& s) {
  const ModulePtr& m = n.module;
  const RingPtr& r = m->ring();
  IndexSet colon = residual_in_ring(m, n.elements);
  if (colon.intersects(s.elements))
    fail(Errc::not_disjoint, "(N:M) meets the multiplicative set");
  IndexSet target = radical_of_ideal(r, colon);
  std::vector<Idx> good;
  for (Idx cand : s.elements.members())
    if (!least_defeat(m, n.elements, target, true, cand)) good.push_back(cand);
  return IndexSet(r->order(), std::move(good));
}

CharConditions char_conditions(const Submodule& n, const MultClosedSet& s,
                               const CharOptions& opts) {
  const ModulePtr& m = n.module;
  const RingPtr& r = m->ring();
  IndexSet colon = residual_in_ring(m, n.elements);
  if (colon.intersects(s.elements))
    fail(Errc::not_disjoint, "(N:M) meets the multiplicative set");
  IndexSet rad = radical_of_ideal(r, colon);
  Idx rn = r->order(), mn = m->order();
  const auto& sm = s.elements.members();
  CharConditions out;

  // c2: for a with sa outside the radical, (N:_M a) within (0:_M a) u (N:_M s)
  for (Idx cand : sm) {
    bool ok = true;
    for (Idx a = 0; a < rn && ok; ++a) {
      if (rad.contains(r->mul(cand, a))) continue;
      for (Idx x = 0; x < mn; ++x) {
        Idx prod = m->act(a, x);
        if (!n.contains(prod)) continue;
        if (prod == m->zero()) continue;
        if (!n.contains(m->act(cand, x))) { ok = false; break; }
      }
    }
    if (ok) { out.c2 = true; out.w2 = cand; break; }
  }

  // c3: same range of a, but (N:_M a) = (0:_M a) or (N:_M a) within (N:_M s)
  for (Idx cand : sm) {
    bool ok = true;
    for (Idx a = 0; a < rn && ok; ++a) {
      if (rad.contains(r->mul(cand, a))) continue;
      bool torsion_only = true, inside = true;
      for (Idx x = 0; x < mn; ++x) {
        Idx prod = m->act(a, x);
        if (!n.contains(prod)) continue;
        if (prod != m->zero()) torsion_only = false;
        if (!n.contains(m->act(cand, x))) inside = false;
      }
      if (!torsion_only && !inside) ok = false;
    }
    if (ok) { out.c3 = true; out.w3 = cand; break; }
  }

  std::vector<IndexSet> local_lattice;
  const std::vector<IndexSet>* lattice = opts.lattice;
  if (!lattice) {
    local_lattice = enumerate_submodules(m, opts.lattice_cap);
    lattice = &local_lattice;
  }

  // c4 triggers: (a, K) with 0 != aK within N
  {
    std::vector<std::pair<Idx, std::size_t>> triggers;
    for (Idx a = 0; a < rn; ++a)
      for (std::size_t ki = 0; ki < lattice->size(); ++ki) {
        const IndexSet& k = (*lattice)[ki];
        bool inside = true, nonzero = false;
        for (Idx x : k.members()) {
          Idx prod = m->act(a, x);
          if (!n.contains(prod)) { inside = false; break; }
          if (prod != m->zero()) nonzero = true;
        }
        if (inside && nonzero) triggers.push_back({a, ki});
      }
    for (Idx cand : sm) {
      bool ok = true;
      for (auto [a, ki] : triggers) {
        if (rad.contains(r->mul(cand, a))) continue;
        bool sk_in = true;
        for (Idx x : (*lattice)[ki].members())
          if (!n.contains(m->act(cand, x))) { sk_in = false; break; }
        if (!sk_in) { ok = false; break; }
      }
      if (ok) { out.c4 = true; out.w4 = cand; break; }
    }
  }

  // c5 triggers: (I, K) with 0 != IK within N
  {
    std::vector<IndexSet> local_ideals;
    const std::vector<IndexSet>* ideals = opts.ideals;
    if (!ideals) {
      local_ideals = enumerate_ideals(r);
      ideals = &local_ideals;
    }
    std::vector<std::pair<std::size_t, std::size_t>> triggers;
    for (std::size_t ii = 0; ii < ideals->size(); ++ii)
      for (std::size_t ki = 0; ki < lattice->size(); ++ki) {
        bool inside = true, nonzero = false;
        for (Idx a : (*ideals)[ii].members()) {
          for (Idx x : (*lattice)[ki].members()) {
            Idx prod = m->act(a, x);
            if (!n.contains(prod)) { inside = false; break; }
            if (prod != m->zero()) nonzero = true;
          }
          if (!inside) break;
        }
        // products span IK; generators inside N suffice since N is closed
        if (inside && nonzero) triggers.push_back({ii, ki});
      }
    for (Idx cand : sm) {
      bool ok = true;
      for (auto [ii, ki] : triggers) {
        bool si_in = true;
        for (Idx a : (*ideals)[ii].members())
          if (!rad.contains(r->mul(cand, a))) { si_in = false; break; }
        if (si_in) continue;
        bool sk_in = true;
        for (Idx x : (*lattice)[ki].members())
          if (!n.contains(m->act(cand, x))) { sk_in = false; break; }
        if (!sk_in) { ok = false; break; }
      }
      if (ok) { out.c5 = true; out.w5 = cand; break; }
    }
  }

  if (opts.include_fm) {
    ModuleProperties local_props;
    const ModuleProperties* props = opts.props;
    if (!props) {
      local_props = module_properties(m, *lattice);
      props = &local_props;
    }
    if (!props->faithful || !props->multiplication)
      fail(Errc::fm_hypothesis_unmet,
           m->id() + ": needs a faithful multiplication module");
    IndexSet mrad = m_radical(m, n.elements, RadicalMethod::mult_formula,
                              lattice, props);
    std::vector<IndexSet> colons;
    colons.reserve(lattice->size());
    for (const IndexSet& k : *lattice)
      colons.push_back(residual_in_ring(m, k));
    std::vector<std::pair<std::size_t, std::size_t>> triggers;
    for (std::size_t ki = 0; ki < lattice->size(); ++ki)
      for (std::size_t li = 0; li < lattice->size(); ++li) {
        IndexSet kl = ideal_action(m, ideal_product(r, colons[ki], colons[li]));
        if (kl.size() > 1 && kl.subset_of(n.elements))
          triggers.push_back({ki, li});
      }
    bool found = false;
    for (Idx cand : sm) {
      bool ok = true;
      for (auto [ki, li] : triggers) {
        bool sk_in = true;
        for (Idx x : (*lattice)[ki].members())
          if (!mrad.contains(m->act(cand, x))) { sk_in = false; break; }
        if (sk_in) continue;
        bool sl_in = true;
        for (Idx x : (*lattice)[li].members())
          if (!n.contains(m->act(cand, x))) { sl_in = false; break; }
        if (!sl_in) { ok = false; break; }
      }
      if (ok) { out.fm = true; out.wfm = cand; found = true; break; }
    }
    if (!found) out.fm = false;
  }

  return out;
}

bool is_maximal_weakly_s_primary(const Submodule& n, const MultClosedSet& s,
                                 const std::vector<IndexSet>* lattice) {
  if (!predicate_holds(PredicateKind::w_s_primary, n, &s))
    fail(Errc::not_weakly_s_primary, "maximality asked of a non-instance");
  std::vector<IndexSet> local;
  if (!lattice) {
    local = enumerate_submodules(n.module);
    lattice = &local;
  }
  for (const IndexSet& p : *lattice) {
    if (p == n.elements || !n.elements.subset_of(p)) continue;
    if (predicate_holds(PredicateKind::w_s_primary, Submodule(n.module, p), &s))
      return false;
  }
  return true;
}

}  // namespace finalg
