#include "finalg/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <sstream>

#include "finalg/oracle.hpp"

namespace finalg {

namespace {

void fnv_feed(std::uint64_t& h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
}

std::string join(const std::vector<Idx>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

std::string params_fingerprint(const CorpusParams& p) {
  std::uint64_t h = 1469598103934665603ULL;
  std::ostringstream os;
  os << "rings=" << join(p.ring_orders) << ";fixtures=" << join(p.fixture_ring_orders)
     << ";max=" << p.max_ring_order << ";sumring=" << p.sum_ring_max
     << ";sumcap=" << p.sum_order_cap << ";pairmax=" << p.pair_multset_max_ring
     << ";char=" << p.char_ring_cap << ";prod=" << p.product_factor_cap
     << ";triple=" << p.triple_factor_cap << ";triples=" << p.triple_target
     << ";cons=" << p.construction_cap << ";lattice=" << p.lattice_cap
     << ";ces=" << p.counterexample_cap;
  fnv_feed(h, os.str());
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

namespace {

ModuleData make_module_data(const ModulePtr& m, const CorpusParams& p) {
  ModuleData md;
  md.module = m;
  try {
    md.lattice = enumerate_submodules(m, p.lattice_cap);
  } catch (const Error& e) {
    if (e.code() != Errc::lattice_too_large) throw;
    md.lattice_ok = false;
    return md;
  }
  md.props = module_properties(m, md.lattice);
  return md;
}

std::vector<MultSetData> make_multsets(const RingPtr& r, const CorpusParams& p) {
  std::vector<IndexSet> sets;
  auto add = [&](std::vector<Idx> gens) {
    MultClosedSet s = mult_set_closure(r, std::move(gens));
    if (std::find(sets.begin(), sets.end(), s.elements) == sets.end())
      sets.push_back(s.elements);
  };
  Idx n = r->order();
  if (n <= p.pair_multset_max_ring) {
    for (Idx x = 0; x < n; ++x) add({x});
    for (Idx x = 0; x < n; ++x)
      for (Idx y = Idx(x + 1); y < n; ++y) add({x, y});
  } else {
    // Large rings keep a fixed, documented generator list instead of the
    // full singleton/pair sweep.
    for (Idx g : {Idx(1), Idx(0), Idx(2), Idx(3), Idx(5), Idx(7), Idx(6),
                  Idx(10), Idx(15), Idx(n - 1)})
      if (g < n) add({g});
  }
  std::sort(sets.begin(), sets.end());
  std::vector<MultSetData> out;
  out.reserve(sets.size());
  for (auto& e : sets)
    out.push_back({MultClosedSet(r, e), e.contains(r->zero())});
  return out;
}

std::string component_id(const RingPtr& r, Idx d) {
  if (d == r->order()) return "reg(" + r->id() + ")";
  return "Z" + std::to_string(d) + "(" + r->id() + ")";
}

ModulePtr make_component(const RingPtr& r, Idx d) {
  return d == r->order() ? make_regular(r) : make_reduction(r, d);
}

RingData make_ring_data(Idx order, const CorpusParams& p) {
  RingData rd;
  rd.ring = make_zn(order);
  rd.ideals = enumerate_ideals(rd.ring);
  rd.multsets = make_multsets(rd.ring, p);
  rd.modules.push_back(make_module_data(make_regular(rd.ring), p));
  for (Idx m = 2; m < order; ++m)
    if (order % m == 0)
      rd.modules.push_back(make_module_data(make_reduction(rd.ring, m), p));
  if (order <= p.sum_ring_max)
    for (Idx a = 2; a <= order; ++a) {
      if (order % a != 0) continue;
      for (Idx b = a; b <= order; ++b)
        if (order % b == 0 && Idx(a * b) <= p.sum_order_cap)
          rd.modules.push_back(make_module_data(
              make_direct_sum(make_component(rd.ring, a), make_component(rd.ring, b)),
              p));
    }
  rd.modules.push_back(make_module_data(make_zero_module(rd.ring), p));
  return rd;
}

// Find-or-create the ring of a given order; nullptr when the order cap
// excludes it. Keeps `rings` sorted by order.
RingData* ensure_ring(Corpus& c, Idx order) {
  if (c.params.max_ring_order && order > c.params.max_ring_order) return nullptr;
  for (auto& rd : c.rings)
    if (rd.ring->order() == order) return &rd;
  auto it = std::lower_bound(
      c.rings.begin(), c.rings.end(), order,
      [](const RingData& rd, Idx o) { return rd.ring->order() < o; });
  it = c.rings.insert(it, make_ring_data(order, c.params));
  return &*it;
}

// Find-or-append the direct sum Z_a (+) Z_b over the given ring.
const ModuleData* ensure_sum(RingData& rd, Idx a, Idx b, const CorpusParams& p) {
  Idx order = rd.ring->order();
  if (order % a != 0 || order % b != 0) return nullptr;
  std::string want = component_id(rd.ring, a) + "+" + component_id(rd.ring, b);
  for (const auto& md : rd.modules)
    if (md.module->id() == want) return &md;
  rd.modules.push_back(make_module_data(
      make_direct_sum(make_component(rd.ring, a), make_component(rd.ring, b)), p));
  return &rd.modules.back();
}

void build_contexts(Corpus& c) {
  const CorpusParams& p = c.params;
  for (const auto& rd : c.rings) {
    Idx n = rd.ring->order();
    if (n > 12) continue;
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok || md.module->order() == 1) continue;
      if (std::size_t(n) * md.module->order() > p.construction_cap) continue;
      c.idealizations.push_back(idealize(rd.ring, md.module, p.construction_cap));
    }
  }
  for (const auto& rd : c.rings) {
    Idx n = rd.ring->order();
    if (n > 12) continue;
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok || md.module->order() == 1) continue;
      if (n > 8 && md.module != rd.modules.front().module) continue;
      for (const auto& j : rd.ideals) {
        if (std::size_t(n) * j.size() > p.construction_cap) continue;
        IndexSet jm = ideal_action(md.module, j);
        if (std::size_t(md.module->order()) * jm.size() > p.construction_cap)
          continue;
        c.amalgamations.push_back(make_duplication(md.module, j, p.construction_cap));
      }
    }
  }
  // Mixed contexts along the reduction maps Z_n1 -> Z_n2.
  for (const auto& rd1 : c.rings) {
    Idx n1 = rd1.ring->order();
    if (n1 > 12) continue;
    for (const auto& rd2 : c.rings) {
      Idx n2 = rd2.ring->order();
      if (n2 >= n1 || n1 % n2 != 0) continue;
      std::vector<Idx> f(n1);
      for (Idx x = 0; x < n1; ++x) f[x] = Idx(x % n2);
      const ModulePtr& m1 = rd1.modules.front().module;
      const ModulePtr& m2 = rd2.modules.front().module;
      for (const auto& j : rd2.ideals) {
        if (std::size_t(n1) * j.size() > p.construction_cap) continue;
        IndexSet jm2 = ideal_action(m2, j);
        if (std::size_t(m1->order()) * jm2.size() > p.construction_cap) continue;
        c.amalgamations.push_back(make_amalgamation(rd1.ring, rd2.ring, f, j, m1,
                                                    m2, f, p.construction_cap));
      }
    }
  }
  // One non-surjective sample: the diagonal into Z_2 x Z_2.
  if (const RingData* rd2 = c.ring_by_order(2);
      rd2 && (!p.max_ring_order || p.max_ring_order >= 4)) {
    RingPtr prod = make_ring_product(rd2->ring, rd2->ring);
    std::vector<Idx> diag = {0, 3};
    ModulePtr m1 = rd2->modules.front().module;
    ModulePtr m2 = make_regular(prod);
    for (std::vector<Idx> jgens : {std::vector<Idx>{1}, std::vector<Idx>{2}}) {
      IndexSet j = ideal_span(prod, jgens);
      c.amalgamations.push_back(
          make_amalgamation(rd2->ring, prod, diag, j, m1, m2, diag, p.construction_cap));
    }
  }
}

IndexSet zero_set(const ModulePtr& m) {
  return IndexSet::singleton(m->order(), m->zero());
}

bool oracle_outcome_is(PredicateKind k, const ModulePtr& m, const IndexSet& n,
                       const IndexSet* s, OracleOutcome want) {
  return oracle_check(k, m, n, s).outcome == want;
}

void fixture_e1_4(Corpus& c) {
  FixtureRecord rec;
  rec.id = "e1-4";
  rec.description =
      "cyclic two-prime fixture: N generated by a prime product, S the powers "
      "of the second prime";
  struct Cand { Idx order, gen, sgen; };
  const Cand cands[] = {{36, 6, 3}, {72, 6, 3}};
  for (const Cand& cd : cands)
    rec.candidates.push_back("Z" + std::to_string(cd.order) + ", N=(" +
                             std::to_string(cd.gen) + "), S=closure{" +
                             std::to_string(cd.sgen) + "}");
  for (std::size_t i = 0; i < std::size(cands); ++i) {
    RingData* rd = ensure_ring(c, cands[i].order);
    if (!rd) {
      rec.rejected.push_back("ring order exceeds max_ring_order");
      continue;
    }
    ModulePtr m = rd->modules.front().module;
    IndexSet n = submodule_span(m, {cands[i].gen});
    MultClosedSet s = mult_set_closure(rd->ring, {cands[i].sgen});
    if (!oracle_outcome_is(PredicateKind::w_s_primary, m, n, &s.elements,
                           OracleOutcome::holds)) {
      rec.rejected.push_back("oracle: N is not weakly S-primary");
      continue;
    }
    rec.module = m;
    rec.n = n;
    rec.s = s;
    rec.chosen = int(i);
    rec.substituted = i > 0;
    break;
  }
  c.fixtures.push_back(std::move(rec));
}

void fixture_int_ce(Corpus& c) {
  FixtureRecord rec;
  rec.id = "int-ce";
  rec.description =
      "intersection fixture: N and K with N ∩ K weakly S-primary but not "
      "weakly primary";
  struct Cand { Idx order, ngen, kgen, sgen; };
  const Cand cands[] = {{72, 4, 9, 3}, {72, 9, 4, 2}};
  for (const Cand& cd : cands)
    rec.candidates.push_back("Z" + std::to_string(cd.order) + ", N=(" +
                             std::to_string(cd.ngen) + "), K=(" +
                             std::to_string(cd.kgen) + "), S=closure{" +
                             std::to_string(cd.sgen) + "}");
  for (std::size_t i = 0; i < std::size(cands); ++i) {
    RingData* rd = ensure_ring(c, cands[i].order);
    if (!rd) {
      rec.rejected.push_back("ring order exceeds max_ring_order");
      continue;
    }
    ModulePtr m = rd->modules.front().module;
    IndexSet n = submodule_span(m, {cands[i].ngen});
    IndexSet k = submodule_span(m, {cands[i].kgen});
    IndexSet x = n.intersect(k);
    MultClosedSet s = mult_set_closure(rd->ring, {cands[i].sgen});
    if (!oracle_outcome_is(PredicateKind::w_s_primary, m, x, &s.elements,
                           OracleOutcome::holds)) {
      rec.rejected.push_back("oracle: N ∩ K is not weakly S-primary");
      continue;
    }
    if (!oracle_outcome_is(PredicateKind::w_primary, m, x, nullptr,
                           OracleOutcome::fails)) {
      rec.rejected.push_back("oracle: N ∩ K does not fail weakly-primary");
      continue;
    }
    rec.module = m;
    rec.n = n;
    rec.k = k;
    rec.s = s;
    rec.chosen = int(i);
    rec.substituted = i > 0;
    break;
  }
  c.fixtures.push_back(std::move(rec));
}

void fixture_ex11(Corpus& c) {
  FixtureRecord rec;
  rec.id = "ex11";
  rec.description =
      "zero submodule weakly S-primary while every (0 :_M s) fails "
      "weakly-primary (S meets Z(M))";
  struct Cand { Idx order, a, b, sgen; };
  const Cand cands[] = {{12, 4, 6, 2}, {36, 4, 6, 2}, {30, 5, 6, 2}};
  for (const Cand& cd : cands)
    rec.candidates.push_back("Z" + std::to_string(cd.a) + "(+)Z" +
                             std::to_string(cd.b) + " over Z" +
                             std::to_string(cd.order) + ", N=0, S=closure{" +
                             std::to_string(cd.sgen) + "}");
  for (std::size_t i = 0; i < std::size(cands); ++i) {
    RingData* rd = ensure_ring(c, cands[i].order);
    if (!rd) {
      rec.rejected.push_back("ring order exceeds max_ring_order");
      continue;
    }
    const ModuleData* md = ensure_sum(*rd, cands[i].a, cands[i].b, c.params);
    if (!md) {
      rec.rejected.push_back("module recipe unavailable over this ring");
      continue;
    }
    ModulePtr m = md->module;
    IndexSet zero = zero_set(m);
    MultClosedSet s = mult_set_closure(rd->ring, {cands[i].sgen});
    if (!oracle_outcome_is(PredicateKind::w_s_primary, m, zero, &s.elements,
                           OracleOutcome::holds)) {
      rec.rejected.push_back("oracle: 0 is not weakly S-primary");
      continue;
    }
    std::string bad;
    for (Idx se : s.elements.members()) {
      IndexSet col = residual_in_module(m, zero, IndexSet::singleton(rd->ring->order(), se));
      if (!oracle_outcome_is(PredicateKind::w_primary, m, col, nullptr,
                             OracleOutcome::fails)) {
        bad = "oracle: (0 :_M " + rd->ring->label(se) + ") does not fail weakly-primary";
        break;
      }
    }
    if (!bad.empty()) {
      rec.rejected.push_back(bad);
      continue;
    }
    rec.module = m;
    rec.n = zero;
    rec.s = s;
    rec.chosen = int(i);
    rec.substituted = i > 0;
    break;
  }
  c.fixtures.push_back(std::move(rec));
}

void fixture_nm_ce(Corpus& c) {
  FixtureRecord rec;
  rec.id = "nm-ce";
  rec.description =
      "zero submodule weakly S-primary while (N :_R M) fails the weakly "
      "S-primary ideal predicate";
  struct Cand { Idx order, a, sgen; };
  const Cand cands[] = {{90, 10, 3}, {30, 10, 3}};
  for (const Cand& cd : cands)
    rec.candidates.push_back("Z" + std::to_string(cd.a) + "(+)Z" +
                             std::to_string(cd.a) + " over Z" +
                             std::to_string(cd.order) + ", N=0, S=closure{" +
                             std::to_string(cd.sgen) + "}");
  for (std::size_t i = 0; i < std::size(cands); ++i) {
    RingData* rd = ensure_ring(c, cands[i].order);
    if (!rd) {
      rec.rejected.push_back("ring order exceeds max_ring_order");
      continue;
    }
    const ModuleData* md = ensure_sum(*rd, cands[i].a, cands[i].a, c.params);
    if (!md) {
      rec.rejected.push_back("module recipe unavailable over this ring");
      continue;
    }
    ModulePtr m = md->module;
    ModulePtr reg = rd->modules.front().module;
    IndexSet zero = zero_set(m);
    MultClosedSet s = mult_set_closure(rd->ring, {cands[i].sgen});
    if (!oracle_outcome_is(PredicateKind::w_s_primary, m, zero, &s.elements,
                           OracleOutcome::holds)) {
      rec.rejected.push_back("oracle: 0 is not weakly S-primary");
      continue;
    }
    IndexSet ann = annihilator(m);
    if (!oracle_outcome_is(PredicateKind::w_s_primary, reg, ann, &s.elements,
                           OracleOutcome::fails)) {
      rec.rejected.push_back("oracle: (0 :_R M) does not fail the ideal predicate");
      continue;
    }
    rec.module = m;
    rec.n = zero;
    rec.k = ann;
    rec.s = s;
    rec.chosen = int(i);
    rec.substituted = i > 0;
    break;
  }
  c.fixtures.push_back(std::move(rec));
}

void fixture_quot_ce(Corpus& c) {
  FixtureRecord rec;
  rec.id = "quot-ce";
  rec.description =
      "quotient fixture: N/K weakly S-primary in M/K while N is not weakly "
      "S-primary in M";
  struct Cand { Idx order, gen, sgen; };
  const Cand cands[] = {{36, 6, 5}, {72, 6, 5}};
  for (const Cand& cd : cands)
    rec.candidates.push_back("Z" + std::to_string(cd.order) + ", N=K=(" +
                             std::to_string(cd.gen) + "), S=closure{" +
                             std::to_string(cd.sgen) + "}");
  for (std::size_t i = 0; i < std::size(cands); ++i) {
    RingData* rd = ensure_ring(c, cands[i].order);
    if (!rd) {
      rec.rejected.push_back("ring order exceeds max_ring_order");
      continue;
    }
    ModulePtr m = rd->modules.front().module;
    IndexSet n = submodule_span(m, {cands[i].gen});
    MultClosedSet s = mult_set_closure(rd->ring, {cands[i].sgen});
    QuotientModule q = make_quotient_module(m, Submodule(m, n));
    if (!oracle_outcome_is(PredicateKind::w_s_primary, q.module,
                           zero_set(q.module), &s.elements, OracleOutcome::holds)) {
      rec.rejected.push_back("oracle: N/K is not weakly S-primary");
      continue;
    }
    if (!oracle_outcome_is(PredicateKind::w_s_primary, m, n, &s.elements,
                           OracleOutcome::fails)) {
      rec.rejected.push_back("oracle: N does not fail weakly S-primary");
      continue;
    }
    rec.module = m;
    rec.n = n;
    rec.k = n;
    rec.s = s;
    rec.chosen = int(i);
    rec.substituted = i > 0;
    break;
  }
  c.fixtures.push_back(std::move(rec));
}

void fixture_ex2(Corpus& c) {
  FixtureRecord rec;
  rec.id = "ex2";
  rec.description =
      "duplication fixture: N weakly primary while neither induced submodule "
      "of the duplication is";
  struct Cand { Idx order; };
  const Cand cands[] = {{6}, {12}};
  for (const Cand& cd : cands)
    rec.candidates.push_back("Z2(+)Z6 over Z" + std::to_string(cd.order) +
                             ", N=0, J=(2)");
  for (std::size_t i = 0; i < std::size(cands); ++i) {
    RingData* rd = ensure_ring(c, cands[i].order);
    if (!rd) {
      rec.rejected.push_back("ring order exceeds max_ring_order");
      continue;
    }
    const ModuleData* md = ensure_sum(*rd, 2, 6, c.params);
    if (!md) {
      rec.rejected.push_back("module recipe unavailable over this ring");
      continue;
    }
    ModulePtr m = md->module;
    IndexSet j = ideal_span(rd->ring, {2});
    AmalgContext dup;
    try {
      dup = make_duplication(m, j, c.params.construction_cap);
    } catch (const Error& e) {
      rec.rejected.push_back(std::string("duplication unavailable: ") + e.what());
      continue;
    }
    IndexSet zero = zero_set(m);
    if (!oracle_outcome_is(PredicateKind::w_primary, m, zero, nullptr,
                           OracleOutcome::holds)) {
      rec.rejected.push_back("oracle: 0 is not weakly primary");
      continue;
    }
    Submodule first = dup.submodule_first(zero);
    if (!oracle_outcome_is(PredicateKind::w_primary, dup.amalg_module,
                           first.elements, nullptr, OracleOutcome::fails)) {
      rec.rejected.push_back("oracle: the first induced submodule stays weakly primary");
      continue;
    }
    Submodule second = dup.submodule_second(zero);
    if (!oracle_outcome_is(PredicateKind::w_primary, dup.amalg_module,
                           second.elements, nullptr, OracleOutcome::fails)) {
      rec.rejected.push_back("oracle: the second induced submodule stays weakly primary");
      continue;
    }
    rec.module = m;
    rec.n = zero;
    rec.k = j;
    rec.chosen = int(i);
    rec.substituted = i > 0;
    break;
  }
  c.fixtures.push_back(std::move(rec));
}

void fixture_e1_3(Corpus& c) {
  FixtureRecord rec;
  rec.id = "e1-3";
  rec.description =
      "free-square fixture: N S-primary (hence weakly S-primary) but not "
      "weakly S-prime";
  rec.candidates.push_back("Z8(+)Z8 over Z8, N=(4)x(Z8), S=closure{3}");
  do {
    RingData* rd = ensure_ring(c, 8);
    if (!rd) {
      rec.rejected.push_back("ring order exceeds max_ring_order");
      break;
    }
    const ModuleData* md = ensure_sum(*rd, 8, 8, c.params);
    if (!md) {
      rec.rejected.push_back("module recipe unavailable over this ring");
      break;
    }
    ModulePtr m = md->module;
    IndexSet n = submodule_span(m, {pair_index(4, 0, 8), pair_index(0, 1, 8)});
    MultClosedSet s = mult_set_closure(rd->ring, {3});
    if (!oracle_outcome_is(PredicateKind::s_primary, m, n, &s.elements,
                           OracleOutcome::holds)) {
      rec.rejected.push_back("oracle: N is not S-primary");
      break;
    }
    if (!oracle_outcome_is(PredicateKind::w_s_primary, m, n, &s.elements,
                           OracleOutcome::holds)) {
      rec.rejected.push_back("oracle: N is not weakly S-primary");
      break;
    }
    if (!oracle_outcome_is(PredicateKind::w_s_prime, m, n, &s.elements,
                           OracleOutcome::fails)) {
      rec.rejected.push_back("oracle: N does not fail weakly S-prime");
      break;
    }
    rec.module = m;
    rec.n = n;
    rec.s = s;
    rec.chosen = 0;
  } while (false);
  c.fixtures.push_back(std::move(rec));
}

}  // namespace

const RingData* Corpus::ring_by_order(Idx n) const {
  for (const auto& rd : rings)
    if (rd.ring->order() == n) return &rd;
  return nullptr;
}

const ModuleData* Corpus::find_module(const ModulePtr& m) const {
  for (const auto& rd : rings)
    for (const auto& md : rd.modules)
      if (md.module == m) return &md;
  return nullptr;
}

const FixtureRecord* Corpus::fixture(const std::string& id) const {
  for (const auto& f : fixtures)
    if (f.id == id) return &f;
  return nullptr;
}

Corpus build_corpus(const CorpusParams& params) {
  Corpus c;
  c.params = params;
  std::vector<Idx> orders = params.ring_orders;
  orders.insert(orders.end(), params.fixture_ring_orders.begin(),
                params.fixture_ring_orders.end());
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  for (Idx n : orders) {
    if (n < 2) fail(Errc::invalid_spec, "ring orders start at 2");
    if (params.max_ring_order && n > params.max_ring_order) continue;
    c.rings.push_back(make_ring_data(n, params));
  }
  build_contexts(c);
  fixture_e1_4(c);
  fixture_int_ce(c);
  fixture_ex11(c);
  fixture_nm_ce(c);
  fixture_quot_ce(c);
  fixture_ex2(c);
  fixture_e1_3(c);
  return c;
}

}  // namespace finalg
