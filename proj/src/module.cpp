#include "finalg/module.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace finalg {

namespace {

void audit_module(const std::string& id, const RingPtr& ring, Idx n,
                  const std::vector<Idx>& add, const std::vector<Idx>& act,
                  Idx zero) {
  Idx rn = ring->order();
  auto padd = [&](Idx a, Idx b) { return add[std::size_t(a) * n + b]; };
  auto pact = [&](Idx r, Idx m) { return act[std::size_t(r) * n + m]; };
  if (n == 0) fail(Errc::invalid_spec, id + ": empty carrier");
  if (add.size() != std::size_t(n) * n)
    fail(Errc::invalid_spec, id + ": add table size mismatch");
  if (act.size() != std::size_t(rn) * n)
    fail(Errc::invalid_spec, id + ": action table size mismatch");
  for (Idx v : add)
    if (v >= n) fail(Errc::invalid_spec, id + ": add entry out of range");
  for (Idx v : act)
    if (v >= n) fail(Errc::invalid_spec, id + ": action entry out of range");
  if (zero >= n) fail(Errc::invalid_spec, id + ": bad zero");

  for (Idx a = 0; a < n; ++a) {
    if (padd(a, zero) != a) fail(Errc::invalid_spec, id + ": zero not neutral");
    bool has_neg = false;
    for (Idx b = 0; b < n; ++b)
      if (padd(a, b) == zero) { has_neg = true; break; }
    if (!has_neg) fail(Errc::invalid_spec, id + ": missing additive inverse");
    if (pact(ring->one(), a) != a) fail(Errc::invalid_spec, id + ": identity acts nontrivially");
  }
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      if (padd(a, b) != padd(b, a))
        fail(Errc::invalid_spec, id + ": addition not commutative");
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      for (Idx c = 0; c < n; ++c)
        if (padd(padd(a, b), c) != padd(a, padd(b, c)))
          fail(Errc::invalid_spec, id + ": addition not associative");
  for (Idx r = 0; r < rn; ++r)
    for (Idx s = 0; s < rn; ++s)
      for (Idx m = 0; m < n; ++m) {
        if (pact(r, pact(s, m)) != pact(ring->mul(r, s), m))
          fail(Errc::invalid_spec, id + ": action not associative");
        if (pact(ring->add(r, s), m) != padd(pact(r, m), pact(s, m)))
          fail(Errc::invalid_spec, id + ": scalar distributivity fails");
      }
  for (Idx r = 0; r < rn; ++r)
    for (Idx m = 0; m < n; ++m)
      for (Idx k = 0; k < n; ++k)
        if (pact(r, padd(m, k)) != padd(pact(r, m), pact(r, k)))
          fail(Errc::invalid_spec, id + ": vector distributivity fails");
}

}  // namespace

std::shared_ptr<const FiniteModule> FiniteModule::from_tables(
    std::string id, RingPtr ring, Idx order, std::vector<Idx> add,
    std::vector<Idx> act, Idx zero, std::vector<std::string> labels,
    std::string provenance) {
  audit_module(id, ring, order, add, act, zero);
  auto m = std::shared_ptr<FiniteModule>(new FiniteModule());
  m->id_ = std::move(id);
  m->ring_ = std::move(ring);
  m->order_ = order;
  m->add_ = std::move(add);
  m->act_ = std::move(act);
  m->zero_ = zero;
  m->neg_.assign(order, 0);
  for (Idx a = 0; a < order; ++a)
    for (Idx b = 0; b < order; ++b)
      if (m->add(a, b) == zero) { m->neg_[a] = b; break; }
  if (labels.empty()) {
    labels.resize(order);
    for (Idx a = 0; a < order; ++a) labels[a] = std::to_string(a);
  }
  if (labels.size() != order)
    fail(Errc::invalid_spec, m->id_ + ": label count mismatch");
  m->labels_ = std::move(labels);
  m->provenance_ = std::move(provenance);
  return m;
}

Submodule::Submodule(ModulePtr m, IndexSet elems)
    : module(std::move(m)), elements(std::move(elems)) {
  if (elements.carrier_size() != module->order())
    fail(Errc::invalid_spec, "submodule carrier mismatch");
  if (!elements.contains(module->zero()))
    fail(Errc::not_a_submodule, "misses zero");
  for (Idx a : elements.members())
    for (Idx b : elements.members())
      if (!elements.contains(module->add(a, b)))
        fail(Errc::not_a_submodule, "not closed under addition");
  for (Idx a : elements.members())
    for (Idx r = 0; r < module->ring()->order(); ++r)
      if (!elements.contains(module->act(r, a)))
        fail(Errc::not_a_submodule, "not closed under the ring action");
}

ModuleHom::ModuleHom(ModulePtr source, ModulePtr target, std::vector<Idx> map,
                     std::optional<std::vector<Idx>> bridge)
    : source_(std::move(source)), target_(std::move(target)),
      map_(std::move(map)), bridge_(std::move(bridge)) {
  Idx sn = source_->order(), tn = target_->order();
  Idx srn = source_->ring()->order();
  if (map_.size() != sn) fail(Errc::invalid_spec, "hom table size mismatch");
  for (Idx v : map_)
    if (v >= tn) fail(Errc::invalid_spec, "hom value out of range");
  if (!bridge_) {
    if (source_->ring() != target_->ring())
      fail(Errc::invalid_spec, "hom between different rings needs a scalar map");
  } else {
    const auto& br = *bridge_;
    const RingPtr& rs = source_->ring();
    const RingPtr& rt = target_->ring();
    if (br.size() != srn) fail(Errc::not_ring_hom, "scalar map size mismatch");
    for (Idx v : br)
      if (v >= rt->order()) fail(Errc::not_ring_hom, "scalar map value out of range");
    if (br[rs->zero()] != rt->zero() || br[rs->one()] != rt->one())
      fail(Errc::not_ring_hom, "scalar map breaks constants");
    for (Idx a = 0; a < srn; ++a)
      for (Idx b = 0; b < srn; ++b) {
        if (br[rs->add(a, b)] != rt->add(br[a], br[b]))
          fail(Errc::not_ring_hom, "scalar map not additive");
        if (br[rs->mul(a, b)] != rt->mul(br[a], br[b]))
          fail(Errc::not_ring_hom, "scalar map not multiplicative");
      }
  }
  for (Idx a = 0; a < sn; ++a)
    for (Idx b = 0; b < sn; ++b)
      if (map_[source_->add(a, b)] != target_->add(map_[a], map_[b]))
        fail(Errc::not_additive, "map not additive");
  for (Idx r = 0; r < srn; ++r)
    for (Idx a = 0; a < sn; ++a)
      if (map_[source_->act(r, a)] != target_->act(map_scalar(r), map_[a]))
        fail(Errc::not_linear, "map not linear over the scalar map");
}

bool ModuleHom::injective() const {
  std::vector<std::uint8_t> seen(target_->order(), 0);
  for (Idx v : map_) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool ModuleHom::surjective() const {
  std::vector<std::uint8_t> seen(target_->order(), 0);
  std::size_t count = 0;
  for (Idx v : map_)
    if (!seen[v]) { seen[v] = 1; ++count; }
  return count == target_->order();
}

IndexSet ModuleHom::kernel() const {
  std::vector<Idx> members;
  for (Idx a = 0; a < source_->order(); ++a)
    if (map_[a] == target_->zero()) members.push_back(a);
  return IndexSet(source_->order(), std::move(members));
}

RingHom::RingHom(RingPtr source, RingPtr target, std::vector<Idx> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  Idx sn = source_->order();
  if (map_.size() != sn) fail(Errc::not_ring_hom, "table size mismatch");
  for (Idx v : map_)
    if (v >= target_->order()) fail(Errc::not_ring_hom, "value out of range");
  if (map_[source_->zero()] != target_->zero() ||
      map_[source_->one()] != target_->one())
    fail(Errc::not_ring_hom, "constants not preserved");
  for (Idx a = 0; a < sn; ++a)
    for (Idx b = 0; b < sn; ++b) {
      if (map_[source_->add(a, b)] != target_->add(map_[a], map_[b]))
        fail(Errc::not_ring_hom, "not additive");
      if (map_[source_->mul(a, b)] != target_->mul(map_[a], map_[b]))
        fail(Errc::not_ring_hom, "not multiplicative");
    }
}

bool RingHom::surjective() const {
  std::vector<std::uint8_t> seen(target_->order(), 0);
  std::size_t count = 0;
  for (Idx v : map_)
    if (!seen[v]) { seen[v] = 1; ++count; }
  return count == target_->order();
}

ModulePtr make_regular(const RingPtr& r) {
  Idx n = r->order();
  std::vector<Idx> add(std::size_t(n) * n), act(std::size_t(n) * n);
  std::vector<std::string> labels(n);
  for (Idx a = 0; a < n; ++a) {
    labels[a] = r->label(a);
    for (Idx b = 0; b < n; ++b) {
      add[std::size_t(a) * n + b] = r->add(a, b);
      act[std::size_t(a) * n + b] = r->mul(a, b);
    }
  }
  return FiniteModule::from_tables("reg(" + r->id() + ")", r, n, std::move(add),
                                   std::move(act), r->zero(), std::move(labels),
                                   r->id() + " acting on itself");
}

ModulePtr make_zero_module(const RingPtr& r) {
  return FiniteModule::from_tables("0(" + r->id() + ")", r, 1, {0},
                                   std::vector<Idx>(r->order(), 0), 0, {"0"},
                                   "zero module over " + r->id());
}

ModulePtr make_reduction(const RingPtr& zn, Idx m) {
  Idx n = zn->order();
  if (m == 0 || n % m != 0)
    fail(Errc::action_undefined,
         "Z" + std::to_string(m) + " is not a " + zn->id() + " module");
  std::vector<Idx> add(std::size_t(m) * m), act(std::size_t(n) * m);
  for (Idx a = 0; a < m; ++a)
    for (Idx b = 0; b < m; ++b) add[std::size_t(a) * m + b] = Idx((a + b) % m);
  for (Idx r = 0; r < n; ++r)
    for (Idx a = 0; a < m; ++a)
      act[std::size_t(r) * m + a] = Idx((std::size_t(r) * a) % m);
  return FiniteModule::from_tables(
      "Z" + std::to_string(m) + "(" + zn->id() + ")", zn, m, std::move(add),
      std::move(act), 0, {},
      "integers mod " + std::to_string(m) + " over " + zn->id());
}

ModulePtr make_direct_sum(const ModulePtr& a, const ModulePtr& b) {
  if (a->ring() != b->ring())
    fail(Errc::invalid_spec, "direct sum needs a common scalar ring");
  const RingPtr& r = a->ring();
  Idx na = a->order(), nb = b->order(), rn = r->order();
  std::size_t n = std::size_t(na) * nb;
  if (n > 60000) fail(Errc::cap_exceeded, "direct sum too large");
  std::vector<Idx> add(n * n), act(std::size_t(rn) * n);
  std::vector<std::string> labels(n);
  for (Idx x1 = 0; x1 < na; ++x1)
    for (Idx x2 = 0; x2 < nb; ++x2) {
      Idx x = pair_index(x1, x2, nb);
      labels[x] = "(" + a->label(x1) + "|" + b->label(x2) + ")";
      for (Idx y1 = 0; y1 < na; ++y1)
        for (Idx y2 = 0; y2 < nb; ++y2)
          add[std::size_t(x) * n + pair_index(y1, y2, nb)] =
              pair_index(a->add(x1, y1), b->add(x2, y2), nb);
      for (Idx s = 0; s < rn; ++s)
        act[std::size_t(s) * n + x] = pair_index(a->act(s, x1), b->act(s, x2), nb);
    }
  return FiniteModule::from_tables(
      a->id() + "+" + b->id(), r, Idx(n), std::move(add), std::move(act),
      pair_index(a->zero(), b->zero(), nb), std::move(labels),
      "direct sum of " + a->id() + " and " + b->id());
}

ModulePtr make_module_product(const ModulePtr& a, const ModulePtr& b,
                              const RingPtr& product_ring) {
  Idx na = a->order(), nb = b->order();
  Idx ra = a->ring()->order(), rb = b->ring()->order();
  if (product_ring->order() != Idx(ra * rb))
    fail(Errc::invalid_spec, "scalar ring is not the expected product");
  std::size_t n = std::size_t(na) * nb;
  if (n > 60000) fail(Errc::cap_exceeded, "module product too large");
  std::vector<Idx> add(n * n), act(std::size_t(product_ring->order()) * n);
  std::vector<std::string> labels(n);
  for (Idx x1 = 0; x1 < na; ++x1)
    for (Idx x2 = 0; x2 < nb; ++x2) {
      Idx x = pair_index(x1, x2, nb);
      labels[x] = "(" + a->label(x1) + "|" + b->label(x2) + ")";
      for (Idx y1 = 0; y1 < na; ++y1)
        for (Idx y2 = 0; y2 < nb; ++y2)
          add[std::size_t(x) * n + pair_index(y1, y2, nb)] =
              pair_index(a->add(x1, y1), b->add(x2, y2), nb);
      for (Idx s = 0; s < product_ring->order(); ++s) {
        Idx s1 = pair_first(s, rb), s2 = pair_second(s, rb);
        act[std::size_t(s) * n + x] = pair_index(a->act(s1, x1), b->act(s2, x2), nb);
      }
    }
  return FiniteModule::from_tables(
      a->id() + "x" + b->id(), product_ring, Idx(n), std::move(add),
      std::move(act), pair_index(a->zero(), b->zero(), nb), std::move(labels),
      "product of " + a->id() + " and " + b->id());
}

QuotientModule make_quotient_module(const ModulePtr& m, const Submodule& n) {
  if (n.module != m) fail(Errc::invalid_spec, "submodule belongs to another module");
  Idx sz = m->order();
  std::vector<Idx> least(sz);
  for (Idx x = 0; x < sz; ++x) {
    Idx best = x;
    for (Idx k : n.elements.members()) best = std::min(best, m->add(x, k));
    least[x] = best;
  }
  std::vector<Idx> reps;
  std::vector<Idx> class_of(sz);
  std::map<Idx, Idx> rep_to_class;
  for (Idx x = 0; x < sz; ++x)
    if (least[x] == x) {
      rep_to_class[x] = Idx(reps.size());
      reps.push_back(x);
    }
  for (Idx x = 0; x < sz; ++x) class_of[x] = rep_to_class.at(least[x]);

  Idx qn = Idx(reps.size());
  Idx rn = m->ring()->order();
  std::vector<Idx> add(std::size_t(qn) * qn), act(std::size_t(rn) * qn);
  std::vector<std::string> labels(qn);
  for (Idx c = 0; c < qn; ++c) {
    labels[c] = "[" + m->label(reps[c]) + "]";
    for (Idx d = 0; d < qn; ++d)
      add[std::size_t(c) * qn + d] = class_of[m->add(reps[c], reps[d])];
    for (Idx r = 0; r < rn; ++r)
      act[std::size_t(r) * qn + c] = class_of[m->act(r, reps[c])];
  }
  ModulePtr q = FiniteModule::from_tables(
      m->id() + "/" + n.elements.key(), m->ring(), qn, std::move(add),
      std::move(act), class_of[m->zero()], std::move(labels),
      "quotient of " + m->id());
  ModuleHom proj(m, q, class_of);
  return QuotientModule{q, std::move(proj), std::move(reps), std::move(class_of)};
}

SubmoduleModule make_submodule_module(const ModulePtr& m, const Submodule& n) {
  if (n.module != m) fail(Errc::invalid_spec, "submodule belongs to another module");
  const std::vector<Idx>& mem = n.elements.members();
  Idx sn = Idx(mem.size());
  Idx rn = m->ring()->order();
  std::vector<Idx> to_sub(m->order(), Idx(mem.size()));
  for (Idx i = 0; i < sn; ++i) to_sub[mem[i]] = i;
  std::vector<Idx> add(std::size_t(sn) * sn), act(std::size_t(rn) * sn);
  std::vector<std::string> labels(sn);
  for (Idx i = 0; i < sn; ++i) {
    labels[i] = m->label(mem[i]);
    for (Idx j = 0; j < sn; ++j)
      add[std::size_t(i) * sn + j] = to_sub[m->add(mem[i], mem[j])];
    for (Idx r = 0; r < rn; ++r)
      act[std::size_t(r) * sn + i] = to_sub[m->act(r, mem[i])];
  }
  ModulePtr s = FiniteModule::from_tables(
      m->id() + "|" + n.elements.key(), m->ring(), sn, std::move(add),
      std::move(act), to_sub[m->zero()], std::move(labels),
      "submodule of " + m->id());
  std::vector<Idx> inc(sn);
  for (Idx i = 0; i < sn; ++i) inc[i] = mem[i];
  ModuleHom inclusion(s, m, std::move(inc));
  return SubmoduleModule{s, std::move(inclusion), std::move(to_sub)};
}

IndexSet submodule_span(const ModulePtr& m, const std::vector<Idx>& gens) {
  Idx n = m->order();
  Idx rn = m->ring()->order();
  std::vector<std::uint8_t> in(n, 0);
  std::vector<Idx> queue;
  auto push = [&](Idx x) {
    if (!in[x]) { in[x] = 1; queue.push_back(x); }
  };
  push(m->zero());
  for (Idx g : gens) {
    if (g >= n) fail(Errc::invalid_spec, "generator out of range");
    for (Idx r = 0; r < rn; ++r) push(m->act(r, g));
  }
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) push(m->add(queue[i], queue[j]));
  std::vector<Idx> members;
  for (Idx x = 0; x < n; ++x)
    if (in[x]) members.push_back(x);
  return IndexSet(n, std::move(members));
}

Submodule zero_submodule(const ModulePtr& m) {
  return Submodule(m, IndexSet::singleton(m->order(), m->zero()));
}

Submodule whole_submodule(const ModulePtr& m) {
  return Submodule(m, IndexSet::full(m->order()));
}

std::vector<IndexSet> enumerate_submodules(const ModulePtr& m, std::size_t cap) {
  Idx n = m->order();
  std::set<IndexSet> found;
  std::vector<IndexSet> work;
  for (Idx g = 0; g < n; ++g) {
    IndexSet c = submodule_span(m, {g});
    if (found.insert(c).second) work.push_back(c);
  }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      IndexSet u = work[i].unite(work[j]);
      IndexSet sum = submodule_span(m, u.members());
      if (found.insert(sum).second) {
        work.push_back(sum);
        if (found.size() > cap)
          fail(Errc::lattice_too_large,
               m->id() + ": more than " + std::to_string(cap) + " submodules");
      }
    }
  return std::vector<IndexSet>(found.begin(), found.end());
}

IndexSet residual_in_ring(const ModulePtr& m, const IndexSet& n) {
  Idx rn = m->ring()->order();
  std::vector<Idx> members;
  for (Idx r = 0; r < rn; ++r) {
    bool ok = true;
    for (Idx x = 0; x < m->order(); ++x)
      if (!n.contains(m->act(r, x))) { ok = false; break; }
    if (ok) members.push_back(r);
  }
  return IndexSet(rn, std::move(members));
}

IndexSet residual_in_ring(const ModulePtr& m, const IndexSet& n,
                          const IndexSet& sub) {
  Idx rn = m->ring()->order();
  std::vector<Idx> members;
  for (Idx r = 0; r < rn; ++r) {
    bool ok = true;
    for (Idx x : sub.members())
      if (!n.contains(m->act(r, x))) { ok = false; break; }
    if (ok) members.push_back(r);
  }
  return IndexSet(rn, std::move(members));
}

IndexSet residual_by_element(const ModulePtr& m, const IndexSet& n, Idx elem) {
  Idx rn = m->ring()->order();
  std::vector<Idx> members;
  for (Idx r = 0; r < rn; ++r)
    if (n.contains(m->act(r, elem))) members.push_back(r);
  return IndexSet(rn, std::move(members));
}

IndexSet annihilator(const ModulePtr& m) {
  return residual_in_ring(m, IndexSet::singleton(m->order(), m->zero()));
}

IndexSet residual_in_module(const ModulePtr& m, const IndexSet& n,
                            const IndexSet& a) {
  std::vector<Idx> members;
  for (Idx x = 0; x < m->order(); ++x) {
    bool ok = true;
    for (Idx r : a.members())
      if (!n.contains(m->act(r, x))) { ok = false; break; }
    if (ok) members.push_back(x);
  }
  return IndexSet(m->order(), std::move(members));
}

ModuleProperties module_properties(const ModulePtr& m,
                                   const std::vector<IndexSet>& lattice) {
  ModuleProperties out;
  IndexSet ann = annihilator(m);
  out.faithful = ann.size() == 1;
  out.multiplication = true;
  for (const IndexSet& n : lattice) {
    IndexSet colon = residual_in_ring(m, n);
    if (ideal_action(m, colon) != n) { out.multiplication = false; break; }
  }
  Idx rn = m->ring()->order();
  std::vector<Idx> zd;
  for (Idx r = 0; r < rn; ++r) {
    for (Idx x = 0; x < m->order(); ++x)
      if (x != m->zero() && m->act(r, x) == m->zero()) {
        zd.push_back(r);
        break;
      }
  }
  out.zdivisors = IndexSet(rn, std::move(zd));
  return out;
}

IndexSet ideal_action(const ModulePtr& m, const IndexSet& ideal) {
  Idx n = m->order();
  std::vector<std::uint8_t> in(n, 0);
  std::vector<Idx> queue;
  auto push = [&](Idx x) {
    if (!in[x]) { in[x] = 1; queue.push_back(x); }
  };
  push(m->zero());
  for (Idx a : ideal.members())
    for (Idx x = 0; x < n; ++x) push(m->act(a, x));
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) push(m->add(queue[i], queue[j]));
  std::vector<Idx> members;
  for (Idx x = 0; x < n; ++x)
    if (in[x]) members.push_back(x);
  return IndexSet(n, std::move(members));
}

IndexSet submodule_product(const ModulePtr& m, const IndexSet& n,
                           const IndexSet& k, const ModuleProperties* props) {
  IndexSet cn = residual_in_ring(m, n);
  IndexSet ck = residual_in_ring(m, k);
  if (ideal_action(m, cn) != n || ideal_action(m, ck) != k) {
    if (props && !props->multiplication)
      fail(Errc::not_multiplication_module,
           m->id() + ": products need a multiplication module");
    fail(Errc::not_multiplication_module,
         m->id() + ": factor is not presentable as (N:M)M");
  }
  IndexSet prod = ideal_product(m->ring(), cn, ck);
  return ideal_action(m, prod);
}

bool is_prime_submodule(const ModulePtr& m, const IndexSet& n) {
  if (n.is_full()) return false;
  IndexSet colon = residual_in_ring(m, n);
  Idx rn = m->ring()->order();
  for (Idx a = 0; a < rn; ++a) {
    if (colon.contains(a)) continue;
    for (Idx x = 0; x < m->order(); ++x)
      if (n.contains(m->act(a, x)) && !n.contains(x)) return false;
  }
  return true;
}

IndexSet m_radical(const ModulePtr& m, const IndexSet& n, RadicalMethod method,
                   const std::vector<IndexSet>* lattice,
                   const ModuleProperties* props) {
  if (method == RadicalMethod::auto_pick) {
    if (props && props->multiplication) method = RadicalMethod::mult_formula;
    else if (lattice) method = RadicalMethod::definition;
    else
      fail(Errc::method_inapplicable,
           "need either a submodule lattice or a multiplication module");
  }
  if (method == RadicalMethod::definition) {
    if (!lattice) fail(Errc::method_inapplicable, "definition method needs the lattice");
    IndexSet acc = IndexSet::full(m->order());
    bool any = false;
    for (const IndexSet& p : *lattice) {
      if (!n.subset_of(p)) continue;
      if (!is_prime_submodule(m, p)) continue;
      acc = acc.intersect(p);
      any = true;
    }
    if (!any) return IndexSet::full(m->order());
    return acc;
  }
  if (props && !props->multiplication)
    fail(Errc::method_inapplicable,
         m->id() + ": radical formula needs a multiplication module");
  IndexSet colon = residual_in_ring(m, n);
  IndexSet rad = radical_of_ideal(m->ring(), colon);
  return ideal_action(m, rad);
}

ModuleHom identity_hom(const ModulePtr& m) {
  std::vector<Idx> map(m->order());
  for (Idx i = 0; i < m->order(); ++i) map[i] = i;
  return ModuleHom(m, m, std::move(map));
}

IndexSet hom_transport(const ModuleHom& h, const IndexSet& n, TransportDir dir) {
  if (dir == TransportDir::preimage) {
    if (n.carrier_size() != h.target()->order())
      fail(Errc::invalid_spec, "preimage needs a target-side set");
    std::vector<Idx> members;
    for (Idx x = 0; x < h.source()->order(); ++x)
      if (n.contains(h.map(x))) members.push_back(x);
    return IndexSet(h.source()->order(), std::move(members));
  }
  if (n.carrier_size() != h.source()->order())
    fail(Errc::invalid_spec, "image needs a source-side set");
  std::vector<Idx> members;
  for (Idx x : n.members()) members.push_back(h.map(x));
  IndexSet img(h.target()->order(), std::move(members));
  try {
    Submodule check(h.target(), img);
  } catch (const Error&) {
    fail(Errc::image_not_submodule, "image is not a submodule of the target");
  }
  return img;
}

}  // namespace finalg
