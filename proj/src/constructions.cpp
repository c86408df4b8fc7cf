#include "finalg/constructions.hpp"

#include <algorithm>

namespace finalg {

namespace {

std::string fnv_hex(const std::vector<Idx>& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (Idx v : data) {
    h ^= std::uint64_t(v) + 1;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%08llx", (unsigned long long)(h & 0xffffffffull));
  return buf;
}

}  // namespace

Idealization idealize(const RingPtr& r, const ModulePtr& m, std::size_t cap) {
  if (m->ring() != r) fail(Errc::invalid_spec, "module over another ring");
  std::size_t n = std::size_t(r->order()) * m->order();
  if (n > cap)
    fail(Errc::cap_exceeded, "extension order " + std::to_string(n) +
                                 " over cap " + std::to_string(cap));
  Idx mo = m->order();
  auto pr = [mo](Idx a, Idx x) { return Idx(a * mo + x); };
  std::vector<Idx> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (Idx a = 0; a < r->order(); ++a)
    for (Idx x = 0; x < mo; ++x) {
      Idx p = pr(a, x);
      labels[p] = "(" + r->label(a) + "|" + m->label(x) + ")";
      for (Idx b = 0; b < r->order(); ++b)
        for (Idx y = 0; y < mo; ++y) {
          Idx q = pr(b, y);
          add[std::size_t(p) * n + q] = pr(r->add(a, b), m->add(x, y));
          mul[std::size_t(p) * n + q] =
              pr(r->mul(a, b), m->add(m->act(a, y), m->act(b, x)));
        }
    }
  RingPtr ext = FiniteRing::from_tables(
      "triv(" + r->id() + ";" + m->id() + ")", Idx(n), std::move(add),
      std::move(mul), pr(r->zero(), m->zero()), pr(r->one(), m->zero()),
      std::move(labels), "trivial extension of " + r->id() + " by " + m->id());
  return Idealization{r, m, ext};
}

IndexSet Idealization::embed(const IndexSet& i, const IndexSet& x) const {
  std::vector<Idx> members;
  for (Idx a : i.members())
    for (Idx v : x.members()) members.push_back(pair(a, v));
  return IndexSet(ring->order(), std::move(members));
}

Ideal Idealization::homog_ideal(const IndexSet& i, const IndexSet& n) const {
  for (Idx a : i.members())
    for (Idx x = 0; x < base_module->order(); ++x)
      if (!n.contains(base_module->act(a, x)))
        fail(Errc::not_homogeneous, "IM escapes N");
  return Ideal(ring, embed(i, n));
}

MultClosedSet Idealization::multset(const IndexSet& s, const IndexSet& k) const {
  return MultClosedSet(ring, embed(s, k));
}

Idx AmalgContext::ring_elt(Idx r1, Idx x) const {
  Idx v = ring_lookup[std::size_t(r1) * ring2->order() + x];
  if (v == amalg_ring->order()) fail(Errc::invalid_spec, "pair outside carrier");
  return v;
}

Idx AmalgContext::module_elt(Idx m1, Idx x) const {
  Idx v = module_lookup[std::size_t(m1) * module2->order() + x];
  if (v == amalg_module->order()) fail(Errc::invalid_spec, "pair outside carrier");
  return v;
}

Submodule AmalgContext::submodule_first(const IndexSet& n1) const {
  std::vector<Idx> members;
  for (Idx e = 0; e < amalg_module->order(); ++e)
    if (n1.contains(module_pairs[e].first)) members.push_back(e);
  return Submodule(amalg_module, IndexSet(amalg_module->order(), std::move(members)));
}

Submodule AmalgContext::submodule_second(const IndexSet& n2) const {
  std::vector<Idx> members;
  for (Idx e = 0; e < amalg_module->order(); ++e)
    if (n2.contains(module_pairs[e].second)) members.push_back(e);
  return Submodule(amalg_module, IndexSet(amalg_module->order(), std::move(members)));
}

MultClosedSet AmalgContext::multset_first(const IndexSet& s1) const {
  std::vector<Idx> members;
  for (Idx e = 0; e < amalg_ring->order(); ++e)
    if (s1.contains(ring_pairs[e].first)) members.push_back(e);
  return MultClosedSet(amalg_ring, IndexSet(amalg_ring->order(), std::move(members)));
}

MultClosedSet AmalgContext::multset_second(const IndexSet& s2) const {
  std::vector<Idx> members;
  for (Idx e = 0; e < amalg_ring->order(); ++e)
    if (s2.contains(ring_pairs[e].second)) members.push_back(e);
  if (members.empty())
    fail(Errc::empty_set, "no carrier pair lands in the target set");
  return MultClosedSet(amalg_ring, IndexSet(amalg_ring->order(), std::move(members)));
}

AmalgContext make_amalgamation(RingPtr r1, RingPtr r2, std::vector<Idx> f,
                               IndexSet j, ModulePtr m1, ModulePtr m2,
                               std::vector<Idx> phi, std::size_t cap) {
  RingHom fhom(r1, r2, f);
  Ideal jideal(r2, j);
  if (m1->ring() != r1 || m2->ring() != r2)
    fail(Errc::invalid_spec, "modules over unexpected rings");
  ModuleHom phihom(m1, m2, phi, f);

  IndexSet jm2 = ideal_action(m2, j);

  std::size_t ring_n = std::size_t(r1->order()) * j.size();
  if (ring_n > cap)
    fail(Errc::cap_exceeded, "joined ring order " + std::to_string(ring_n) +
                                 " over cap " + std::to_string(cap));
  std::size_t mod_n = std::size_t(m1->order()) * jm2.size();
  if (mod_n > cap)
    fail(Errc::cap_exceeded, "joined module order " + std::to_string(mod_n) +
                                 " over cap " + std::to_string(cap));

  std::vector<Idx> fingerprint = f;
  fingerprint.insert(fingerprint.end(), phi.begin(), phi.end());
  fingerprint.push_back(Idx(60000));
  for (Idx v : j.members()) fingerprint.push_back(v);
  std::string hex = fnv_hex(fingerprint);

  AmalgContext ctx;
  ctx.ring1 = r1;
  ctx.ring2 = r2;
  ctx.f = f;
  ctx.j_ideal = j;
  ctx.module1 = m1;
  ctx.module2 = m2;
  ctx.phi = phi;
  ctx.jm2 = jm2;
  ctx.f_epi = fhom.surjective();
  ctx.phi_epi = phihom.surjective();
  bool idf = r1 == r2, idphi = m1 == m2;
  if (idf)
    for (Idx a = 0; a < r1->order(); ++a)
      if (f[a] != a) { idf = false; break; }
  if (idphi)
    for (Idx x = 0; x < m1->order(); ++x)
      if (phi[x] != x) { idphi = false; break; }
  ctx.is_duplication = idf && idphi;

  // Ring carrier in lexicographic pair order.
  ctx.ring_lookup.assign(std::size_t(r1->order()) * r2->order(), Idx(ring_n));
  for (Idx a = 0; a < r1->order(); ++a) {
    std::vector<Idx> seconds;
    for (Idx jj : j.members()) seconds.push_back(r2->add(f[a], jj));
    std::sort(seconds.begin(), seconds.end());
    for (Idx x : seconds) {
      ctx.ring_lookup[std::size_t(a) * r2->order() + x] = Idx(ctx.ring_pairs.size());
      ctx.ring_pairs.push_back({a, x});
    }
  }
  {
    std::vector<Idx> add(ring_n * ring_n), mul(ring_n * ring_n);
    std::vector<std::string> labels(ring_n);
    for (std::size_t p = 0; p < ring_n; ++p) {
      auto [a, x] = ctx.ring_pairs[p];
      labels[p] = "(" + r1->label(a) + "|" + r2->label(x) + ")";
      for (std::size_t q = 0; q < ring_n; ++q) {
        auto [b, y] = ctx.ring_pairs[q];
        Idx sa = r1->add(a, b), sx = r2->add(x, y);
        Idx ma = r1->mul(a, b), mx = r2->mul(x, y);
        Idx se = ctx.ring_lookup[std::size_t(sa) * r2->order() + sx];
        Idx me = ctx.ring_lookup[std::size_t(ma) * r2->order() + mx];
        if (se == ring_n || me == ring_n)
          fail(Errc::audit_failure, "joined ring not closed");
        add[p * ring_n + q] = se;
        mul[p * ring_n + q] = me;
      }
    }
    Idx zero = ctx.ring_lookup[std::size_t(r1->zero()) * r2->order() + r2->zero()];
    Idx one = ctx.ring_lookup[std::size_t(r1->one()) * r2->order() + r2->one()];
    ctx.amalg_ring = FiniteRing::from_tables(
        "join(" + r1->id() + "," + r2->id() + ";" + hex + ")", Idx(ring_n),
        std::move(add), std::move(mul), zero, one, std::move(labels),
        "join of " + r1->id() + " and " + r2->id() + " along an ideal");
  }

  // Module carrier in lexicographic pair order.
  ctx.module_lookup.assign(std::size_t(m1->order()) * m2->order(), Idx(mod_n));
  for (Idx a = 0; a < m1->order(); ++a) {
    std::vector<Idx> seconds;
    for (Idx w : jm2.members()) seconds.push_back(m2->add(phi[a], w));
    std::sort(seconds.begin(), seconds.end());
    for (Idx x : seconds) {
      ctx.module_lookup[std::size_t(a) * m2->order() + x] =
          Idx(ctx.module_pairs.size());
      ctx.module_pairs.push_back({a, x});
    }
  }
  {
    Idx rn = Idx(ring_n);
    std::vector<Idx> add(mod_n * mod_n), act(std::size_t(rn) * mod_n);
    std::vector<std::string> labels(mod_n);
    for (std::size_t p = 0; p < mod_n; ++p) {
      auto [a, x] = ctx.module_pairs[p];
      labels[p] = "(" + m1->label(a) + "|" + m2->label(x) + ")";
      for (std::size_t q = 0; q < mod_n; ++q) {
        auto [b, y] = ctx.module_pairs[q];
        Idx e = ctx.module_lookup[std::size_t(m1->add(a, b)) * m2->order() +
                                  m2->add(x, y)];
        if (e == mod_n) fail(Errc::audit_failure, "joined module not closed");
        add[p * mod_n + q] = e;
      }
      for (Idx rc = 0; rc < rn; ++rc) {
        auto [s, t] = ctx.ring_pairs[rc];
        Idx e = ctx.module_lookup[std::size_t(m1->act(s, a)) * m2->order() +
                                  m2->act(t, x)];
        if (e == mod_n) fail(Errc::audit_failure, "joined action not closed");
        act[std::size_t(rc) * mod_n + p] = e;
      }
    }
    Idx zero = ctx.module_lookup[std::size_t(m1->zero()) * m2->order() + m2->zero()];
    ctx.amalg_module = FiniteModule::from_tables(
        "join(" + m1->id() + "," + m2->id() + ";" + hex + ")", ctx.amalg_ring,
        Idx(mod_n), std::move(add), std::move(act), zero, std::move(labels),
        "join of " + m1->id() + " and " + m2->id());
  }

  // Componentwise action matches the distributive expansion.
  for (Idx a = 0; a < r1->order(); ++a)
    for (Idx jj : j.members()) {
      Idx x = r2->add(f[a], jj);
      for (Idx b = 0; b < m1->order(); ++b)
        for (Idx w : jm2.members()) {
          Idx lhs = m2->act(x, m2->add(phi[b], w));
          Idx rhs = m2->add(
              phi[m1->act(a, b)],
              m2->add(m2->act(f[a], w),
                      m2->add(m2->act(jj, phi[b]), m2->act(jj, w))));
          if (lhs != rhs)
            fail(Errc::audit_failure, "scalar action expansion mismatch");
        }
    }

  return ctx;
}

AmalgContext make_duplication(const ModulePtr& m, const IndexSet& j,
                              std::size_t cap) {
  const RingPtr& r = m->ring();
  std::vector<Idx> idf(r->order()), idphi(m->order());
  for (Idx a = 0; a < r->order(); ++a) idf[a] = a;
  for (Idx x = 0; x < m->order(); ++x) idphi[x] = x;
  return make_amalgamation(r, r, std::move(idf), j, m, m, std::move(idphi), cap);
}

HaProbe lemma_ha_probe(const AmalgContext& ctx, const IndexSet* n1,
                       const IndexSet* n2) {
  HaProbe out;
  if (n1) {
    Submodule a1 = ctx.submodule_first(*n1);
    IndexSet colon_join = residual_in_ring(ctx.amalg_module, a1.elements);
    IndexSet colon_base = residual_in_ring(ctx.module1, *n1);
    for (Idx e = 0; e < ctx.amalg_ring->order(); ++e) {
      bool lhs = colon_join.contains(e);
      bool rhs = colon_base.contains(ctx.ring_pairs[e].first);
      if (lhs && !rhs && out.part1_fwd) { out.part1_fwd = false; out.fail1_fwd = e; }
      if (rhs && !lhs && out.part1_bwd) { out.part1_bwd = false; out.fail1_bwd = e; }
    }
  }
  if (n2) {
    if (!ctx.f_epi || !ctx.phi_epi)
      fail(Errc::epimorphism_required, "second family needs epi f and phi");
    out.has_part2 = true;
    Submodule a2 = ctx.submodule_second(*n2);
    IndexSet colon_join = residual_in_ring(ctx.amalg_module, a2.elements);
    IndexSet colon_base = residual_in_ring(ctx.module2, *n2);
    for (Idx e = 0; e < ctx.amalg_ring->order(); ++e) {
      bool lhs = colon_join.contains(e);
      bool rhs = colon_base.contains(ctx.ring_pairs[e].second);
      if (lhs && !rhs && out.part2_fwd) { out.part2_fwd = false; out.fail2_fwd = e; }
      if (rhs && !lhs && out.part2_bwd) { out.part2_bwd = false; out.fail2_bwd = e; }
    }
  }
  return out;
}

}  // namespace finalg
