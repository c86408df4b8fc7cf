#include "finalg/localize.hpp"

namespace finalg {

namespace {

// Position of each ring element inside S.members(), or |S| when absent.
std::vector<Idx> member_positions(const MultClosedSet& s, Idx carrier) {
  std::vector<Idx> pos(carrier, Idx(s.elements.size()));
  const auto& mem = s.elements.members();
  for (Idx k = 0; k < mem.size(); ++k) pos[mem[k]] = k;
  return pos;
}

}  // namespace

LocalizedRing localize_ring(const MultClosedSet& s) {
  const RingPtr& r = s.ring;
  Idx n = r->order();
  const auto& sm = s.elements.members();
  Idx ns = Idx(sm.size());

  auto equiv = [&](Idx x, Idx sden, Idx y, Idx tden) {
    Idx d = r->sub(r->mul(tden, x), r->mul(sden, y));
    for (Idx u : sm)
      if (r->mul(u, d) == r->zero()) return true;
    return false;
  };

  std::vector<Idx> class_of(std::size_t(n) * ns);
  std::vector<std::pair<Idx, Idx>> rep;
  for (Idx x = 0; x < n; ++x)
    for (Idx k = 0; k < ns; ++k) {
      Idx cls = Idx(rep.size());
      for (Idx c = 0; c < rep.size(); ++c)
        if (equiv(x, sm[k], rep[c].first, rep[c].second)) { cls = c; break; }
      if (cls == rep.size()) rep.push_back({x, sm[k]});
      class_of[std::size_t(x) * ns + k] = cls;
    }

  std::vector<Idx> spos = member_positions(s, n);
  auto cls_of = [&](Idx x, Idx sden) {
    return class_of[std::size_t(x) * ns + spos[sden]];
  };

  Idx cn = Idx(rep.size());
  std::vector<Idx> add(std::size_t(cn) * cn), mul(std::size_t(cn) * cn);
  std::vector<std::string> labels(cn);
  for (Idx c = 0; c < cn; ++c) {
    auto [x, sd] = rep[c];
    labels[c] = r->label(x) + "/" + r->label(sd);
    for (Idx d = 0; d < cn; ++d) {
      auto [y, td] = rep[d];
      Idx den = r->mul(sd, td);
      add[std::size_t(c) * cn + d] =
          cls_of(r->add(r->mul(td, x), r->mul(sd, y)), den);
      mul[std::size_t(c) * cn + d] = cls_of(r->mul(x, y), den);
    }
  }
  Idx s0 = sm[0];
  RingPtr lr = FiniteRing::from_tables(
      "loc(" + r->id() + ";" + s.elements.key() + ")", cn, std::move(add),
      std::move(mul), cls_of(r->zero(), s0), cls_of(s0, s0), std::move(labels),
      "fractions of " + r->id());

  // Representative independence of both operations.
  for (Idx x = 0; x < n; ++x)
    for (Idx k = 0; k < ns; ++k)
      for (Idx y = 0; y < n; ++y)
        for (Idx l = 0; l < ns; ++l) {
          Idx den = r->mul(sm[k], sm[l]);
          Idx c1 = class_of[std::size_t(x) * ns + k];
          Idx c2 = class_of[std::size_t(y) * ns + l];
          if (cls_of(r->add(r->mul(sm[l], x), r->mul(sm[k], y)), den) !=
              lr->add(c1, c2))
            fail(Errc::audit_failure, "fraction addition not well defined");
          if (cls_of(r->mul(x, y), den) != lr->mul(c1, c2))
            fail(Errc::audit_failure, "fraction product not well defined");
        }

  std::vector<Idx> canon(n);
  for (Idx x = 0; x < n; ++x) canon[x] = cls_of(r->mul(x, s0), s0);

  return LocalizedRing{r, s, lr, std::move(class_of), std::move(canon),
                       std::move(rep)};
}

LocalizedModule localize_module(const ModulePtr& m, const MultClosedSet& s) {
  return localize_module(m, localize_ring(s));
}

LocalizedModule localize_module(const ModulePtr& m, const LocalizedRing& scalars) {
  if (scalars.base != m->ring())
    fail(Errc::invalid_spec, "localized scalars belong to another ring");
  const MultClosedSet& s = scalars.mult_set;
  const RingPtr& r = m->ring();
  Idx n = m->order();
  const auto& sm = s.elements.members();
  Idx ns = Idx(sm.size());

  auto equiv = [&](Idx x, Idx sden, Idx y, Idx tden) {
    Idx d = m->sub(m->act(tden, x), m->act(sden, y));
    for (Idx u : sm)
      if (m->act(u, d) == m->zero()) return true;
    return false;
  };

  std::vector<Idx> class_of(std::size_t(n) * ns);
  std::vector<std::pair<Idx, Idx>> rep;
  for (Idx x = 0; x < n; ++x)
    for (Idx k = 0; k < ns; ++k) {
      Idx cls = Idx(rep.size());
      for (Idx c = 0; c < rep.size(); ++c)
        if (equiv(x, sm[k], rep[c].first, rep[c].second)) { cls = c; break; }
      if (cls == rep.size()) rep.push_back({x, sm[k]});
      class_of[std::size_t(x) * ns + k] = cls;
    }

  std::vector<Idx> spos = member_positions(s, r->order());
  auto cls_of = [&](Idx x, Idx sden) {
    return class_of[std::size_t(x) * ns + spos[sden]];
  };

  Idx cn = Idx(rep.size());
  Idx rn = scalars.ring->order();
  std::vector<Idx> add(std::size_t(cn) * cn), act(std::size_t(rn) * cn);
  std::vector<std::string> labels(cn);
  for (Idx c = 0; c < cn; ++c) {
    auto [x, sd] = rep[c];
    labels[c] = m->label(x) + "/" + r->label(sd);
    for (Idx d = 0; d < cn; ++d) {
      auto [y, td] = rep[d];
      add[std::size_t(c) * cn + d] =
          cls_of(m->add(m->act(td, x), m->act(sd, y)), r->mul(sd, td));
    }
    for (Idx rc = 0; rc < rn; ++rc) {
      auto [a, ad] = scalars.rep[rc];
      act[std::size_t(rc) * cn + c] = cls_of(m->act(a, x), r->mul(ad, sd));
    }
  }
  Idx s0 = sm[0];
  ModulePtr lm = FiniteModule::from_tables(
      "loc(" + m->id() + ";" + s.elements.key() + ")", scalars.ring, cn,
      std::move(add), std::move(act), cls_of(m->zero(), s0), std::move(labels),
      "fractions of " + m->id());

  for (Idx x = 0; x < n; ++x)
    for (Idx k = 0; k < ns; ++k) {
      Idx cx = class_of[std::size_t(x) * ns + k];
      for (Idx y = 0; y < n; ++y)
        for (Idx l = 0; l < ns; ++l) {
          Idx cy = class_of[std::size_t(y) * ns + l];
          if (cls_of(m->add(m->act(sm[l], x), m->act(sm[k], y)),
                     r->mul(sm[k], sm[l])) != lm->add(cx, cy))
            fail(Errc::audit_failure, "fraction sum not well defined");
        }
      for (Idx a = 0; a < r->order(); ++a)
        for (Idx l = 0; l < ns; ++l) {
          Idx ca = scalars.class_of[std::size_t(a) * ns + l];
          if (cls_of(m->act(a, x), r->mul(sm[l], sm[k])) != lm->act(ca, cx))
            fail(Errc::audit_failure, "fraction action not well defined");
        }
    }

  std::vector<Idx> canon(n);
  for (Idx x = 0; x < n; ++x) canon[x] = cls_of(m->act(s0, x), s0);

  return LocalizedModule{m,
                         s,
                         scalars,
                         lm,
                         std::move(class_of),
                         std::move(canon),
                         std::move(rep)};
}

IndexSet LocalizedModule::localize_submodule(const IndexSet& n) const {
  Idx ns = Idx(mult_set.elements.size());
  std::vector<Idx> members;
  std::vector<std::uint8_t> seen(module->order(), 0);
  for (Idx x : n.members())
    for (Idx k = 0; k < ns; ++k) {
      Idx c = class_of[std::size_t(x) * ns + k];
      if (!seen[c]) { seen[c] = 1; members.push_back(c); }
    }
  return IndexSet(module->order(), std::move(members));
}

}  // namespace finalg
