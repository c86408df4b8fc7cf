#include "finalg/claims.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "finalg/localize.hpp"
#include "finalg/predicates.hpp"

namespace finalg {
namespace {

std::string ptr_key(const void* p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

const RingData* find_ring(const Corpus& c, const RingPtr& r) {
  for (const auto& rd : c.rings)
    if (rd.ring == r) return &rd;
  return nullptr;
}

// {(x, y) : x in a, y in b} under the pair encoding of product carriers.
IndexSet cross_set(const IndexSet& a, const IndexSet& b) {
  Idx right = b.carrier_size();
  std::vector<Idx> mem;
  mem.reserve(a.size() * b.size());
  for (Idx x : a.members())
    for (Idx y : b.members()) mem.push_back(pair_index(x, y, right));
  return IndexSet(Idx(a.carrier_size() * right), std::move(mem));
}

std::vector<std::pair<Idx, unsigned>> factorize(Idx n) {
  std::vector<std::pair<Idx, unsigned>> out;
  Idx m = n;
  for (Idx p = 2; Idx(p * p) <= m; ++p)
    if (m % p == 0) {
      unsigned e = 0;
      while (m % p == 0) {
        m = Idx(m / p);
        ++e;
      }
      out.push_back({p, e});
    }
  if (m > 1) out.push_back({m, 1});
  return out;
}

struct CachedVerdict {
  bool precond_failed = false;
  bool holds = false;
  std::optional<Idx> witness;
};

struct DerivedModule {
  ModulePtr module;  // keeps the pointer key alive
  std::vector<IndexSet> lattice;
  bool lattice_ok = true;
  ModuleProperties props;
};

struct InfoRef {
  const std::vector<IndexSet>* lattice = nullptr;
  const ModuleProperties* props = nullptr;
  bool ok = false;
};

// Shared verdict/construction caches for one verify_claims run. Modules that
// enter a pointer-keyed cache are pinned so a recycled address can never
// alias a dead entry.
struct Harness {
  const Corpus& corpus;

  explicit Harness(const Corpus& c) : corpus(c) {}

  void pin(const ModulePtr& m) { pins_.emplace(m.get(), m); }

  const CachedVerdict& verdict(PredicateKind k, const ModulePtr& m,
                               const IndexSet& n, const MultClosedSet* s) {
    std::string key = std::string(kind_name(k)) + '|' + ptr_key(m.get()) + '|' +
                      n.key() + '|' +
                      (s && kind_uses_multset(k) ? s->elements.key() : std::string("-"));
    auto it = verdicts_.find(key);
    if (it != verdicts_.end()) return it->second;
    pin(m);
    CachedVerdict v;
    try {
      PredicateVerdict pv = check(k, Submodule(m, n), s);
      v.holds = pv.holds;
      v.witness = pv.witness;
    } catch (const Error& e) {
      if (e.code() != Errc::not_proper && e.code() != Errc::not_disjoint) throw;
      v.precond_failed = true;
    }
    return verdicts_.emplace(std::move(key), std::move(v)).first->second;
  }

  bool holds(PredicateKind k, const ModulePtr& m, const IndexSet& n,
             const MultClosedSet* s = nullptr) {
    const CachedVerdict& v = verdict(k, m, n, s);
    return !v.precond_failed && v.holds;
  }

  InfoRef info(const ModulePtr& m) {
    if (const ModuleData* md = corpus.find_module(m)) {
      if (!md->lattice_ok) return {};
      return {&md->lattice, &md->props, true};
    }
    auto it = derived_.find(m.get());
    if (it == derived_.end()) {
      DerivedModule d;
      d.module = m;
      try {
        d.lattice = enumerate_submodules(m, corpus.params.lattice_cap);
      } catch (const Error& e) {
        if (e.code() != Errc::lattice_too_large) throw;
        d.lattice_ok = false;
      }
      if (d.lattice_ok) d.props = module_properties(m, d.lattice);
      it = derived_.emplace(m.get(), std::move(d)).first;
    }
    if (!it->second.lattice_ok) return {};
    return {&it->second.lattice, &it->second.props, true};
  }

  const LocalizedModule& localized(const ModulePtr& m, const MultClosedSet& s) {
    std::string key = ptr_key(m.get()) + '|' + s.elements.key();
    auto it = locs_.find(key);
    if (it == locs_.end()) {
      pin(m);
      it = locs_.emplace(key, localize_module(m, s)).first;
    }
    return it->second;
  }

  const QuotientModule& quotient(const ModulePtr& m, const IndexSet& k) {
    std::string key = ptr_key(m.get()) + '|' + k.key();
    auto it = quots_.find(key);
    if (it == quots_.end()) {
      pin(m);
      it = quots_.emplace(key, make_quotient_module(m, Submodule(m, k))).first;
    }
    return it->second;
  }

  const SubmoduleModule& submod(const ModulePtr& m, const IndexSet& k) {
    std::string key = ptr_key(m.get()) + '|' + k.key();
    auto it = subs_.find(key);
    if (it == subs_.end()) {
      pin(m);
      it = subs_.emplace(key, make_submodule_module(m, Submodule(m, k))).first;
    }
    return it->second;
  }

  RingPtr ring_product(const RingPtr& a, const RingPtr& b) {
    auto key = std::make_pair<const void*, const void*>(a.get(), b.get());
    auto it = ring_prods_.find(key);
    if (it == ring_prods_.end())
      it = ring_prods_.emplace(key, make_ring_product(a, b)).first;
    return it->second;
  }

  ModulePtr module_product(const ModulePtr& a, const ModulePtr& b,
                           const RingPtr& product_ring) {
    auto key = std::make_pair<const void*, const void*>(a.get(), b.get());
    auto it = mod_prods_.find(key);
    if (it == mod_prods_.end())
      it = mod_prods_.emplace(key, make_module_product(a, b, product_ring)).first;
    return it->second;
  }

  const MultClosedSet& pair_multset(const RingPtr& prod, const IndexSet& sa,
                                    const IndexSet& sb) {
    std::string key = ptr_key(prod.get()) + '|' + sa.key() + '|' + sb.key();
    auto it = pair_sets_.find(key);
    if (it == pair_sets_.end())
      it = pair_sets_.emplace(key, MultClosedSet(prod, cross_set(sa, sb))).first;
    return it->second;
  }

 private:
  std::unordered_map<std::string, CachedVerdict> verdicts_;
  std::unordered_map<const FiniteModule*, ModulePtr> pins_;
  std::unordered_map<const FiniteModule*, DerivedModule> derived_;
  std::unordered_map<std::string, LocalizedModule> locs_;
  std::unordered_map<std::string, QuotientModule> quots_;
  std::unordered_map<std::string, SubmoduleModule> subs_;
  std::map<std::pair<const void*, const void*>, RingPtr> ring_prods_;
  std::map<std::pair<const void*, const void*>, ModulePtr> mod_prods_;
  std::unordered_map<std::string, MultClosedSet> pair_sets_;
};

struct Ctx {
  ClaimReport& rep;
  std::size_t cap;

  void checked() { ++rep.instances_checked; }
  void skipped() { ++rep.instances_skipped; }
  void fail(const std::string& instance, const std::string& detail) {
    rep.holds = false;
    if (rep.counterexamples.size() < cap)
      rep.counterexamples.push_back({instance, detail});
  }
};

std::string lbl(const ModulePtr& m, const IndexSet& n) {
  return m->id() + " N=" + n.to_string();
}
std::string lbl(const ModulePtr& m, const IndexSet& n, const IndexSet& s) {
  return lbl(m, n) + " S=" + s.to_string();
}

constexpr PredicateKind kPrime = PredicateKind::prime;
constexpr PredicateKind kPrimary = PredicateKind::primary;
constexpr PredicateKind kWPrimary = PredicateKind::w_primary;
constexpr PredicateKind kSPrime = PredicateKind::s_prime;
constexpr PredicateKind kWSPrime = PredicateKind::w_s_prime;
constexpr PredicateKind kSPrimary = PredicateKind::s_primary;
constexpr PredicateKind kWSPrimary = PredicateKind::w_s_primary;

// Zero products (a, x) in M1 that no s in S witnesses must die against the
// glued ideal: f(a) y + j phi(x) + j y = 0 for all j in J, y in J M2.
bool amalg_tail_first(const AmalgContext& ctx, const IndexSet& n1,
                      const IndexSet& s1) {
  const FiniteRing& r1 = *ctx.ring1;
  const FiniteModule& m1 = *ctx.module1;
  const FiniteModule& m2 = *ctx.module2;
  IndexSet res1 = residual_in_ring(ctx.module1, n1);
  IndexSet rad1 = radical_of_ideal(ctx.ring1, res1);
  std::vector<char> unwit_r(r1.order(), 0), unwit_m(m1.order(), 0);
  for (Idx a = 0; a < r1.order(); ++a) {
    bool u = true;
    for (Idx s : s1.members())
      if (rad1.contains(r1.mul(s, a))) {
        u = false;
        break;
      }
    unwit_r[a] = u;
  }
  for (Idx x = 0; x < m1.order(); ++x) {
    bool u = true;
    for (Idx s : s1.members())
      if (n1.contains(m1.act(s, x))) {
        u = false;
        break;
      }
    unwit_m[x] = u;
  }
  for (Idx a = 0; a < r1.order(); ++a) {
    if (!unwit_r[a]) continue;
    for (Idx x = 0; x < m1.order(); ++x) {
      if (!unwit_m[x]) continue;
      if (m1.act(a, x) != m1.zero()) continue;
      for (Idx j : ctx.j_ideal.members())
        for (Idx y : ctx.jm2.members()) {
          Idx v = m2.add(m2.act(ctx.f[a], y),
                         m2.add(m2.act(j, ctx.phi[x]), m2.act(j, y)));
          if (v != m2.zero()) return false;
        }
    }
  }
  return true;
}

// Unwitnessed zero products among second coordinates (f(a)+j, phi(x)+y) must
// come from zero products upstairs: a x = 0 in M1.
bool amalg_tail_second(const AmalgContext& ctx, const IndexSet& n2,
                       const IndexSet& s2, bool radical_target) {
  const FiniteRing& r1 = *ctx.ring1;
  const FiniteRing& r2 = *ctx.ring2;
  const FiniteModule& m1 = *ctx.module1;
  const FiniteModule& m2 = *ctx.module2;
  IndexSet res2 = residual_in_ring(ctx.module2, n2);
  IndexSet target = radical_target ? radical_of_ideal(ctx.ring2, res2) : res2;
  std::vector<char> unwit_rho(r2.order(), 0), unwit_mu(m2.order(), 0);
  for (Idx rho = 0; rho < r2.order(); ++rho) {
    bool u = true;
    for (Idx s : s2.members())
      if (target.contains(r2.mul(s, rho))) {
        u = false;
        break;
      }
    unwit_rho[rho] = u;
  }
  for (Idx mu = 0; mu < m2.order(); ++mu) {
    bool u = true;
    for (Idx s : s2.members())
      if (n2.contains(m2.act(s, mu))) {
        u = false;
        break;
      }
    unwit_mu[mu] = u;
  }
  for (Idx a = 0; a < r1.order(); ++a)
    for (Idx j : ctx.j_ideal.members()) {
      Idx rho = r2.add(ctx.f[a], j);
      if (!unwit_rho[rho]) continue;
      for (Idx x = 0; x < m1.order(); ++x)
        for (Idx y : ctx.jm2.members()) {
          Idx mu = m2.add(ctx.phi[x], y);
          if (!unwit_mu[mu]) continue;
          if (m2.act(rho, mu) != m2.zero()) continue;
          if (m1.act(a, x) != m1.zero()) return false;
        }
    }
  return true;
}

// ---------------------------------------------------------------------------
// HIER

void claim_hier(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings) {
    IndexSet un = units(rd.ring);
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      for (const IndexSet& n : md.lattice) {
        bool p = h.holds(kPrime, m, n);
        bool pr = h.holds(kPrimary, m, n);
        bool wp = h.holds(kWPrimary, m, n);
        IndexSet res = residual_in_ring(m, n);
        for (const auto& sd : rd.multsets) {
          cx.checked();
          bool disjoint = !res.intersects(sd.set.elements);
          bool sp = h.holds(kSPrime, m, n, &sd.set);
          bool spr = h.holds(kSPrimary, m, n, &sd.set);
          bool wsp = h.holds(kWSPrime, m, n, &sd.set);
          bool wspr = h.holds(kWSPrimary, m, n, &sd.set);
          auto bad = [&](const char* what) {
            cx.fail(lbl(m, n, sd.set.elements), what);
          };
          if (p && !pr) bad("prime without primary");
          if (pr && !wp) bad("primary without weakly primary");
          if (sp && !spr) bad("S-prime without S-primary");
          if (spr && !wspr) bad("S-primary without weakly S-primary");
          if (sp && !wsp) bad("S-prime without weakly S-prime");
          if (wsp && !wspr) bad("weakly S-prime without weakly S-primary");
          if (disjoint && p && !sp) bad("prime, disjoint, yet not S-prime");
          if (disjoint && pr && !spr) bad("primary, disjoint, yet not S-primary");
          if (disjoint && wp && !wspr)
            bad("weakly primary, disjoint, yet not weakly S-primary");
          if (sd.set.elements.subset_of(un) && wspr != wp)
            bad("unit mult set does not collapse weakly S-primary to weakly primary");
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// CHAR-EQ

void claim_char_eq(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings) {
    if (rd.ring->order() > h.corpus.params.char_ring_cap) continue;
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      CharOptions opts;
      opts.include_fm = false;
      opts.lattice = &md.lattice;
      opts.ideals = &rd.ideals;
      opts.props = &md.props;
      opts.lattice_cap = h.corpus.params.lattice_cap;
      for (const IndexSet& n : md.lattice) {
        IndexSet res = residual_in_ring(m, n);
        for (const auto& sd : rd.multsets) {
          if (res.intersects(sd.set.elements)) {
            cx.skipped();
            continue;
          }
          cx.checked();
          bool a = h.holds(kWSPrimary, m, n, &sd.set);
          CharConditions cc = char_conditions(Submodule(m, n), sd.set, opts);
          if (cc.c2 != a || cc.c3 != a || cc.c4 != a || cc.c5 != a) {
            std::ostringstream d;
            d << "definition=" << a << " c2=" << cc.c2 << " c3=" << cc.c3
              << " c4=" << cc.c4 << " c5=" << cc.c5;
            cx.fail(lbl(m, n, sd.set.elements), d.str());
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// FM

void claim_fm(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings) {
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok || !md.props.faithful || !md.props.multiplication)
        continue;
      const ModulePtr& m = md.module;
      std::size_t L = md.lattice.size();
      std::vector<IndexSet> prod(L * L);
      for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = 0; j < L; ++j)
          prod[i * L + j] =
              submodule_product(m, md.lattice[i], md.lattice[j], &md.props);
      for (const IndexSet& n : md.lattice) {
        IndexSet res = residual_in_ring(m, n);
        IndexSet rad =
            m_radical(m, n, RadicalMethod::auto_pick, &md.lattice, &md.props);
        for (const auto& sd : rd.multsets) {
          cx.checked();
          bool a = h.holds(kWSPrimary, m, n, &sd.set);
          bool b = false;
          if (!res.intersects(sd.set.elements)) {
            for (Idx s : sd.set.elements.members()) {
              std::vector<char> into_rad(L, 0), into_n(L, 0);
              for (std::size_t i = 0; i < L; ++i) {
                bool r_ok = true, n_ok = true;
                for (Idx x : md.lattice[i].members()) {
                  Idx sx = m->act(s, x);
                  if (r_ok && !rad.contains(sx)) r_ok = false;
                  if (n_ok && !n.contains(sx)) n_ok = false;
                  if (!r_ok && !n_ok) break;
                }
                into_rad[i] = r_ok;
                into_n[i] = n_ok;
              }
              bool ok = true;
              for (std::size_t i = 0; ok && i < L; ++i)
                for (std::size_t j = 0; j < L; ++j) {
                  const IndexSet& kl = prod[i * L + j];
                  if (kl.size() <= 1 || !kl.subset_of(n)) continue;
                  if (!into_rad[i] && !into_n[j]) {
                    ok = false;
                    break;
                  }
                }
              if (ok) {
                b = true;
                break;
              }
            }
          }
          if (a != b)
            cx.fail(lbl(m, n, sd.set.elements),
                    a ? "holds but the submodule-pair condition fails"
                      : "submodule-pair condition holds but the predicate fails");
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// NM family

void claim_nm1(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings) {
    const ModulePtr& reg = rd.modules.front().module;
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      IndexSet zero_m = IndexSet::singleton(m->order(), m->zero());
      for (const IndexSet& n : md.lattice)
        for (const auto& sd : rd.multsets) {
          if (!h.holds(kWSPrimary, m, n, &sd.set)) {
            cx.skipped();
            continue;
          }
          cx.checked();
          for (const IndexSet& k : md.lattice) {
            IndexSet nk = residual_in_ring(m, n, k);
            if (nk.intersects(sd.set.elements)) continue;
            IndexSet annk = residual_in_ring(m, zero_m, k);
            if (annk.size() != 1) continue;
            if (!h.holds(kWSPrimary, reg, nk, &sd.set))
              cx.fail(lbl(m, n, sd.set.elements),
                      "(N : K) not weakly S-primary for K=" + k.to_string());
          }
        }
    }
  }
}

void claim_nm2(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings) {
    const ModulePtr& reg = rd.modules.front().module;
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok || !md.props.multiplication) continue;
      const ModulePtr& m = md.module;
      for (const IndexSet& n : md.lattice) {
        IndexSet res = residual_in_ring(m, n);
        for (const auto& sd : rd.multsets) {
          if (!h.holds(kWSPrimary, reg, res, &sd.set)) {
            cx.skipped();
            continue;
          }
          cx.checked();
          if (!h.holds(kWSPrimary, m, n, &sd.set))
            cx.fail(lbl(m, n, sd.set.elements),
                    "(N : M) weakly S-primary but N is not");
        }
      }
    }
  }
}

void claim_nm3(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings) {
    const ModulePtr& reg = rd.modules.front().module;
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok || !md.props.faithful || !md.props.multiplication)
        continue;
      const ModulePtr& m = md.module;
      for (const IndexSet& i : rd.ideals) {
        IndexSet im = ideal_action(m, i);
        for (const auto& sd : rd.multsets) {
          cx.checked();
          bool a = h.holds(kWSPrimary, reg, i, &sd.set);
          bool b = h.holds(kWSPrimary, m, im, &sd.set);
          if (a != b)
            cx.fail(m->id() + " I=" + i.to_string() + " S=" +
                        sd.set.elements.to_string(),
                    a ? "ideal passes but IM fails" : "IM passes but the ideal fails");
        }
      }
    }
  }
}

void claim_nm4(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings)
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      IndexSet zero_m = IndexSet::singleton(m->order(), m->zero());
      for (const IndexSet& n : md.lattice)
        for (const auto& sd : rd.multsets) {
          if (!h.holds(kWSPrimary, m, n, &sd.set)) {
            cx.skipped();
            continue;
          }
          cx.checked();
          IndexSet res = residual_in_ring(m, n);
          IndexSet zd = zdiv_mod_ideal(rd.ring, res);
          for (const auto& td : rd.multsets) {
            IndexSet kill = residual_in_module(m, zero_m, td.set.elements);
            if (kill.size() != 1) continue;
            if (zd.intersects(td.set.elements)) continue;
            IndexSet nt = residual_in_module(m, n, td.set.elements);
            if (!h.holds(kWSPrimary, m, nt, &sd.set))
              cx.fail(lbl(m, n, sd.set.elements),
                      "(N :_M T) not weakly S-primary for T=" +
                          td.set.elements.to_string());
          }
        }
    }
}

void claim_nm_ce(Harness& h, Ctx& cx) {
  const FixtureRecord* fx = h.corpus.fixture("nm-ce");
  if (!fx || fx->chosen < 0) return;
  cx.checked();
  const RingData* rd = find_ring(h.corpus, fx->module->ring());
  const ModulePtr& reg = rd->modules.front().module;
  IndexSet zero_m = IndexSet::singleton(fx->module->order(), fx->module->zero());
  if (!h.holds(kWSPrimary, fx->module, zero_m, &*fx->s))
    cx.fail(fx->id, "zero submodule not weakly S-primary");
  if (h.holds(kWSPrimary, reg, fx->k, &*fx->s))
    cx.fail(fx->id, "annihilator unexpectedly weakly S-primary as an ideal");
}

// ---------------------------------------------------------------------------
// IM

void claim_im(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings) {
    const ModulePtr& reg = rd.modules.front().module;
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok || !md.props.faithful || !md.props.multiplication)
        continue;
      const ModulePtr& m = md.module;
      std::vector<IndexSet> actions;
      actions.reserve(rd.ideals.size());
      for (const IndexSet& i : rd.ideals) actions.push_back(ideal_action(m, i));
      for (const IndexSet& n : md.lattice) {
        IndexSet res = residual_in_ring(m, n);
        for (const auto& sd : rd.multsets) {
          cx.checked();
          bool a = h.holds(kWSPrimary, m, n, &sd.set);
          bool b = h.holds(kWSPrimary, reg, res, &sd.set);
          bool c = false;
          for (std::size_t i = 0; i < rd.ideals.size() && !c; ++i)
            if (actions[i] == n && h.holds(kWSPrimary, reg, rd.ideals[i], &sd.set))
              c = true;
          if (a != b || b != c) {
            std::ostringstream d;
            d << "N=" << a << " (N:M)=" << b << " presentation=" << c;
            cx.fail(lbl(m, n, sd.set.elements), d.str());
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// MAXIMAL

void claim_maximal(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings)
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      for (const IndexSet& n : md.lattice) {
        IndexSet res = residual_in_ring(m, n);
        if (res.is_full()) continue;
        IndexSet rad = radical_of_ideal(rd.ring, res);
        IndexSet zd = zdiv_mod_ideal(rd.ring, res);
        bool zd_ok = zd.subset_of(rad) && md.props.zdivisors.subset_of(rad);
        for (const auto& sd : rd.multsets) {
          if (!zd_ok || !h.holds(kWSPrimary, m, n, &sd.set)) {
            cx.skipped();
            continue;
          }
          bool maximal = true;
          for (const IndexSet& l : md.lattice)
            if (n.subset_of(l) && l != n && h.holds(kWSPrimary, m, l, &sd.set)) {
              maximal = false;
              break;
            }
          if (!maximal) {
            cx.skipped();
            continue;
          }
          cx.checked();
          if (!h.holds(kSPrimary, m, n, &sd.set))
            cx.fail(lbl(m, n, sd.set.elements),
                    "maximal weakly S-primary with tame zero-divisors, yet not S-primary");
        }
      }
    }
}

// ---------------------------------------------------------------------------
// IS family and EX11

void claim_is1(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings)
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      for (const IndexSet& n : md.lattice) {
        IndexSet res = residual_in_ring(m, n);
        for (const auto& sd : rd.multsets) {
          if (res.intersects(sd.set.elements)) {
            cx.skipped();
            continue;
          }
          bool some = false;
          for (Idx s : sd.set.elements.members()) {
            IndexSet colon = residual_in_module(
                m, n, IndexSet::singleton(rd.ring->order(), s));
            if (h.holds(kWPrimary, m, colon)) {
              some = true;
              break;
            }
          }
          if (!some) {
            cx.skipped();
            continue;
          }
          cx.checked();
          if (!h.holds(kWSPrimary, m, n, &sd.set))
            cx.fail(lbl(m, n, sd.set.elements),
                    "weakly primary colon submodule did not lift");
        }
      }
    }
}

void claim_is2(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings)
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      for (const IndexSet& n : md.lattice)
        for (const auto& sd : rd.multsets) {
          if (n.size() <= 1 || md.props.zdivisors.intersects(sd.set.elements) ||
              !h.holds(kWSPrimary, m, n, &sd.set)) {
            cx.skipped();
            continue;
          }
          cx.checked();
          bool some = false;
          for (Idx s : sd.set.elements.members()) {
            IndexSet colon = residual_in_module(
                m, n, IndexSet::singleton(rd.ring->order(), s));
            if (h.holds(kWPrimary, m, colon)) {
              some = true;
              break;
            }
          }
          if (!some)
            cx.fail(lbl(m, n, sd.set.elements),
                    "no colon submodule (N :_M s) is weakly primary");
        }
    }
}

void claim_ex11(Harness& h, Ctx& cx) {
  const FixtureRecord* fx = h.corpus.fixture("ex11");
  if (!fx || fx->chosen < 0) return;
  cx.checked();
  const ModulePtr& m = fx->module;
  const RingPtr& r = m->ring();
  IndexSet zero_m = IndexSet::singleton(m->order(), m->zero());
  if (!h.holds(kWSPrimary, m, zero_m, &*fx->s))
    cx.fail(fx->id, "zero submodule not weakly S-primary");
  const ModuleData* md = h.corpus.find_module(m);
  if (!md || !md->props.zdivisors.intersects(fx->s->elements))
    cx.fail(fx->id, "mult set unexpectedly avoids the zero-divisors on M");
  for (Idx s : fx->s->elements.members()) {
    IndexSet colon =
        residual_in_module(m, zero_m, IndexSet::singleton(r->order(), s));
    if (h.holds(kWPrimary, m, colon))
      cx.fail(fx->id, "(0 :_M s) unexpectedly weakly primary at s=" +
                          std::to_string(s));
  }
}

// ---------------------------------------------------------------------------
// P1 family

void claim_p1_1(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings) {
    const ModulePtr& reg = rd.modules.front().module;
    IndexSet zero_i = IndexSet::singleton(rd.ring->order(), rd.ring->zero());
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok || !md.props.faithful || !md.props.multiplication)
        continue;
      const ModulePtr& m = md.module;
      for (const IndexSet& n : md.lattice)
        for (const auto& sd : rd.multsets) {
          if (!h.holds(kSPrimary, reg, zero_i, &sd.set) ||
              !h.holds(kWSPrimary, m, n, &sd.set)) {
            cx.skipped();
            continue;
          }
          cx.checked();
          IndexSet rad =
              m_radical(m, n, RadicalMethod::auto_pick, &md.lattice, &md.props);
          if (!h.holds(kSPrime, m, rad, &sd.set))
            cx.fail(lbl(m, n, sd.set.elements),
                    "radical not S-prime although the zero ideal is S-primary");
        }
    }
  }
}

void claim_p1_2(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings) {
    IndexSet zero_i = IndexSet::singleton(rd.ring->order(), rd.ring->zero());
    bool reduced = radical_of_ideal(rd.ring, zero_i) == zero_i;
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok || !md.props.faithful || !md.props.multiplication)
        continue;
      const ModulePtr& m = md.module;
      IndexSet zero_m = IndexSet::singleton(m->order(), m->zero());
      IndexSet rad_zero =
          m_radical(m, zero_m, RadicalMethod::auto_pick, &md.lattice, &md.props);
      for (const IndexSet& n : md.lattice)
        for (const auto& sd : rd.multsets) {
          bool hyp_gap = h.holds(kWSPrimary, m, n, &sd.set) &&
                         !h.holds(kSPrimary, m, n, &sd.set);
          bool hyp_red = reduced && n.size() > 1;
          if (!hyp_gap && !hyp_red) {
            cx.skipped();
            continue;
          }
          cx.checked();
          if (hyp_gap) {
            IndexSet nn = submodule_product(m, n, n, &md.props);
            if (nn.size() != 1)
              cx.fail(lbl(m, n, sd.set.elements),
                      "weakly-but-not-S-primary submodule with N*N nonzero");
            IndexSet rad_n =
                m_radical(m, n, RadicalMethod::auto_pick, &md.lattice, &md.props);
            if (rad_n != rad_zero)
              cx.fail(lbl(m, n, sd.set.elements),
                      "weakly-but-not-S-primary submodule with radical differing from rad(0)");
          }
          if (hyp_red &&
              h.holds(kWSPrimary, m, n, &sd.set) !=
                  h.holds(kSPrimary, m, n, &sd.set))
            cx.fail(lbl(m, n, sd.set.elements),
                    "reduced ring: weakly S-primary and S-primary disagree on a nonzero submodule");
        }
    }
  }
}

// ---------------------------------------------------------------------------
// LOC family

void claim_loc1(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings)
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      for (const IndexSet& n : md.lattice)
        for (const auto& sd : rd.multsets) {
          if (!h.holds(kWSPrimary, m, n, &sd.set)) {
            cx.skipped();
            continue;
          }
          cx.checked();
          const LocalizedModule& lm = h.localized(m, sd.set);
          IndexSet ln = lm.localize_submodule(n);
          if (!h.holds(kWPrimary, lm.module, ln))
            cx.fail(lbl(m, n, sd.set.elements),
                    "localized submodule not weakly primary");
          if (!md.props.zdivisors.intersects(sd.set.elements)) {
            std::vector<IndexSet> colons;
            colons.reserve(sd.set.elements.size());
            for (Idx t : sd.set.elements.members())
              colons.push_back(residual_in_module(
                  m, n, IndexSet::singleton(rd.ring->order(), t)));
            bool dominant = false;
            for (std::size_t i = 0; i < colons.size() && !dominant; ++i) {
              bool all = true;
              for (std::size_t j = 0; j < colons.size(); ++j)
                if (!colons[j].subset_of(colons[i])) {
                  all = false;
                  break;
                }
              dominant = all;
            }
            if (!dominant)
              cx.fail(lbl(m, n, sd.set.elements),
                      "no single s dominates the colon submodules");
          }
        }
    }
}

void claim_loc2(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings)
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      for (const IndexSet& n : md.lattice)
        for (const auto& sd : rd.multsets) {
          if (md.props.zdivisors.intersects(sd.set.elements)) {
            cx.skipped();
            continue;
          }
          std::vector<IndexSet> colons;
          colons.reserve(sd.set.elements.size());
          for (Idx t : sd.set.elements.members())
            colons.push_back(residual_in_module(
                m, n, IndexSet::singleton(rd.ring->order(), t)));
          bool dominant = false;
          for (std::size_t i = 0; i < colons.size() && !dominant; ++i) {
            bool all = true;
            for (std::size_t j = 0; j < colons.size(); ++j)
              if (!colons[j].subset_of(colons[i])) {
                all = false;
                break;
              }
            dominant = all;
          }
          if (!dominant) {
            cx.skipped();
            continue;
          }
          const LocalizedModule& lm = h.localized(m, sd.set);
          if (!h.holds(kWPrimary, lm.module, lm.localize_submodule(n))) {
            cx.skipped();
            continue;
          }
          cx.checked();
          if (!h.holds(kWSPrimary, m, n, &sd.set))
            cx.fail(lbl(m, n, sd.set.elements),
                    "weakly primary localization did not pull back");
        }
    }
}

// ---------------------------------------------------------------------------
// SAT

void claim_sat(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings)
    for (const auto& sd : rd.multsets) {
      MultClosedSet star = saturate(sd.set);
      for (const auto& md : rd.modules) {
        if (!md.lattice_ok) continue;
        const ModulePtr& m = md.module;
        for (const IndexSet& n : md.lattice) {
          cx.checked();
          bool a = h.holds(kWSPrimary, m, n, &sd.set);
          bool b = h.holds(kWSPrimary, m, n, &star);
          if (a != b)
            cx.fail(lbl(m, n, sd.set.elements),
                    a ? "holds for S but not for its saturation"
                      : "holds for the saturation but not for S");
        }
      }
    }
}

// ---------------------------------------------------------------------------
// F family

void claim_f1(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings)
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      struct Epi {
        ModuleHom hom;
        IndexSet ker;
        std::string label;
      };
      std::vector<Epi> epis;
      epis.push_back({identity_hom(m),
                      IndexSet::singleton(m->order(), m->zero()), "id"});
      for (const IndexSet& k : md.lattice) {
        const QuotientModule& q = h.quotient(m, k);
        epis.push_back({q.projection, k, "quotient by " + k.to_string()});
      }
      if (md.module == rd.modules.front().module) {
        Idx order = rd.ring->order();
        for (Idx d = 2; d < order; ++d) {
          if (order % d != 0) continue;
          std::string tid =
              "Z" + std::to_string(d) + "(" + rd.ring->id() + ")";
          for (const auto& td : rd.modules)
            if (td.module->id() == tid) {
              std::vector<Idx> map(order);
              for (Idx x = 0; x < order; ++x) map[x] = Idx(x % d);
              ModuleHom fold(m, td.module, std::move(map));
              IndexSet ker = fold.kernel();
              epis.push_back({std::move(fold), std::move(ker),
                              "fold onto " + tid});
              break;
            }
        }
      }
      for (const Epi& e : epis)
        for (const IndexSet& n : md.lattice) {
          if (!e.ker.subset_of(n)) continue;
          for (const auto& sd : rd.multsets) {
            if (!h.holds(kWSPrimary, m, n, &sd.set)) {
              cx.skipped();
              continue;
            }
            cx.checked();
            IndexSet image = hom_transport(e.hom, n, TransportDir::image);
            if (!h.holds(kWSPrimary, e.hom.target(), image, &sd.set))
              cx.fail(lbl(m, n, sd.set.elements) + " via " + e.label,
                      "image not weakly S-primary");
          }
        }
    }
}

void claim_f2(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings)
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      for (const IndexSet& k : md.lattice) {
        const SubmoduleModule& sm = h.submod(m, k);
        for (const IndexSet& n : md.lattice)
          for (const auto& sd : rd.multsets) {
            if (!h.holds(kWSPrimary, m, n, &sd.set)) {
              cx.skipped();
              continue;
            }
            IndexSet pre = hom_transport(sm.inclusion, n, TransportDir::preimage);
            IndexSet res = residual_in_ring(sm.module, pre);
            if (res.intersects(sd.set.elements)) {
              cx.skipped();
              continue;
            }
            cx.checked();
            if (!h.holds(kWSPrimary, sm.module, pre, &sd.set))
              cx.fail(lbl(m, n, sd.set.elements) + " restricted to K=" +
                          k.to_string(),
                      "preimage not weakly S-primary");
          }
      }
    }
}

// ---------------------------------------------------------------------------
// QUOT family

void claim_quot1(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings)
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      for (const IndexSet& k : md.lattice) {
        const QuotientModule& q = h.quotient(m, k);
        for (const IndexSet& n : md.lattice) {
          if (!k.subset_of(n)) continue;
          for (const auto& sd : rd.multsets) {
            if (!h.holds(kWSPrimary, m, n, &sd.set)) {
              cx.skipped();
              continue;
            }
            cx.checked();
            IndexSet nq = hom_transport(q.projection, n, TransportDir::image);
            if (!h.holds(kWSPrimary, q.module, nq, &sd.set))
              cx.fail(lbl(m, n, sd.set.elements) + " over K=" + k.to_string(),
                      "N/K not weakly S-primary");
          }
        }
      }
    }
}

void claim_quot2(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings)
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      for (const IndexSet& n : md.lattice) {
        const SubmoduleModule& sm = h.submod(m, n);
        for (const IndexSet& kp : md.lattice)
          for (const auto& sd : rd.multsets) {
            if (!h.holds(kWSPrimary, m, kp, &sd.set)) {
              cx.skipped();
              continue;
            }
            IndexSet meet = kp.intersect(n);
            std::vector<Idx> mem;
            mem.reserve(meet.size());
            for (Idx x : meet.members()) mem.push_back(sm.to_sub[x]);
            IndexSet inside(sm.module->order(), std::move(mem));
            IndexSet res = residual_in_ring(sm.module, inside);
            if (res.intersects(sd.set.elements)) {
              cx.skipped();
              continue;
            }
            cx.checked();
            if (!h.holds(kWSPrimary, sm.module, inside, &sd.set))
              cx.fail(lbl(m, kp, sd.set.elements) + " meeting N=" + n.to_string(),
                      "restriction to N not weakly S-primary");
          }
      }
    }
}

void claim_quot3(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings)
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      for (const IndexSet& k : md.lattice) {
        const QuotientModule& q = h.quotient(m, k);
        for (const IndexSet& n : md.lattice) {
          if (!k.subset_of(n)) continue;
          IndexSet nq = hom_transport(q.projection, n, TransportDir::image);
          for (const auto& sd : rd.multsets) {
            if (!h.holds(kWSPrimary, q.module, nq, &sd.set)) {
              cx.skipped();
              continue;
            }
            bool kp = h.holds(kSPrimary, m, k, &sd.set);
            bool kw = h.holds(kWSPrimary, m, k, &sd.set);
            if (!kp && !kw) {
              cx.skipped();
              continue;
            }
            cx.checked();
            if (kp && !h.holds(kSPrimary, m, n, &sd.set))
              cx.fail(lbl(m, n, sd.set.elements) + " over K=" + k.to_string(),
                      "N/K weakly S-primary and K S-primary, yet N not S-primary");
            if (kw && !h.holds(kWSPrimary, m, n, &sd.set))
              cx.fail(lbl(m, n, sd.set.elements) + " over K=" + k.to_string(),
                      "N/K and K weakly S-primary, yet N not weakly S-primary");
          }
        }
      }
    }
}

void claim_quot_ce(Harness& h, Ctx& cx) {
  const FixtureRecord* fx = h.corpus.fixture("quot-ce");
  if (!fx || fx->chosen < 0) return;
  cx.checked();
  const QuotientModule& q = h.quotient(fx->module, fx->k);
  IndexSet nq = hom_transport(q.projection, fx->n, TransportDir::image);
  if (!h.holds(kWSPrimary, q.module, nq, &*fx->s))
    cx.fail(fx->id, "N/K not weakly S-primary");
  if (h.holds(kWSPrimary, fx->module, fx->n, &*fx->s))
    cx.fail(fx->id, "N unexpectedly weakly S-primary");
}

// ---------------------------------------------------------------------------
// INT family

void claim_int1(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings)
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      std::vector<std::pair<const IndexSet*, IndexSet>> induced;
      for (const IndexSet& k : md.lattice) {
        IndexSet km = residual_in_ring(m, k);
        if (ideal_action(m, km) == k) induced.push_back({&k, std::move(km)});
      }
      for (const IndexSet& n : md.lattice)
        for (const auto& sd : rd.multsets) {
          if (!h.holds(kWSPrimary, m, n, &sd.set)) {
            cx.skipped();
            continue;
          }
          cx.checked();
          for (const auto& [k, km] : induced) {
            if (!km.intersects(sd.set.elements)) continue;
            if (!h.holds(kWSPrimary, m, n.intersect(*k), &sd.set))
              cx.fail(lbl(m, n, sd.set.elements),
                      "intersection with K=" + k->to_string() +
                          " not weakly S-primary");
          }
        }
    }
}

void claim_int2(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings)
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      for (const IndexSet& k : md.lattice)
        for (const auto& sd : rd.multsets) {
          if (!h.holds(kWSPrimary, m, k, &sd.set)) {
            cx.rep.instances_skipped += md.lattice.size();
            continue;
          }
          for (const IndexSet& n : md.lattice) {
            if (!h.holds(kWSPrimary, m, n, &sd.set)) {
              cx.skipped();
              continue;
            }
            IndexSet sum = k.unite(n);
            if (!sum.is_full()) {
              std::vector<Idx> gens(sum.members().begin(), sum.members().end());
              sum = submodule_span(m, gens);
            }
            IndexSet res = residual_in_ring(m, sum);
            if (res.intersects(sd.set.elements)) {
              cx.skipped();
              continue;
            }
            cx.checked();
            if (!h.holds(kWSPrimary, m, sum, &sd.set))
              cx.fail(lbl(m, k, sd.set.elements) + " plus N=" + n.to_string(),
                      "sum not weakly S-primary");
          }
        }
    }
}

void claim_int_ce(Harness& h, Ctx& cx) {
  const FixtureRecord* fx = h.corpus.fixture("int-ce");
  if (!fx || fx->chosen < 0) return;
  cx.checked();
  const ModulePtr& m = fx->module;
  if (!h.holds(kWPrimary, m, fx->n))
    cx.fail(fx->id, "first ideal not weakly primary");
  IndexSet km = residual_in_ring(m, fx->k);
  if (ideal_action(m, km) != fx->k || !km.intersects(fx->s->elements))
    cx.fail(fx->id, "companion ideal fails the induced-intersection hypotheses");
  IndexSet meet = fx->n.intersect(fx->k);
  if (!h.holds(kWSPrimary, m, meet, &*fx->s))
    cx.fail(fx->id, "intersection not weakly S-primary");
  if (h.holds(kWPrimary, m, meet))
    cx.fail(fx->id, "intersection unexpectedly weakly primary");
}

// ---------------------------------------------------------------------------
// CART family

struct ProductSide {
  const RingData* rd;
  const ModuleData* md;
  std::vector<IndexSet> residuals;  // per lattice entry
};

std::vector<ProductSide> product_sides(const Corpus& c, Idx cap) {
  std::vector<ProductSide> out;
  for (const auto& rd : c.rings) {
    if (rd.ring->order() > cap) continue;
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok || md.module->order() <= 1 ||
          md.module->order() > cap)
        continue;
      ProductSide side{&rd, &md, {}};
      side.residuals.reserve(md.lattice.size());
      for (const IndexSet& n : md.lattice)
        side.residuals.push_back(residual_in_ring(md.module, n));
      out.push_back(std::move(side));
    }
  }
  return out;
}

void claim_cart(Harness& h, Ctx& cx) {
  std::vector<ProductSide> sides =
      product_sides(h.corpus, h.corpus.params.product_factor_cap);
  for (const ProductSide& a : sides)
    for (const ProductSide& b : sides) {
      RingPtr prod_ring = h.ring_product(a.rd->ring, b.rd->ring);
      ModulePtr prod = h.module_product(a.md->module, b.md->module, prod_ring);
      for (std::size_t i = 0; i < a.md->lattice.size(); ++i) {
        const IndexSet& na = a.md->lattice[i];
        if (na.size() <= 1) continue;
        for (std::size_t j = 0; j < b.md->lattice.size(); ++j) {
          const IndexSet& nb = b.md->lattice[j];
          if (nb.size() <= 1) continue;
          IndexSet nn = cross_set(na, nb);
          for (const auto& sa : a.rd->multsets)
            for (const auto& sb : b.rd->multsets) {
              cx.checked();
              const MultClosedSet& ss =
                  h.pair_multset(prod_ring, sa.set.elements, sb.set.elements);
              bool t1 = h.holds(kWSPrimary, prod, nn, &ss);
              bool pa = h.holds(kSPrimary, a.md->module, na, &sa.set);
              bool pb = h.holds(kSPrimary, b.md->module, nb, &sb.set);
              bool t2 = (pa && b.residuals[j].intersects(sb.set.elements)) ||
                        (pb && a.residuals[i].intersects(sa.set.elements));
              bool t3 = h.holds(kSPrimary, prod, nn, &ss);
              if (t1 != t2 || t2 != t3) {
                std::ostringstream d;
                d << "weak=" << t1 << " crossing=" << t2 << " strict=" << t3;
                cx.fail(a.md->module->id() + " N=" + na.to_string() + " S=" +
                            sa.set.elements.to_string() + " x " +
                            b.md->module->id() + " N=" + nb.to_string() +
                            " S=" + sb.set.elements.to_string(),
                        d.str());
              }
            }
        }
      }
    }
}

void claim_cart3(Harness& h, Ctx& cx) {
  std::vector<ProductSide> sides =
      product_sides(h.corpus, h.corpus.params.triple_factor_cap);
  struct Tup {
    const ProductSide* side;
    std::size_t n_idx;
    const MultSetData* sd;
  };
  std::vector<Tup> tuples;
  for (const ProductSide& side : sides)
    for (std::size_t i = 0; i < side.md->lattice.size(); ++i) {
      if (side.md->lattice[i].size() <= 1) continue;
      for (const auto& sd : side.rd->multsets) tuples.push_back({&side, i, &sd});
    }
  if (tuples.empty()) return;
  std::size_t t = tuples.size();
  std::size_t total = t * t * t;
  std::size_t stride =
      std::max<std::size_t>(1, total / std::max<std::size_t>(
                                          1, h.corpus.params.triple_target));
  for (std::size_t l = 0; l < total; l += stride) {
    const Tup& ta = tuples[l / (t * t)];
    const Tup& tb = tuples[(l / t) % t];
    const Tup& tc = tuples[l % t];
    RingPtr r12 = h.ring_product(ta.side->rd->ring, tb.side->rd->ring);
    RingPtr r123 = h.ring_product(r12, tc.side->rd->ring);
    ModulePtr m12 =
        h.module_product(ta.side->md->module, tb.side->md->module, r12);
    ModulePtr m123 = h.module_product(m12, tc.side->md->module, r123);
    IndexSet nn = cross_set(
        cross_set(ta.side->md->lattice[ta.n_idx], tb.side->md->lattice[tb.n_idx]),
        tc.side->md->lattice[tc.n_idx]);
    MultClosedSet ss(
        r123, cross_set(cross_set(ta.sd->set.elements, tb.sd->set.elements),
                        tc.sd->set.elements));
    cx.checked();
    bool t1 = h.holds(kWSPrimary, m123, nn, &ss);
    const Tup* tups[3] = {&ta, &tb, &tc};
    bool t2 = false;
    for (int i = 0; i < 3 && !t2; ++i) {
      if (!h.holds(kSPrimary, tups[i]->side->md->module,
                   tups[i]->side->md->lattice[tups[i]->n_idx],
                   &tups[i]->sd->set))
        continue;
      bool others = true;
      for (int j = 0; j < 3; ++j) {
        if (j == i) continue;
        if (!tups[j]->side->residuals[tups[j]->n_idx].intersects(
                tups[j]->sd->set.elements)) {
          others = false;
          break;
        }
      }
      t2 = others;
    }
    if (t1 != t2) {
      std::ostringstream inst;
      for (int i = 0; i < 3; ++i) {
        if (i) inst << " x ";
        inst << tups[i]->side->md->module->id() << " N="
             << tups[i]->side->md->lattice[tups[i]->n_idx].to_string() << " S="
             << tups[i]->sd->set.elements.to_string();
      }
      cx.fail(inst.str(), t1 ? "weak holds without a qualifying factor"
                             : "qualifying factor without the weak predicate");
    }
  }
}

// ---------------------------------------------------------------------------
// IDEAL (trivial extensions)

bool ideal_tail(const Idealization& t, const IndexSet& i_set,
                const IndexSet& n_set, const IndexSet& rad_i,
                const IndexSet& rad_res_n, const IndexSet& ann_n,
                const IndexSet& ann_i, const IndexSet& kill_i,
                const IndexSet& s_set) {
  const FiniteRing& r = *t.base_ring;
  const FiniteModule& m = *t.base_module;
  for (Idx s : s_set.members()) {
    bool good = true;
    for (Idx a = 0; a < r.order() && good; ++a)
      for (Idx b = 0; b < r.order(); ++b) {
        if (r.mul(a, b) != r.zero()) continue;
        if (rad_i.contains(r.mul(s, a))) continue;
        if (i_set.contains(r.mul(s, b))) continue;
        if (!ann_n.contains(a) || !ann_n.contains(b)) {
          good = false;
          break;
        }
      }
    for (Idx c = 0; c < r.order() && good; ++c)
      for (Idx x = 0; x < m.order(); ++x) {
        if (m.act(c, x) != m.zero()) continue;
        if (rad_res_n.contains(r.mul(s, c))) continue;
        if (n_set.contains(m.act(s, x))) continue;
        if (!ann_i.contains(c) || !kill_i.contains(x)) {
          good = false;
          break;
        }
      }
    if (good) return true;
  }
  return false;
}

void claim_ideal(Harness& h, Ctx& cx) {
  for (const Idealization& t : h.corpus.idealizations) {
    const RingData* rd = find_ring(h.corpus, t.base_ring);
    const ModuleData* md = h.corpus.find_module(t.base_module);
    if (!rd || !md || !md->lattice_ok) continue;
    const ModulePtr& reg = rd->modules.front().module;
    const ModulePtr& m = md->module;
    ModulePtr ext = make_regular(t.ring);
    h.pin(ext);
    IndexSet zero_m = IndexSet::singleton(m->order(), m->zero());
    IndexSet zero_i = IndexSet::singleton(rd->ring->order(), rd->ring->zero());
    IndexSet full_m = IndexSet::full(m->order());
    for (const IndexSet& i : rd->ideals) {
      IndexSet im = ideal_action(m, i);
      IndexSet rad_i = radical_of_ideal(t.base_ring, i);
      IndexSet ann_i = ideal_residual(t.base_ring, zero_i, i);
      IndexSet kill_i = residual_in_module(m, zero_m, i);
      for (const IndexSet& n : md->lattice) {
        if (!im.subset_of(n)) continue;
        Ideal hom = t.homog_ideal(i, n);
        cx.checked();
        IndexSet rad_h = radical_of_ideal(t.ring, hom.elements);
        if (rad_h != t.embed(rad_i, full_m))
          cx.fail(t.ring->id() + " I=" + i.to_string() + " N=" + n.to_string(),
                  "radical of the homogeneous ideal is not componentwise");
        IndexSet res_n = residual_in_ring(m, n);
        IndexSet rad_res_n = radical_of_ideal(t.base_ring, res_n);
        IndexSet ann_n = residual_in_ring(m, zero_m, n);
        for (const auto& sd : rd->multsets) {
          std::optional<bool> tail;
          for (const IndexSet& k : md->lattice) {
            if (!k.subset_of(n)) continue;
            MultClosedSet sk = t.multset(sd.set.elements, k);
            if (!h.holds(kWSPrimary, ext, hom.elements, &sk)) {
              cx.skipped();
              continue;
            }
            cx.checked();
            std::string inst = t.ring->id() + " I=" + i.to_string() + " N=" +
                               n.to_string() + " S=" +
                               sd.set.elements.to_string() + " K=" +
                               k.to_string();
            if (!h.holds(kWSPrimary, reg, i, &sd.set))
              cx.fail(inst, "component ideal not weakly S-primary");
            if (!res_n.intersects(sd.set.elements) &&
                !h.holds(kWSPrimary, m, n, &sd.set))
              cx.fail(inst, "component submodule not weakly S-primary");
            if (!tail)
              tail = ideal_tail(t, i, n, rad_i, rad_res_n, ann_n, ann_i,
                                kill_i, sd.set.elements);
            if (!*tail)
              cx.fail(inst, "zero-product tails have no common multiplier");
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Amalgamation family

void claim_ha(Harness& h, Ctx& cx) {
  for (const AmalgContext& ctx : h.corpus.amalgamations) {
    InfoRef i1 = h.info(ctx.module1);
    if (!i1.ok) {
      cx.skipped();
      continue;
    }
    for (const IndexSet& n1 : *i1.lattice) {
      cx.checked();
      HaProbe probe = lemma_ha_probe(ctx, &n1, nullptr);
      if (!probe.part1_fwd || !probe.part1_bwd)
        cx.fail(ctx.amalg_ring->id() + " N1=" + n1.to_string(),
                "first-coordinate residual transfer failed");
    }
    if (ctx.f_epi && ctx.phi_epi) {
      InfoRef i2 = h.info(ctx.module2);
      if (!i2.ok) {
        cx.skipped();
        continue;
      }
      for (const IndexSet& n2 : *i2.lattice) {
        cx.checked();
        HaProbe probe = lemma_ha_probe(ctx, nullptr, &n2);
        if (!probe.has_part2 || !probe.part2_fwd || !probe.part2_bwd)
          cx.fail(ctx.amalg_ring->id() + " N2=" + n2.to_string(),
                  "second-coordinate residual transfer failed");
      }
    }
  }
}

void claim_amalg1(Harness& h, Ctx& cx) {
  for (const AmalgContext& ctx : h.corpus.amalgamations) {
    InfoRef i1 = h.info(ctx.module1);
    const RingData* r1d = find_ring(h.corpus, ctx.ring1);
    if (!i1.ok || !r1d) continue;
    for (const auto& sd : r1d->multsets) {
      MultClosedSet sj = ctx.multset_first(sd.set.elements);
      for (const IndexSet& n1 : *i1.lattice) {
        cx.checked();
        bool a = h.holds(kSPrimary, ctx.amalg_module,
                         ctx.submodule_first(n1).elements, &sj);
        bool b = h.holds(kSPrimary, ctx.module1, n1, &sd.set);
        if (a != b)
          cx.fail(ctx.amalg_ring->id() + " N1=" + n1.to_string() + " S=" +
                      sd.set.elements.to_string(),
                  a ? "glued side S-primary but the base is not"
                    : "base S-primary but the glued side is not");
      }
    }
  }
}

void claim_amalg2(Harness& h, Ctx& cx) {
  for (const AmalgContext& ctx : h.corpus.amalgamations) {
    InfoRef i1 = h.info(ctx.module1);
    const RingData* r1d = find_ring(h.corpus, ctx.ring1);
    if (!i1.ok || !r1d) continue;
    for (const auto& sd : r1d->multsets) {
      MultClosedSet sj = ctx.multset_first(sd.set.elements);
      for (const IndexSet& n1 : *i1.lattice) {
        cx.checked();
        bool a = h.holds(kWSPrimary, ctx.amalg_module,
                         ctx.submodule_first(n1).elements, &sj);
        bool b = h.holds(kWSPrimary, ctx.module1, n1, &sd.set) &&
                 amalg_tail_first(ctx, n1, sd.set.elements);
        if (a != b)
          cx.fail(ctx.amalg_ring->id() + " N1=" + n1.to_string() + " S=" +
                      sd.set.elements.to_string(),
                  a ? "glued side weakly S-primary but base-plus-tail fails"
                    : "base-plus-tail holds but the glued side fails");
      }
    }
  }
}

void claim_ca1_1(Harness& h, Ctx& cx) {
  for (const AmalgContext& ctx : h.corpus.amalgamations) {
    InfoRef i1 = h.info(ctx.module1);
    if (!i1.ok) continue;
    for (const IndexSet& n1 : *i1.lattice) {
      cx.checked();
      bool a = h.holds(kPrimary, ctx.amalg_module,
                       ctx.submodule_first(n1).elements);
      bool b = h.holds(kPrimary, ctx.module1, n1);
      if (a != b)
        cx.fail(ctx.amalg_ring->id() + " N1=" + n1.to_string(),
                a ? "glued side primary but the base is not"
                  : "base primary but the glued side is not");
    }
  }
}

void claim_ca1_2(Harness& h, Ctx& cx) {
  for (const AmalgContext& ctx : h.corpus.amalgamations) {
    InfoRef i1 = h.info(ctx.module1);
    if (!i1.ok) continue;
    IndexSet one = IndexSet::singleton(ctx.ring1->order(), ctx.ring1->one());
    for (const IndexSet& n1 : *i1.lattice) {
      cx.checked();
      bool a = h.holds(kWPrimary, ctx.amalg_module,
                       ctx.submodule_first(n1).elements);
      bool b = h.holds(kWPrimary, ctx.module1, n1) &&
               amalg_tail_first(ctx, n1, one);
      if (a != b)
        cx.fail(ctx.amalg_ring->id() + " N1=" + n1.to_string(),
                a ? "glued side weakly primary but base-plus-tail fails"
                  : "base-plus-tail holds but the glued side fails");
    }
  }
}

void claim_amalg2_1(Harness& h, Ctx& cx) {
  for (const AmalgContext& ctx : h.corpus.amalgamations) {
    if (!ctx.f_epi || !ctx.phi_epi) continue;
    InfoRef i2 = h.info(ctx.module2);
    const RingData* r2d = find_ring(h.corpus, ctx.ring2);
    if (!i2.ok || !r2d) continue;
    for (const auto& sd : r2d->multsets) {
      MultClosedSet sbar = ctx.multset_second(sd.set.elements);
      for (const IndexSet& n2 : *i2.lattice) {
        cx.checked();
        bool a = h.holds(kSPrimary, ctx.amalg_module,
                         ctx.submodule_second(n2).elements, &sbar);
        bool b = h.holds(kSPrimary, ctx.module2, n2, &sd.set);
        if (a != b)
          cx.fail(ctx.amalg_ring->id() + " N2=" + n2.to_string() + " S=" +
                      sd.set.elements.to_string(),
                  a ? "glued side S-primary but the base is not"
                    : "base S-primary but the glued side is not");
      }
    }
  }
}

void claim_amalg2_2(Harness& h, Ctx& cx) {
  for (const AmalgContext& ctx : h.corpus.amalgamations) {
    if (!ctx.f_epi || !ctx.phi_epi) continue;
    InfoRef i2 = h.info(ctx.module2);
    const RingData* r2d = find_ring(h.corpus, ctx.ring2);
    if (!i2.ok || !r2d) continue;
    for (const auto& sd : r2d->multsets) {
      MultClosedSet sbar = ctx.multset_second(sd.set.elements);
      for (const IndexSet& n2 : *i2.lattice) {
        cx.checked();
        bool a = h.holds(kWSPrimary, ctx.amalg_module,
                         ctx.submodule_second(n2).elements, &sbar);
        bool b = h.holds(kWSPrimary, ctx.module2, n2, &sd.set) &&
                 amalg_tail_second(ctx, n2, sd.set.elements, true);
        if (a != b)
          cx.fail(ctx.amalg_ring->id() + " N2=" + n2.to_string() + " S=" +
                      sd.set.elements.to_string(),
                  a ? "glued side weakly S-primary but base-plus-tail fails"
                    : "base-plus-tail holds but the glued side fails");
      }
    }
  }
}

void claim_ca2_1(Harness& h, Ctx& cx) {
  for (const AmalgContext& ctx : h.corpus.amalgamations) {
    if (!ctx.f_epi || !ctx.phi_epi) continue;
    InfoRef i2 = h.info(ctx.module2);
    if (!i2.ok) continue;
    for (const IndexSet& n2 : *i2.lattice) {
      cx.checked();
      bool a = h.holds(kPrimary, ctx.amalg_module,
                       ctx.submodule_second(n2).elements);
      bool b = h.holds(kPrimary, ctx.module2, n2);
      if (a != b)
        cx.fail(ctx.amalg_ring->id() + " N2=" + n2.to_string(),
                a ? "glued side primary but the base is not"
                  : "base primary but the glued side is not");
    }
  }
}

void claim_ca2_2(Harness& h, Ctx& cx) {
  for (const AmalgContext& ctx : h.corpus.amalgamations) {
    if (!ctx.f_epi || !ctx.phi_epi) continue;
    InfoRef i2 = h.info(ctx.module2);
    if (!i2.ok) continue;
    IndexSet one = IndexSet::singleton(ctx.ring2->order(), ctx.ring2->one());
    for (const IndexSet& n2 : *i2.lattice) {
      cx.checked();
      bool a = h.holds(kWPrimary, ctx.amalg_module,
                       ctx.submodule_second(n2).elements);
      bool b = h.holds(kWPrimary, ctx.module2, n2) &&
               amalg_tail_second(ctx, n2, one, true);
      if (a != b)
        cx.fail(ctx.amalg_ring->id() + " N2=" + n2.to_string(),
                a ? "glued side weakly primary but base-plus-tail fails"
                  : "base-plus-tail holds but the glued side fails");
    }
  }
}

// ---------------------------------------------------------------------------
// Duplications

void claim_dup(Harness& h, Ctx& cx) {
  for (const AmalgContext& ctx : h.corpus.amalgamations) {
    if (!ctx.is_duplication) continue;
    InfoRef i1 = h.info(ctx.module1);
    const RingData* r1d = find_ring(h.corpus, ctx.ring1);
    if (!i1.ok || !r1d) continue;
    for (const auto& sd : r1d->multsets) {
      MultClosedSet sj = ctx.multset_first(sd.set.elements);
      MultClosedSet sbar = ctx.multset_second(sd.set.elements);
      for (const IndexSet& n : *i1.lattice) {
        cx.checked();
        bool base = h.holds(kSPrimary, ctx.module1, n, &sd.set);
        bool first = h.holds(kSPrimary, ctx.amalg_module,
                             ctx.submodule_first(n).elements, &sj);
        bool second = h.holds(kSPrimary, ctx.amalg_module,
                              ctx.submodule_second(n).elements, &sbar);
        if (base != first || base != second) {
          std::ostringstream d;
          d << "base=" << base << " first=" << first << " second=" << second;
          cx.fail(ctx.amalg_ring->id() + " N=" + n.to_string() + " S=" +
                      sd.set.elements.to_string(),
                  d.str());
        }
      }
    }
  }
}

void claim_dup1(Harness& h, Ctx& cx) {
  for (const AmalgContext& ctx : h.corpus.amalgamations) {
    if (!ctx.is_duplication) continue;
    InfoRef i1 = h.info(ctx.module1);
    const RingData* r1d = find_ring(h.corpus, ctx.ring1);
    if (!i1.ok || !r1d) continue;
    for (const auto& sd : r1d->multsets) {
      MultClosedSet sj = ctx.multset_first(sd.set.elements);
      for (const IndexSet& n : *i1.lattice) {
        cx.checked();
        bool a = h.holds(kWSPrimary, ctx.amalg_module,
                         ctx.submodule_first(n).elements, &sj);
        bool b = h.holds(kWSPrimary, ctx.module1, n, &sd.set) &&
                 amalg_tail_first(ctx, n, sd.set.elements);
        if (a != b)
          cx.fail(ctx.amalg_ring->id() + " N=" + n.to_string() + " S=" +
                      sd.set.elements.to_string(),
                  a ? "duplicated side weakly S-primary but base-plus-tail fails"
                    : "base-plus-tail holds but the duplicated side fails");
      }
    }
  }
}

void claim_dup2(Harness& h, Ctx& cx) {
  for (const AmalgContext& ctx : h.corpus.amalgamations) {
    if (!ctx.is_duplication) continue;
    InfoRef i1 = h.info(ctx.module1);
    const RingData* r1d = find_ring(h.corpus, ctx.ring1);
    if (!i1.ok || !r1d) continue;
    for (const auto& sd : r1d->multsets) {
      MultClosedSet sbar = ctx.multset_second(sd.set.elements);
      for (const IndexSet& n : *i1.lattice) {
        cx.checked();
        bool a = h.holds(kWSPrime, ctx.amalg_module,
                         ctx.submodule_second(n).elements, &sbar);
        bool b = h.holds(kWSPrime, ctx.module1, n, &sd.set) &&
                 amalg_tail_second(ctx, n, sd.set.elements, false);
        if (a != b)
          cx.fail(ctx.amalg_ring->id() + " N=" + n.to_string() + " S=" +
                      sd.set.elements.to_string(),
                  std::string("prime form: ") +
                      (a ? "duplicated side holds but base-plus-tail fails"
                         : "base-plus-tail holds but the duplicated side fails"));
        bool a2 = h.holds(kWSPrimary, ctx.amalg_module,
                          ctx.submodule_second(n).elements, &sbar);
        bool b2 = h.holds(kWSPrimary, ctx.module1, n, &sd.set) &&
                  amalg_tail_second(ctx, n, sd.set.elements, true);
        if (a2 != b2)
          cx.fail(ctx.amalg_ring->id() + " N=" + n.to_string() + " S=" +
                      sd.set.elements.to_string(),
                  std::string("primary form: ") +
                      (a2 ? "duplicated side holds but base-plus-tail fails"
                          : "base-plus-tail holds but the duplicated side fails"));
      }
    }
  }
}

void claim_ex2(Harness& h, Ctx& cx) {
  const FixtureRecord* fx = h.corpus.fixture("ex2");
  if (!fx || fx->chosen < 0) return;
  cx.checked();
  AmalgContext dup =
      make_duplication(fx->module, fx->k, h.corpus.params.construction_cap);
  if (!h.holds(kWPrimary, fx->module, fx->n))
    cx.fail(fx->id, "zero submodule not weakly primary in the base");
  if (h.holds(kWPrimary, dup.amalg_module, dup.submodule_first(fx->n).elements))
    cx.fail(fx->id, "first embedding unexpectedly weakly primary");
}

void claim_ex_final(Harness& h, Ctx& cx) {
  const FixtureRecord* fx = h.corpus.fixture("ex2");
  if (!fx || fx->chosen < 0) return;
  cx.checked();
  AmalgContext dup =
      make_duplication(fx->module, fx->k, h.corpus.params.construction_cap);
  if (!h.holds(kWPrimary, fx->module, fx->n))
    cx.fail(fx->id, "zero submodule not weakly primary in the base");
  if (h.holds(kWPrimary, dup.amalg_module,
              dup.submodule_second(fx->n).elements))
    cx.fail(fx->id, "second embedding unexpectedly weakly primary");
}

// ---------------------------------------------------------------------------
// E1 family

void claim_e1_2(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings)
    for (const auto& md : rd.modules) {
      if (!md.lattice_ok) continue;
      const ModulePtr& m = md.module;
      IndexSet ann = annihilator(m);
      IndexSet zero_m = IndexSet::singleton(m->order(), m->zero());
      for (const auto& sd : rd.multsets) {
        cx.checked();
        bool expect = !ann.intersects(sd.set.elements);
        bool got = h.holds(kWSPrimary, m, zero_m, &sd.set);
        if (got != expect)
          cx.fail(lbl(m, zero_m, sd.set.elements),
                  expect ? "annihilator avoids S yet zero is not weakly S-primary"
                         : "annihilator meets S yet zero is weakly S-primary");
      }
    }
}

void claim_e1_3(Harness& h, Ctx& cx) {
  const FixtureRecord* fx = h.corpus.fixture("e1-3");
  if (!fx || fx->chosen < 0) return;
  cx.checked();
  if (!h.holds(kSPrimary, fx->module, fx->n, &*fx->s))
    cx.fail(fx->id, "not S-primary");
  if (!h.holds(kWSPrimary, fx->module, fx->n, &*fx->s))
    cx.fail(fx->id, "not weakly S-primary");
  if (h.holds(kWSPrime, fx->module, fx->n, &*fx->s))
    cx.fail(fx->id, "unexpectedly weakly S-prime");
}

void claim_e1_4(Harness& h, Ctx& cx) {
  for (const auto& rd : h.corpus.rings) {
    Idx order = rd.ring->order();
    auto factors = factorize(order);
    if (factors.size() != 2) continue;
    const ModulePtr& reg = rd.modules.front().module;
    for (int orient = 0; orient < 2; ++orient) {
      Idx p = factors[orient].first;
      unsigned e = factors[orient].second;
      Idx q = factors[1 - orient].first;
      unsigned f = factors[1 - orient].second;
      for (unsigned k = 0; k < e; ++k)
        for (unsigned t = 0; t < f; ++t) {
          if (k == 0 && t == 0) continue;
          std::uint64_t gen = 1;
          for (unsigned a = 0; a < k; ++a) gen = gen * p % order;
          std::uint64_t qt = 1;
          for (unsigned a = 0; a < t; ++a) qt = qt * q % order;
          IndexSet n = submodule_span(reg, {Idx(gen * qt % order)});
          MultClosedSet s = mult_set_closure(rd.ring, {rd.ring->one(), q});
          IndexSet res = residual_in_ring(reg, n);
          if (res.intersects(s.elements)) {
            cx.skipped();
            continue;
          }
          cx.checked();
          std::string inst = rd.ring->id() + " N=" + n.to_string() + " S=" +
                             s.elements.to_string();
          if (!h.holds(kWSPrimary, reg, n, &s)) {
            cx.fail(inst, "ideal not weakly S-primary");
            continue;
          }
          IndexSet good = weakly_s_elements(Submodule(reg, n), s);
          if (!good.contains(Idx(qt)))
            cx.fail(inst, "expected multiplier " + std::to_string(qt) +
                              " is not a weakly S-element");
        }
    }
  }
}

// ---------------------------------------------------------------------------
// Registry

struct ClaimDef {
  const char* id;
  const char* desc;
  void (*fn)(Harness&, Ctx&);
};

const ClaimDef kClaims[] = {
    {"HIER",
     "Implications among the seven predicate kinds on every corpus instance, "
     "including the collapse to plain weakly primary when the mult set "
     "consists of units; ideals enter as regular-module submodules.",
     claim_hier},
    {"CHAR-EQ",
     "The four element/subset characterizations of weakly S-primary agree "
     "with the definition on rings up to the characterization cap.",
     claim_char_eq},
    {"FM",
     "On faithful multiplication modules the predicate is equivalent to the "
     "submodule-pair condition: some s pushes one factor of each nonzero "
     "product KL inside N into the radical of N or the other factor into N.",
     claim_fm},
    {"NM-1",
     "If N is weakly S-primary then (N : K) is a weakly S-primary ideal for "
     "every submodule K with zero annihilator whose residual avoids S.",
     claim_nm1},
    {"NM-2",
     "On multiplication modules, (N : M) weakly S-primary as an ideal forces "
     "N weakly S-primary.",
     claim_nm2},
    {"NM-3",
     "On faithful multiplication modules an ideal I is weakly S-primary "
     "exactly when IM is.",
     claim_nm3},
    {"NM-4",
     "Colon by a torsionless mult set T avoiding zero-divisors mod (N : M) "
     "preserves weakly S-primary.",
     claim_nm4},
    {"NM-CE",
     "Frozen instance whose zero submodule is weakly S-primary while its "
     "annihilator is not a weakly S-primary ideal.",
     claim_nm_ce},
    {"IM",
     "On faithful multiplication modules: N weakly S-primary, (N : M) weakly "
     "S-primary, and N = IM for some weakly S-primary ideal I are equivalent.",
     claim_im},
    {"MAXIMAL",
     "A maximal weakly S-primary submodule whose residual's zero-divisor data "
     "sits inside its radical is S-primary.",
     claim_maximal},
    {"IS-1",
     "If (N : M) avoids S and some s in S makes (N :_M s) weakly primary, "
     "then N is weakly S-primary.",
     claim_is1},
    {"IS-2",
     "If N is nonzero weakly S-primary and S avoids zero-divisors on M, some "
     "(N :_M s) is weakly primary.",
     claim_is2},
    {"EX11",
     "Frozen instance separating weakly S-primary from the colon-submodule "
     "condition when S meets the zero-divisors on M.",
     claim_ex11},
    {"P1-1",
     "When the zero ideal is S-primary, the radical of a weakly S-primary "
     "submodule of a faithful multiplication module is S-prime.",
     claim_p1_1},
    {"P1-2",
     "A weakly-but-not-S-primary submodule squares to zero and shares its "
     "radical with the zero submodule; over reduced rings the two notions "
     "agree on nonzero submodules.",
     claim_p1_2},
    {"LOC-1",
     "Weakly S-primary localizes to weakly primary; when S avoids "
     "zero-divisors on M a single s dominates all colon submodules (N :_M t).",
     claim_loc1},
    {"LOC-2",
     "With S avoiding zero-divisors on M and a dominant colon submodule, a "
     "weakly primary localization pulls back to weakly S-primary.",
     claim_loc2},
    {"SAT",
     "The weakly S-primary verdict is invariant under replacing S by its "
     "saturation.",
     claim_sat},
    {"F-1",
     "Surjective module maps push weakly S-primary submodules containing the "
     "kernel to weakly S-primary images.",
     claim_f1},
    {"F-2",
     "Restriction along a submodule inclusion preserves weakly S-primary when "
     "the preimage's residual avoids S.",
     claim_f2},
    {"QUOT-1",
     "Weakly S-primary passes to quotients: N/K is weakly S-primary in M/K "
     "for every K inside N.",
     claim_quot1},
    {"QUOT-2",
     "A weakly S-primary K' meets a submodule N in a weakly S-primary "
     "submodule of N when the residual avoids S.",
     claim_quot2},
    {"QUOT-3",
     "If N/K is weakly S-primary and K is S-primary (weakly S-primary), then "
     "N is S-primary (weakly S-primary).",
     claim_quot3},
    {"QUOT-CE",
     "Frozen instance where N/K is weakly S-primary but N is not.",
     claim_quot_ce},
    {"INT-1",
     "Intersecting a weakly S-primary N with an induced K = (K : M)M whose "
     "residual meets S stays weakly S-primary.",
     claim_int1},
    {"INT-2",
     "The span of a weakly S-primary K with any N is weakly S-primary when "
     "the span's residual avoids S.",
     claim_int2},
    {"INT-CE-Z72",
     "Frozen instance: two S-primary ideals whose intersection is weakly "
     "S-primary but not weakly primary.",
     claim_int_ce},
    {"CART",
     "Two-factor products over product rings: weakly S-primary, the "
     "one-factor-S-primary crossing condition, and S-primary all coincide for "
     "nonzero factor pairs.",
     claim_cart},
    {"CART3",
     "Three-factor products: weakly S-primary holds exactly when one factor "
     "is S-primary and both other residuals meet their mult sets.",
     claim_cart3},
    {"IDEAL",
     "Homogeneous ideals I x N of a trivial extension: weakly (S x K)-primary "
     "forces I weakly S-primary, N weakly S-primary when (N : M) avoids S, "
     "and a common multiplier taming both zero-product tails; radicals of "
     "homogeneous ideals decompose componentwise.",
     claim_ideal},
    {"HA",
     "Residual membership across amalgamations: first coordinates of the "
     "glued residual match (N1 : M1); with surjective glue maps second "
     "coordinates match (N2 : M2).",
     claim_ha},
    {"AMALG-1",
     "First-coordinate S-primary transfer across amalgamations, both "
     "directions.",
     claim_amalg1},
    {"AMALG-2",
     "First-coordinate weakly S-primary transfer: the glued submodule "
     "qualifies iff the base does and unwitnessed zero products die against "
     "the glued ideal.",
     claim_amalg2},
    {"CA1-1",
     "First-coordinate primary transfer, both directions.",
     claim_ca1_1},
    {"CA1-2",
     "First-coordinate weakly primary transfer with the zero-product tail at "
     "s = 1.",
     claim_ca1_2},
    {"AMALG2-1",
     "Second-coordinate S-primary transfer across surjective glue maps, both "
     "directions.",
     claim_amalg2_1},
    {"AMALG2-2",
     "Second-coordinate weakly S-primary transfer across surjective glue "
     "maps, with unwitnessed glued zero products forced from genuine ones.",
     claim_amalg2_2},
    {"CA2-1",
     "Second-coordinate primary transfer across surjective glue maps, both "
     "directions.",
     claim_ca2_1},
    {"CA2-2",
     "Second-coordinate weakly primary transfer across surjective glue maps "
     "with the zero-product tail at s = 1.",
     claim_ca2_2},
    {"DUP",
     "Ring duplications: S-primary agrees across the base and both "
     "embeddings.",
     claim_dup},
    {"DUP1",
     "Duplications, first embedding: weakly S-primary transfer with the "
     "duplication zero-product tail (r m' + j m + j m' vanishing for "
     "unwitnessed pairs).",
     claim_dup1},
    {"DUP2",
     "Duplications, second embedding: weakly S-prime transfer with the lifted "
     "zero-product tail, plus the weakly S-primary analogue.",
     claim_dup2},
    {"EX2",
     "Frozen instance where the zero submodule is weakly primary but its "
     "first duplication embedding is not.",
     claim_ex2},
    {"EX-FINAL",
     "Frozen instance where the zero submodule is weakly primary but its "
     "second duplication embedding is not.",
     claim_ex_final},
    {"E1-2",
     "The zero submodule is weakly S-primary exactly when the module's "
     "annihilator avoids S.",
     claim_e1_2},
    {"E1-3",
     "Frozen instance that is S-primary and weakly S-primary but not weakly "
     "S-prime.",
     claim_e1_3},
    {"E1-4",
     "In Z_n with prime divisors p and q, the ideal generated by p^k q^t is "
     "weakly S-primary for S generated by q, with q^t as a working "
     "multiplier, whenever the residual avoids S.",
     claim_e1_4},
};

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> reg = [] {
    std::vector<ClaimInfo> out;
    for (const ClaimDef& d : kClaims) out.push_back({d.id, d.desc});
    return out;
  }();
  return reg;
}

bool claim_known(const std::string& id) {
  for (const ClaimDef& d : kClaims)
    if (id == d.id) return true;
  return false;
}

std::vector<ClaimReport> verify_claims(const Corpus& corpus,
                                       const std::vector<std::string>& ids) {
  for (const std::string& id : ids)
    if (!claim_known(id)) fail(Errc::unknown_claim, "unknown claim id: " + id);
  Harness h(corpus);
  std::vector<ClaimReport> out;
  for (const ClaimDef& d : kClaims) {
    if (std::find(ids.begin(), ids.end(), d.id) == ids.end()) continue;
    ClaimReport rep;
    rep.claim_id = d.id;
    Ctx cx{rep, corpus.params.counterexample_cap};
    auto t0 = std::chrono::steady_clock::now();
    d.fn(h, cx);
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    rep.vacuous = rep.instances_checked == 0;
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace finalg
