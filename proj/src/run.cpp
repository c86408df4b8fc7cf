#include "finalg/run.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "finalg/claims.hpp"
#include "finalg/predicates.hpp"
#include "finalg/report.hpp"

namespace finalg {

namespace {

using nlohmann::json;

[[noreturn]] void usage(const std::string& msg) {
  fail(Errc::parse_error, msg);
}

std::map<std::string, std::string> parse_tokens(
    const std::vector<std::string>& tokens,
    std::initializer_list<const char*> allowed) {
  std::map<std::string, std::string> out;
  for (const std::string& t : tokens) {
    std::size_t eq = t.find('=');
    if (eq == std::string::npos || eq == 0)
      usage("expected key=value, got '" + t + "'");
    std::string key = t.substr(0, eq), value = t.substr(eq + 1);
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) usage("unknown argument '" + key + "'");
    if (!out.emplace(key, value).second) usage("duplicate argument '" + key + "'");
  }
  return out;
}

const std::string* get(const std::map<std::string, std::string>& kv,
                       const char* key) {
  auto it = kv.find(key);
  return it == kv.end() ? nullptr : &it->second;
}

// Inline element lists are comma-separated numbers, e.g. "6" or "2,3".
std::optional<std::vector<Idx>> parse_gens(const std::string& text) {
  std::vector<Idx> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string part = text.substr(pos, comma - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    unsigned long v = std::stoul(part);
    if (v > 0xffff) return std::nullopt;
    out.push_back(Idx(v));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

ModulePtr resolve_module(const WorkbenchConfig& cfg, const std::string& name) {
  auto it = cfg.modules.find(name);
  if (it == cfg.modules.end())
    fail(Errc::unresolved_reference, "unknown module '" + name + "'");
  return it->second;
}

Submodule resolve_submodule(const WorkbenchConfig& cfg, const std::string& token,
                            const std::string* module_token) {
  if (auto it = cfg.submodules.find(token); it != cfg.submodules.end()) {
    if (module_token &&
        resolve_module(cfg, *module_token) != it->second.module)
      usage("submodule '" + token + "' is not over module '" + *module_token + "'");
    return it->second;
  }
  std::optional<std::vector<Idx>> gens = parse_gens(token);
  if (!gens)
    fail(Errc::unresolved_reference, "unknown submodule '" + token + "'");
  if (!module_token) usage("module= is required with inline generators");
  ModulePtr m = resolve_module(cfg, *module_token);
  for (Idx g : *gens)
    if (g >= m->order()) usage("generator out of range for '" + *module_token + "'");
  return Submodule(m, submodule_span(m, *gens));
}

MultClosedSet resolve_multset(const WorkbenchConfig& cfg, const std::string& token,
                              const RingPtr& ring) {
  if (auto it = cfg.multsets.find(token); it != cfg.multsets.end()) {
    if (it->second.ring != ring)
      usage("multset '" + token + "' is not over the module's ring");
    return it->second;
  }
  std::optional<std::vector<Idx>> gens = parse_gens(token);
  if (!gens)
    fail(Errc::unresolved_reference, "unknown multset '" + token + "'");
  for (Idx g : *gens)
    if (g >= ring->order()) usage("multset generator out of range");
  return mult_set_closure(ring, *gens);
}

std::string echo(const std::string& command,
                 const std::vector<std::string>& tokens) {
  std::string out = command;
  for (const std::string& t : tokens) out += " " + t;
  return out;
}

struct ItemText {
  json item = json::object();
  std::ostringstream human;

  void put(const char* key, const std::string& value) {
    item[key] = value;
    human << key << ": " << value << "\n";
  }
};

RunOutcome cmd_check(const std::map<std::string, std::string>& kv,
                     const WorkbenchConfig& cfg) {
  const std::string* kind_tok = get(kv, "kind");
  if (!kind_tok) usage("kind= is required");
  std::optional<PredicateKind> kind = kind_from_name(*kind_tok);
  if (!kind) usage("unknown kind '" + *kind_tok + "'");
  const std::string* sub_tok = get(kv, "submodule");
  if (!sub_tok) usage("submodule= is required");
  Submodule n = resolve_submodule(cfg, *sub_tok, get(kv, "module"));
  const FiniteModule& m = *n.module;
  const FiniteRing& r = *m.ring();

  std::optional<MultClosedSet> s;
  if (kind_uses_multset(*kind)) {
    const std::string* s_tok = get(kv, "multset");
    if (!s_tok) usage(std::string("kind '") + kind_name(*kind) + "' needs multset=");
    s = resolve_multset(cfg, *s_tok, m.ring());
  }

  ItemText it;
  it.put("kind", kind_name(*kind));
  it.put("module", get(kv, "module") ? *get(kv, "module") : m.id());
  it.item["module_id"] = m.id();
  it.item["ring"] = r.id();
  it.put("submodule", module_set_text(m, n.elements));
  if (s) it.put("multset", ring_set_text(r, s->elements));

  RunOutcome out;
  try {
    PredicateVerdict v = check(*kind, n, s ? &*s : nullptr);
    json vj = verdict_json(n, v);
    it.item.update(vj);
    it.human << "holds: " << (v.holds ? "yes" : "no") << "\n";
    if (v.witness) it.human << "witness: s=" << r.label(*v.witness) << "\n";
    if (v.counterexample)
      it.human << "counterexample: " << vj["counterexample"].get<std::string>()
               << "\n";
    for (const DefeatEntry& d : v.defeats)
      it.human << "defeated: s=" << r.label(d.s) << " by a=" << r.label(d.a)
               << ", m=" << m.label(d.m) << "\n";
    out.exit_code = v.holds ? 0 : 1;
  } catch (const Error& e) {
    if (e.code() != Errc::not_proper && e.code() != Errc::not_disjoint) throw;
    it.item["holds"] = false;
    it.item["reason"] = e.what();
    it.human << "holds: no\nreason: " << e.what() << "\n";
    out.exit_code = 1;
  }
  out.human = it.human.str();
  out.report = json::array({std::move(it.item)});
  return out;
}

RunOutcome cmd_witnesses(const std::map<std::string, std::string>& kv,
                         const WorkbenchConfig& cfg) {
  const std::string* sub_tok = get(kv, "submodule");
  if (!sub_tok) usage("submodule= is required");
  Submodule n = resolve_submodule(cfg, *sub_tok, get(kv, "module"));
  const FiniteModule& m = *n.module;
  const std::string* s_tok = get(kv, "multset");
  if (!s_tok) usage("multset= is required");
  MultClosedSet s = resolve_multset(cfg, *s_tok, m.ring());

  ItemText it;
  it.put("module", get(kv, "module") ? *get(kv, "module") : m.id());
  it.item["module_id"] = m.id();
  it.put("submodule", module_set_text(m, n.elements));
  it.put("multset", ring_set_text(*m.ring(), s.elements));

  RunOutcome out;
  json names = json::array();
  bool disjoint = true;
  try {
    IndexSet w = weakly_s_elements(n, s);
    for (Idx x : w.members()) names.push_back(m.ring()->label(x));
  } catch (const Error& e) {
    if (e.code() != Errc::not_disjoint) throw;
    disjoint = false;
    it.human << "disjoint: no (" << e.what() << ")\n";
  }
  it.item["disjoint"] = disjoint;
  it.item["witnesses"] = names;
  it.item["count"] = names.size();
  if (disjoint) {
    it.human << "witnesses:";
    for (const auto& x : names) it.human << " " << x.get<std::string>();
    if (names.empty()) it.human << " none";
    it.human << "\n";
  }
  out.exit_code = names.empty() ? 1 : 0;
  out.human = it.human.str();
  out.report = json::array({std::move(it.item)});
  return out;
}

RunOutcome cmd_enumerate(const std::map<std::string, std::string>& kv,
                         const WorkbenchConfig& cfg) {
  const std::string* mod_tok = get(kv, "module");
  if (!mod_tok) usage("module= is required");
  ModulePtr m = resolve_module(cfg, *mod_tok);
  std::vector<IndexSet> lattice = enumerate_submodules(m, cfg.params.lattice_cap);

  ItemText it;
  it.put("module", *mod_tok);
  it.item["module_id"] = m->id();
  json subs = json::array();
  it.human << "submodules: " << lattice.size() << "\n";
  for (const IndexSet& n : lattice) {
    std::string text = module_set_text(*m, n);
    subs.push_back(text);
    it.human << "  " << text << "\n";
  }
  it.item["count"] = lattice.size();
  it.item["submodules"] = std::move(subs);

  RunOutcome out;
  out.human = it.human.str();
  out.report = json::array({std::move(it.item)});
  return out;
}

RunOutcome cmd_describe(const std::map<std::string, std::string>& kv,
                        const WorkbenchConfig& cfg) {
  if (kv.size() != 1) usage("describe takes exactly one <kind>=<name> argument");
  const std::string& key = kv.begin()->first;
  const std::string& name = kv.begin()->second;
  ItemText it;

  if (key == "ring") {
    auto r = cfg.rings.find(name);
    if (r == cfg.rings.end())
      fail(Errc::unresolved_reference, "unknown ring '" + name + "'");
    const FiniteRing& ring = *r->second;
    it.put("ring", ring.id());
    it.item["order"] = ring.order();
    it.human << "order: " << ring.order() << "\n";
    it.put("units", ring_set_text(ring, units(r->second)));
    try {
      it.item["ideal_count"] = enumerate_ideals(r->second, cfg.params.lattice_cap).size();
      it.human << "ideal_count: " << it.item["ideal_count"] << "\n";
    } catch (const Error& e) {
      if (e.code() != Errc::lattice_too_large) throw;
    }
  } else if (key == "module") {
    ModulePtr m = resolve_module(cfg, name);
    it.put("module", m->id());
    it.item["ring"] = m->ring()->id();
    it.item["order"] = m->order();
    it.human << "ring: " << m->ring()->id() << "\norder: " << m->order() << "\n";
    try {
      std::vector<IndexSet> lattice = enumerate_submodules(m, cfg.params.lattice_cap);
      ModuleProperties props = module_properties(m, lattice);
      it.item["submodule_count"] = lattice.size();
      it.item["faithful"] = props.faithful;
      it.item["multiplication"] = props.multiplication;
      it.human << "submodule_count: " << lattice.size() << "\n"
               << "faithful: " << (props.faithful ? "yes" : "no") << "\n"
               << "multiplication: " << (props.multiplication ? "yes" : "no") << "\n";
      it.put("zero_divisors", ring_set_text(*m->ring(), props.zdivisors));
    } catch (const Error& e) {
      if (e.code() != Errc::lattice_too_large) throw;
    }
  } else if (key == "submodule") {
    auto n = cfg.submodules.find(name);
    if (n == cfg.submodules.end())
      fail(Errc::unresolved_reference, "unknown submodule '" + name + "'");
    const Submodule& sub = n->second;
    const FiniteModule& m = *sub.module;
    it.put("module", m.id());
    it.put("elements", module_set_text(m, sub.elements));
    it.item["proper"] = sub.proper();
    it.human << "proper: " << (sub.proper() ? "yes" : "no") << "\n";
    IndexSet res = residual_in_ring(sub.module, sub.elements);
    it.put("residual", ring_set_text(*m.ring(), res));
    it.put("residual_radical",
           ring_set_text(*m.ring(), radical_of_ideal(m.ring(), res)));
    it.item["prime"] = is_prime_submodule(sub.module, sub.elements);
    it.human << "prime: " << (it.item["prime"].get<bool>() ? "yes" : "no") << "\n";
  } else if (key == "multset") {
    auto s = cfg.multsets.find(name);
    if (s == cfg.multsets.end())
      fail(Errc::unresolved_reference, "unknown multset '" + name + "'");
    const MultClosedSet& set = s->second;
    it.put("ring", set.ring->id());
    it.put("elements", ring_set_text(*set.ring, set.elements));
    it.item["contains_zero"] = set.contains(set.ring->zero());
    it.human << "contains_zero: "
             << (set.contains(set.ring->zero()) ? "yes" : "no") << "\n";
    it.put("saturation", ring_set_text(*set.ring, saturate(set).elements));
  } else if (key == "hom") {
    if (auto f = cfg.ring_homs.find(name); f != cfg.ring_homs.end()) {
      it.put("kind", "ring");
      it.put("from", f->second.source()->id());
      it.put("to", f->second.target()->id());
      it.item["surjective"] = f->second.surjective();
      it.human << "surjective: " << (f->second.surjective() ? "yes" : "no") << "\n";
    } else if (auto h = cfg.module_homs.find(name); h != cfg.module_homs.end()) {
      it.put("kind", "module");
      it.put("from", h->second.source()->id());
      it.put("to", h->second.target()->id());
      it.item["injective"] = h->second.injective();
      it.item["surjective"] = h->second.surjective();
      it.human << "injective: " << (h->second.injective() ? "yes" : "no") << "\n"
               << "surjective: " << (h->second.surjective() ? "yes" : "no") << "\n";
      it.put("kernel", module_set_text(*h->second.source(), h->second.kernel()));
    } else {
      fail(Errc::unresolved_reference, "unknown hom '" + name + "'");
    }
  } else if (key == "amalgamation") {
    auto a = cfg.amalgamations.find(name);
    if (a == cfg.amalgamations.end())
      fail(Errc::unresolved_reference, "unknown amalgamation '" + name + "'");
    const AmalgContext& ctx = a->second;
    it.put("ring1", ctx.ring1->id());
    it.put("ring2", ctx.ring2->id());
    it.put("module1", ctx.module1->id());
    it.put("module2", ctx.module2->id());
    it.put("ideal", ring_set_text(*ctx.ring2, ctx.j_ideal));
    it.item["amalg_ring_order"] = ctx.amalg_ring->order();
    it.item["amalg_module_order"] = ctx.amalg_module->order();
    it.item["f_epi"] = ctx.f_epi;
    it.item["phi_epi"] = ctx.phi_epi;
    it.item["duplication"] = ctx.is_duplication;
    it.human << "amalg_ring_order: " << ctx.amalg_ring->order() << "\n"
             << "amalg_module_order: " << ctx.amalg_module->order() << "\n"
             << "f_epi: " << (ctx.f_epi ? "yes" : "no") << "\n"
             << "phi_epi: " << (ctx.phi_epi ? "yes" : "no") << "\n"
             << "duplication: " << (ctx.is_duplication ? "yes" : "no") << "\n";
  } else {
    usage("unknown describe target '" + key + "'");
  }

  RunOutcome out;
  out.human = it.human.str();
  out.report = json::array({std::move(it.item)});
  return out;
}

struct VerifyOut {
  int exit_code = 0;
  std::string human;
  json items;
  std::vector<ClaimReport> reports;
};

VerifyOut cmd_verify(const std::map<std::string, std::string>& kv,
                     const WorkbenchConfig& cfg, const RunOptions& opts,
                     std::string* fingerprint) {
  std::string selection = opts.claims;
  if (const std::string* t = get(kv, "claims")) selection = *t;
  if (selection.empty()) selection = "all";

  std::vector<std::string> ids;
  if (selection == "all") {
    for (const ClaimInfo& info : claim_registry()) ids.push_back(info.id);
  } else {
    std::size_t pos = 0;
    while (pos <= selection.size()) {
      std::size_t comma = selection.find(',', pos);
      std::string id = selection.substr(pos, comma - pos);
      if (!id.empty()) ids.push_back(id);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (ids.empty()) usage("claims= must name at least one claim");
  }

  CorpusParams params = cfg.params;
  if (opts.max_ring_order) params.max_ring_order = opts.max_ring_order;
  *fingerprint = params_fingerprint(params);

  Corpus corpus = build_corpus(params);
  std::vector<ClaimReport> reports = verify_claims(corpus, ids);

  json items = json::array();
  for (const FixtureRecord& f : corpus.fixtures)
    items.push_back(fixture_record_json(f));

  std::size_t failed = 0, vacuous = 0;
  for (const ClaimReport& r : reports) {
    failed += !r.holds;
    vacuous += r.vacuous;
  }

  VerifyOut out;
  std::ostringstream text;
  text << render_fixtures_human(corpus.fixtures) << "\n"
       << render_claims_human(reports);
  text << "claims: " << reports.size() - failed - vacuous << " ok, " << failed
       << " failed, " << vacuous << " vacuous\n";
  out.human = text.str();
  out.exit_code = failed ? 1 : 0;
  out.items = std::move(items);
  out.reports = std::move(reports);
  return out;
}

}  // namespace

RunOutcome run_command(const std::string& command,
                       const std::vector<std::string>& tokens,
                       const WorkbenchConfig& cfg, const RunOptions& opts) {
  std::string cmd_echo = echo(command, tokens);
  std::string fingerprint = params_fingerprint(cfg.params);
  try {
    RunOutcome out;
    if (command == "check") {
      out = cmd_check(parse_tokens(tokens, {"kind", "module", "submodule", "multset"}),
                      cfg);
    } else if (command == "witnesses") {
      out = cmd_witnesses(parse_tokens(tokens, {"module", "submodule", "multset"}),
                          cfg);
    } else if (command == "enumerate") {
      out = cmd_enumerate(parse_tokens(tokens, {"module"}), cfg);
    } else if (command == "describe") {
      out = cmd_describe(
          parse_tokens(tokens, {"ring", "module", "submodule", "multset", "hom",
                                "amalgamation"}),
          cfg);
    } else if (command == "verify") {
      VerifyOut v = cmd_verify(parse_tokens(tokens, {"claims"}), cfg, opts,
                               &fingerprint);
      RunOutcome out2;
      out2.exit_code = v.exit_code;
      out2.human = std::move(v.human);
      out2.report =
          make_run_report(cmd_echo, fingerprint, std::move(v.items), v.reports);
      return out2;
    } else {
      usage("unknown command '" + command + "'");
    }
    out.report = make_run_report(cmd_echo, fingerprint, std::move(out.report), {});
    return out;
  } catch (const Error& e) {
    RunOutcome out;
    out.exit_code = 2;
    out.human = std::string("error: ") + e.what() + "\n";
    out.report = make_run_report(cmd_echo, fingerprint,
                                 json::array({json{{"error", e.what()}}}), {});
    return out;
  }
}

}  // namespace finalg
