#include "finalg/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace finalg {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  fail(Errc::parse_error, where + ": " + what);
}

[[noreturn]] void unresolved(const std::string& where, const std::string& what) {
  fail(Errc::unresolved_reference, where + ": " + what);
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) parse_fail(where, "unknown key '" + key + "'");
  }
}

const json& need(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, std::string("missing key '") + key + "'");
  return *it;
}

Idx to_idx(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xffff)
    parse_fail(where, "expected a small non-negative integer");
  return Idx(v.get<std::uint64_t>());
}

// limit == 0 means "no carrier bound".
std::vector<Idx> to_idx_list(const json& v, const std::string& where, Idx limit) {
  if (!v.is_array()) parse_fail(where, "expected an array of integers");
  std::vector<Idx> out;
  for (const json& e : v) {
    Idx x = to_idx(e, where);
    if (limit && x >= limit) parse_fail(where, "element index out of range");
    out.push_back(x);
  }
  return out;
}

std::string to_name(const json& v, const std::string& where) {
  if (!v.is_string() || v.get<std::string>().empty())
    parse_fail(where, "expected a non-empty name string");
  return v.get<std::string>();
}

std::vector<std::string> to_name_list(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() < 2)
    parse_fail(where, "expected an array of at least two names");
  std::vector<std::string> out;
  for (const json& e : v) out.push_back(to_name(e, where));
  return out;
}

// Resolves names recursively (rings and modules may reference their own
// section) with cycle detection; every construction audit failure is
// rethrown as AuditFailure annotated with the recipe that caused it.
struct Builder {
  const json& root;
  WorkbenchConfig cfg;
  std::set<std::string> ring_stack, module_stack;

  explicit Builder(const json& r) : root(r) {}

  template <typename Fn>
  auto audited(const std::string& where, Fn fn) -> decltype(fn()) {
    try {
      return fn();
    } catch (const Error& e) {
      if (e.code() == Errc::parse_error || e.code() == Errc::unresolved_reference)
        throw;
      fail(Errc::audit_failure, where + ": " + e.what());
    }
  }

  const json* section(const char* name) const {
    auto it = root.find(name);
    return it == root.end() ? nullptr : &*it;
  }

  const json& recipe(const char* sec, const char* label, const std::string& name,
                     const std::string& where) {
    const json* s = section(sec);
    if (s) {
      auto it = s->find(name);
      if (it != s->end()) {
        if (!it->is_object()) parse_fail(where, "recipe must be an object");
        return *it;
      }
    }
    unresolved(where, std::string("unknown ") + label + " '" + name + "'");
  }

  RingPtr ring(const std::string& name, const std::string& from) {
    if (auto it = cfg.rings.find(name); it != cfg.rings.end()) return it->second;
    std::string where = "ring '" + name + "'";
    if (!ring_stack.insert(name).second)
      unresolved(from, "cyclic ring definition '" + name + "'");
    const json& rcp = recipe("rings", "ring", name, from);
    RingPtr built;
    if (rcp.contains("zn")) {
      check_keys(rcp, {"zn"}, where);
      Idx n = to_idx(rcp["zn"], where);
      if (n == 0) parse_fail(where, "zn must be positive");
      built = audited(where, [&] { return make_zn(n); });
    } else if (rcp.contains("product")) {
      check_keys(rcp, {"product"}, where);
      std::vector<std::string> factors = to_name_list(rcp["product"], where);
      built = ring(factors[0], where);
      for (std::size_t i = 1; i < factors.size(); ++i) {
        RingPtr rhs = ring(factors[i], where);
        built = audited(where, [&] { return make_ring_product(built, rhs); });
      }
    } else {
      parse_fail(where, "expected 'zn' or 'product'");
    }
    ring_stack.erase(name);
    cfg.rings.emplace(name, built);
    return built;
  }

  ModulePtr module(const std::string& name, const std::string& from) {
    if (auto it = cfg.modules.find(name); it != cfg.modules.end())
      return it->second;
    std::string where = "module '" + name + "'";
    if (!module_stack.insert(name).second)
      unresolved(from, "cyclic module definition '" + name + "'");
    const json& rcp = recipe("modules", "module", name, from);
    ModulePtr built;
    if (rcp.contains("regular")) {
      check_keys(rcp, {"regular"}, where);
      RingPtr r = ring(to_name(rcp["regular"], where), where);
      built = audited(where, [&] { return make_regular(r); });
    } else if (rcp.contains("zero")) {
      check_keys(rcp, {"zero"}, where);
      RingPtr r = ring(to_name(rcp["zero"], where), where);
      built = audited(where, [&] { return make_zero_module(r); });
    } else if (rcp.contains("reduction")) {
      check_keys(rcp, {"reduction", "order"}, where);
      RingPtr r = ring(to_name(rcp["reduction"], where), where);
      Idx m = to_idx(need(rcp, "order", where), where);
      built = audited(where, [&] { return make_reduction(r, m); });
    } else if (rcp.contains("direct_sum")) {
      check_keys(rcp, {"direct_sum"}, where);
      std::vector<std::string> parts = to_name_list(rcp["direct_sum"], where);
      built = module(parts[0], where);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        ModulePtr rhs = module(parts[i], where);
        built = audited(where, [&] { return make_direct_sum(built, rhs); });
      }
    } else {
      parse_fail(where, "expected 'regular', 'zero', 'reduction' or 'direct_sum'");
    }
    module_stack.erase(name);
    cfg.modules.emplace(name, built);
    return built;
  }

  void build_rings() {
    const json* s = section("rings");
    if (!s) return;
    if (!s->is_object()) parse_fail("rings", "section must be an object");
    for (const auto& [name, rcp] : s->items()) ring(name, "rings");
  }

  void build_modules() {
    const json* s = section("modules");
    if (!s) return;
    if (!s->is_object()) parse_fail("modules", "section must be an object");
    for (const auto& [name, rcp] : s->items()) module(name, "modules");
  }

  void build_submodules() {
    const json* s = section("submodules");
    if (!s) return;
    if (!s->is_object()) parse_fail("submodules", "section must be an object");
    for (const auto& [name, rcp] : s->items()) {
      std::string where = "submodule '" + name + "'";
      if (!rcp.is_object()) parse_fail(where, "recipe must be an object");
      check_keys(rcp, {"module", "gens", "elements"}, where);
      ModulePtr m = module(to_name(need(rcp, "module", where), where), where);
      if (rcp.contains("gens") == rcp.contains("elements"))
        parse_fail(where, "expected exactly one of 'gens' or 'elements'");
      IndexSet elems =
          rcp.contains("gens")
              ? submodule_span(m, to_idx_list(rcp["gens"], where, m->order()))
              : IndexSet(m->order(),
                         to_idx_list(rcp["elements"], where, m->order()));
      cfg.submodules.emplace(
          name, audited(where, [&] { return Submodule(m, elems); }));
    }
  }

  void build_multsets() {
    const json* s = section("multsets");
    if (!s) return;
    if (!s->is_object()) parse_fail("multsets", "section must be an object");
    for (const auto& [name, rcp] : s->items()) {
      std::string where = "multset '" + name + "'";
      if (!rcp.is_object()) parse_fail(where, "recipe must be an object");
      check_keys(rcp, {"ring", "gens", "elements"}, where);
      RingPtr r = ring(to_name(need(rcp, "ring", where), where), where);
      if (rcp.contains("gens") == rcp.contains("elements"))
        parse_fail(where, "expected exactly one of 'gens' or 'elements'");
      if (rcp.contains("gens")) {
        std::vector<Idx> gens = to_idx_list(rcp["gens"], where, r->order());
        cfg.multsets.emplace(
            name, audited(where, [&] { return mult_set_closure(r, gens); }));
      } else {
        IndexSet elems(r->order(), to_idx_list(rcp["elements"], where, r->order()));
        cfg.multsets.emplace(
            name, audited(where, [&] { return MultClosedSet(r, elems); }));
      }
    }
  }

  std::vector<Idx> hom_table(const json& rcp, const std::string& where,
                             Idx domain, Idx codomain, const char* recipe_kind) {
    if (rcp.contains("table") == rcp.contains("recipe"))
      parse_fail(where, "expected exactly one of 'table' or 'recipe'");
    if (rcp.contains("table")) {
      std::vector<Idx> t = to_idx_list(rcp["table"], where, codomain);
      if (t.size() != domain) parse_fail(where, "table length must match the domain");
      return t;
    }
    std::string r = to_name(rcp["recipe"], where);
    std::vector<Idx> t(domain);
    if (r == "identity") {
      if (domain != codomain)
        parse_fail(where, "identity recipe needs matching carriers");
      for (Idx x = 0; x < domain; ++x) t[x] = x;
    } else if (r == "reduction") {
      for (Idx x = 0; x < domain; ++x) t[x] = Idx(x % codomain);
    } else {
      parse_fail(where, std::string("unknown ") + recipe_kind + " recipe '" + r + "'");
    }
    return t;
  }

  void build_homs() {
    const json* s = section("homs");
    if (!s) return;
    if (!s->is_object()) parse_fail("homs", "section must be an object");
    for (const auto& [name, rcp] : s->items()) {
      std::string where = "hom '" + name + "'";
      if (!rcp.is_object()) parse_fail(where, "recipe must be an object");
      std::string kind = to_name(need(rcp, "kind", where), where);
      if (kind == "ring") {
        check_keys(rcp, {"kind", "from", "to", "table", "recipe"}, where);
        RingPtr from = ring(to_name(need(rcp, "from", where), where), where);
        RingPtr to = ring(to_name(need(rcp, "to", where), where), where);
        std::vector<Idx> t =
            hom_table(rcp, where, from->order(), to->order(), "ring hom");
        cfg.ring_homs.emplace(
            name, audited(where, [&] { return RingHom(from, to, t); }));
      } else if (kind == "module") {
        check_keys(rcp, {"kind", "from", "to", "table", "recipe", "bridge"}, where);
        ModulePtr from = module(to_name(need(rcp, "from", where), where), where);
        ModulePtr to = module(to_name(need(rcp, "to", where), where), where);
        std::vector<Idx> t =
            hom_table(rcp, where, from->order(), to->order(), "module hom");
        std::optional<std::vector<Idx>> bridge;
        if (rcp.contains("bridge")) {
          const json& b = rcp["bridge"];
          if (b.is_string()) {
            auto it = cfg.ring_homs.find(b.get<std::string>());
            if (it == cfg.ring_homs.end())
              unresolved(where, "unknown hom '" + b.get<std::string>() + "'");
            if (it->second.source() != from->ring() ||
                it->second.target() != to->ring())
              fail(Errc::audit_failure,
                   where + ": bridge does not map the source ring to the target ring");
            bridge = it->second.table();
          } else {
            bridge = to_idx_list(b, where, to->ring()->order());
            if (bridge->size() != from->ring()->order())
              parse_fail(where, "bridge length must match the source ring");
          }
        } else if (from->ring() != to->ring() && rcp.contains("recipe") &&
                   rcp["recipe"] == "reduction") {
          // Unbridged reduction across Z-style rings: reduce the scalars too.
          std::vector<Idx> br(from->ring()->order());
          for (std::size_t x = 0; x < br.size(); ++x)
            br[x] = Idx(x % to->ring()->order());
          bridge = std::move(br);
        }
        cfg.module_homs.emplace(
            name, audited(where, [&] { return ModuleHom(from, to, t, bridge); }));
      } else {
        parse_fail(where, "hom kind must be 'ring' or 'module'");
      }
    }
  }

  std::vector<Idx> hom_ref(const json& v, const std::string& where,
                           const RingPtr& from, const RingPtr& to) {
    if (v.is_string()) {
      auto it = cfg.ring_homs.find(v.get<std::string>());
      if (it == cfg.ring_homs.end())
        unresolved(where, "unknown hom '" + v.get<std::string>() + "'");
      if (it->second.source() != from || it->second.target() != to)
        fail(Errc::audit_failure, where + ": hom endpoints do not match");
      return it->second.table();
    }
    std::vector<Idx> t = to_idx_list(v, where, to->order());
    if (t.size() != from->order())
      parse_fail(where, "table length must match the domain");
    return t;
  }

  std::vector<Idx> module_hom_ref(const json& v, const std::string& where,
                                  const ModulePtr& from, const ModulePtr& to) {
    if (v.is_string()) {
      auto it = cfg.module_homs.find(v.get<std::string>());
      if (it == cfg.module_homs.end())
        unresolved(where, "unknown hom '" + v.get<std::string>() + "'");
      if (it->second.source() != from || it->second.target() != to)
        fail(Errc::audit_failure, where + ": hom endpoints do not match");
      std::vector<Idx> t(from->order());
      for (Idx x = 0; x < from->order(); ++x) t[x] = it->second.map(x);
      return t;
    }
    std::vector<Idx> t = to_idx_list(v, where, to->order());
    if (t.size() != from->order())
      parse_fail(where, "table length must match the domain");
    return t;
  }

  void build_amalgamations() {
    const json* s = section("amalgamations");
    if (!s) return;
    if (!s->is_object()) parse_fail("amalgamations", "section must be an object");
    for (const auto& [name, rcp] : s->items()) {
      std::string where = "amalgamation '" + name + "'";
      if (!rcp.is_object()) parse_fail(where, "recipe must be an object");
      std::size_t cap = cfg.params.construction_cap;
      if (rcp.contains("cap")) cap = to_idx(rcp["cap"], where);
      if (rcp.contains("module")) {
        check_keys(rcp, {"module", "ideal", "cap"}, where);
        ModulePtr m = module(to_name(rcp["module"], where), where);
        std::vector<Idx> jgens = to_idx_list(need(rcp, "ideal", where), where,
                                             m->ring()->order());
        cfg.amalgamations.emplace(name, audited(where, [&] {
          return make_duplication(m, ideal_span(m->ring(), jgens), cap);
        }));
        continue;
      }
      check_keys(rcp,
                 {"ring1", "ring2", "f", "ideal", "module1", "module2", "phi",
                  "cap"},
                 where);
      RingPtr r1 = ring(to_name(need(rcp, "ring1", where), where), where);
      RingPtr r2 = ring(to_name(need(rcp, "ring2", where), where), where);
      ModulePtr m1 = module(to_name(need(rcp, "module1", where), where), where);
      ModulePtr m2 = module(to_name(need(rcp, "module2", where), where), where);
      if (m1->ring() != r1 || m2->ring() != r2)
        fail(Errc::audit_failure, where + ": modules are not over the named rings");
      std::vector<Idx> f = hom_ref(need(rcp, "f", where), where, r1, r2);
      std::vector<Idx> phi =
          module_hom_ref(need(rcp, "phi", where), where, m1, m2);
      std::vector<Idx> jgens =
          to_idx_list(need(rcp, "ideal", where), where, r2->order());
      cfg.amalgamations.emplace(name, audited(where, [&] {
        return make_amalgamation(r1, r2, f, ideal_span(r2, jgens), m1, m2, phi,
                                 cap);
      }));
    }
  }

  void build_caps() {
    const json* s = section("caps");
    if (!s) return;
    if (!s->is_object()) parse_fail("caps", "section must be an object");
    CorpusParams& p = cfg.params;
    for (const auto& [key, v] : s->items()) {
      std::string where = "caps '" + key + "'";
      if (key == "ring_orders" || key == "fixture_ring_orders") {
        std::vector<Idx> orders = to_idx_list(v, where, 0);
        (key == "ring_orders" ? p.ring_orders : p.fixture_ring_orders) = orders;
        continue;
      }
      std::size_t n = to_idx(v, where);
      if (n == 0) parse_fail(where, "cap must be positive");
      if (key == "ring_order" || key == "max_ring_order") p.max_ring_order = Idx(n);
      else if (key == "module_order" || key == "construction_cap") p.construction_cap = n;
      else if (key == "lattice_size" || key == "lattice_cap") p.lattice_cap = n;
      else if (key == "sum_ring_max") p.sum_ring_max = Idx(n);
      else if (key == "sum_order_cap") p.sum_order_cap = Idx(n);
      else if (key == "pair_multset_max_ring") p.pair_multset_max_ring = Idx(n);
      else if (key == "char_ring_cap") p.char_ring_cap = Idx(n);
      else if (key == "product_factor_cap") p.product_factor_cap = Idx(n);
      else if (key == "triple_factor_cap") p.triple_factor_cap = Idx(n);
      else if (key == "triple_target") p.triple_target = n;
      else if (key == "counterexample_cap") p.counterexample_cap = n;
      else parse_fail(where, "unknown cap");
    }
  }

  WorkbenchConfig build() {
    check_keys(root,
               {"caps", "rings", "modules", "submodules", "multsets", "homs",
                "amalgamations"},
               "config");
    build_caps();
    build_rings();
    build_modules();
    build_submodules();
    build_multsets();
    build_homs();
    build_amalgamations();
    return std::move(cfg);
  }
};

}  // namespace

WorkbenchConfig parse_config_text(const std::string& text,
                                  const std::string& origin) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    return WorkbenchConfig{};
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::parse_error, origin + ": " + e.what());
  }
  if (root.is_null()) return WorkbenchConfig{};
  if (!root.is_object())
    fail(Errc::parse_error, origin + ": top level must be an object");
  return Builder(root).build();
}

WorkbenchConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

WorkbenchConfig default_workbench() {
  WorkbenchConfig cfg;
  for (Idx n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 24, 30, 36, 72, 90}) {
    RingPtr r = make_zn(n);
    std::string name = "z" + std::to_string(n);
    cfg.rings.emplace(name, r);
    cfg.modules.emplace(name, make_regular(r));
  }
  return cfg;
}

}  // namespace finalg
