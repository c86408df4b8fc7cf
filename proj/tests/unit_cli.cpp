#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>

#include "finalg/config.hpp"
#include "finalg/report.hpp"
#include "finalg/run.hpp"

using namespace finalg;
using nlohmann::json;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::invalid_spec;  // sentinel: nothing thrown
}

const WorkbenchConfig& bench() {
  static const WorkbenchConfig cfg = default_workbench();
  return cfg;
}

const json& first_item(const RunOutcome& out) {
  return out.report["results"]["items"][0];
}

}  // namespace

TEST_CASE("config: multset closure resolves from generators") {
  WorkbenchConfig cfg = parse_config_text(
      R"({"rings": {"R": {"zn": 36}},
          "multsets": {"S": {"ring": "R", "gens": [3]}}})");
  REQUIRE(cfg.multsets.count("S") == 1);
  const MultClosedSet& s = cfg.multsets.at("S");
  CHECK(s.elements.members() == std::vector<Idx>{3, 9, 27});
  CHECK(s.ring == cfg.rings.at("R"));
}

TEST_CASE("config: empty input yields an empty workbench") {
  for (const char* text : {"", "   \n\t", "{}", "null"}) {
    WorkbenchConfig cfg = parse_config_text(text);
    CHECK(cfg.rings.empty());
    CHECK(cfg.modules.empty());
    CHECK(cfg.params.lattice_cap == CorpusParams{}.lattice_cap);
  }
}

TEST_CASE("config: reference and parse failures carry the right codes") {
  auto parses = [](const char* text) {
    return [text] { parse_config_text(text); };
  };
  CHECK(code_of(parses(R"({"multsets": {"S": {"ring": "Q", "gens": [2]}}})")) ==
        Errc::unresolved_reference);
  CHECK(code_of(parses(R"({"modules": {"M": {"regular": "Q"}}})")) ==
        Errc::unresolved_reference);
  CHECK(code_of(parses(R"({"rings": {"A": {"product": ["A", "A"]}}})")) ==
        Errc::unresolved_reference);
  CHECK(code_of(parses("{nope")) == Errc::parse_error);
  CHECK(code_of(parses("[1,2]")) == Errc::parse_error);
  CHECK(code_of(parses(R"({"gadgets": {}})")) == Errc::parse_error);
  CHECK(code_of(parses(R"({"rings": {"R": {"zn": 0}}})")) == Errc::parse_error);
  CHECK(code_of(parses(R"({"rings": {"R": {"zn": 6, "product": []}}})")) ==
        Errc::parse_error);
  CHECK(code_of(parses(R"({"caps": {"lattice_size": 0}})")) == Errc::parse_error);
  CHECK(code_of(parses(R"({"rings": {"R": {"zn": 6}},
      "submodules": {"N": {"module": "R", "gens": [2]}}})")) ==
        Errc::unresolved_reference);
}

TEST_CASE("config: audits run eagerly and report AuditFailure") {
  auto parses = [](const char* text) {
    return [text] { parse_config_text(text); };
  };
  // {2,3} in Z12 is not multiplicatively closed when taken verbatim.
  CHECK(code_of(parses(R"({"rings": {"R": {"zn": 12}},
      "multsets": {"S": {"ring": "R", "elements": [2, 3]}}})")) ==
        Errc::audit_failure);
  // {0,1} is not an additive subgroup of Z12.
  CHECK(code_of(parses(R"({"rings": {"R": {"zn": 12}},
      "submodules": {"N": {"module": "M", "elements": [0, 1]}},
      "modules": {"M": {"regular": "R"}}})")) == Errc::audit_failure);
  // x -> 2x is additive on Z4 but not multiplicative with identity.
  CHECK(code_of(parses(R"({"rings": {"R": {"zn": 4}},
      "homs": {"f": {"kind": "ring", "from": "R", "to": "R",
                     "table": [0, 2, 0, 2]}}})")) == Errc::audit_failure);
  // Reduction needs the divisor relation.
  CHECK(code_of(parses(R"({"rings": {"R": {"zn": 10}},
      "modules": {"M": {"reduction": "R", "order": 4}}})")) ==
        Errc::audit_failure);
}

TEST_CASE("config: recipes assemble rings, modules, homs and duplications") {
  WorkbenchConfig cfg = parse_config_text(R"({
    "rings": {"R": {"zn": 12}, "R6": {"zn": 6}, "P": {"product": ["R6", "R6"]}},
    "modules": {"M": {"regular": "R"}, "M6": {"reduction": "R", "order": 6},
                "D": {"direct_sum": ["M6", "M6"]}, "Z": {"zero": "R"}},
    "submodules": {"N": {"module": "M", "gens": [6]},
                   "W": {"module": "M", "elements": [0, 4, 8]}},
    "multsets": {"S": {"ring": "R", "gens": [5]}},
    "homs": {"idr": {"kind": "ring", "from": "R", "to": "R", "recipe": "identity"},
             "red": {"kind": "ring", "from": "R", "to": "R6", "recipe": "reduction"},
             "mred": {"kind": "module", "from": "M", "to": "M6", "recipe": "reduction"}},
    "amalgamations": {"A": {"module": "M6", "ideal": [3]}},
    "caps": {"ring_order": 24, "lattice_size": 512}
  })");
  CHECK(cfg.rings.at("P")->order() == 36);
  CHECK(cfg.modules.at("M")->order() == 12);
  CHECK(cfg.modules.at("M6")->order() == 6);
  CHECK(cfg.modules.at("D")->order() == 36);
  CHECK(cfg.modules.at("Z")->order() == 1);
  CHECK(cfg.submodules.at("N").elements.size() == 2);
  CHECK(cfg.submodules.at("W").elements.size() == 3);
  CHECK(cfg.ring_homs.at("red").surjective());
  // The module reduction hom stays over the one ring R: no bridge.
  CHECK(!cfg.module_homs.at("mred").has_bridge());
  CHECK(cfg.module_homs.at("mred").surjective());
  const AmalgContext& a = cfg.amalgamations.at("A");
  CHECK(a.is_duplication);
  CHECK(a.amalg_module->order() == 12);
  CHECK(cfg.params.max_ring_order == 24);
  CHECK(cfg.params.lattice_cap == 512);
}

TEST_CASE("config: general amalgamation from named homs") {
  WorkbenchConfig cfg = parse_config_text(R"({
    "rings": {"R4": {"zn": 4}, "R2": {"zn": 2}},
    "modules": {"M4": {"regular": "R4"}, "M2": {"regular": "R2"}},
    "homs": {"f": {"kind": "ring", "from": "R4", "to": "R2", "recipe": "reduction"},
             "p": {"kind": "module", "from": "M4", "to": "M2", "recipe": "reduction"}},
    "amalgamations": {"A": {"ring1": "R4", "ring2": "R2", "f": "f",
                            "ideal": [1], "module1": "M4", "module2": "M2",
                            "phi": "p"}}
  })");
  const AmalgContext& a = cfg.amalgamations.at("A");
  CHECK(a.ring1->order() == 4);
  CHECK(a.ring2->order() == 2);
  CHECK(a.f_epi);
  CHECK(a.phi_epi);
  CHECK(!a.is_duplication);
}

TEST_CASE("default workbench exposes the z-rings with regular modules") {
  const WorkbenchConfig& cfg = bench();
  for (const char* name : {"z2", "z12", "z36", "z72", "z90"}) {
    REQUIRE(cfg.rings.count(name) == 1);
    REQUIRE(cfg.modules.count(name) == 1);
    CHECK(cfg.modules.at(name)->ring() == cfg.rings.at(name));
  }
  CHECK(cfg.rings.at("z36")->order() == 36);
}

TEST_CASE("run: check decides and exits by verdict") {
  RunOutcome ok = run_command(
      "check", {"kind=weakly-s-primary", "module=z36", "submodule=6", "multset=3"},
      bench());
  CHECK(ok.exit_code == 0);
  CHECK(first_item(ok)["holds"] == true);
  CHECK(first_item(ok)["witness"] == "3");
  CHECK(first_item(ok)["multset"] == "{3,9,27}");
  CHECK(ok.human.find("witness: s=3") != std::string::npos);

  RunOutcome bad = run_command(
      "check", {"kind=weakly-primary", "module=z12", "submodule=6"}, bench());
  CHECK(bad.exit_code == 1);
  CHECK(first_item(bad)["holds"] == false);
  CHECK(first_item(bad)["counterexample"] == "a=2, m=3");
  CHECK(bad.human.find("counterexample: a=2, m=3") != std::string::npos);
}

TEST_CASE("run: precondition failures read as a false verdict") {
  RunOutcome whole = run_command(
      "check", {"kind=prime", "module=z12", "submodule=1"}, bench());
  CHECK(whole.exit_code == 1);
  CHECK(first_item(whole)["holds"] == false);
  CHECK(first_item(whole).contains("reason"));

  // (N:M) = {0,6} meets closure{6} = {0,6}.
  RunOutcome meet = run_command(
      "check",
      {"kind=s-primary", "module=z12", "submodule=6", "multset=6"}, bench());
  CHECK(meet.exit_code == 1);
  CHECK(first_item(meet)["holds"] == false);
}

TEST_CASE("run: usage and reference problems exit 2") {
  const WorkbenchConfig& cfg = bench();
  CHECK(run_command("check", {"kind=nope", "module=z12", "submodule=6"}, cfg)
            .exit_code == 2);
  CHECK(run_command("check", {"kind=prime", "module=zzz", "submodule=6"}, cfg)
            .exit_code == 2);
  CHECK(run_command("check", {"kind=s-prime", "module=z12", "submodule=6"}, cfg)
            .exit_code == 2);
  CHECK(run_command("check", {"kind=prime", "module=z12", "submodule=6", "bogus=1"},
                    cfg).exit_code == 2);
  CHECK(run_command("check", {"kind=prime", "kind=primary", "module=z12",
                              "submodule=6"}, cfg).exit_code == 2);
  CHECK(run_command("check", {"notokens"}, cfg).exit_code == 2);
  CHECK(run_command("paint", {}, cfg).exit_code == 2);
  CHECK(run_command("enumerate", {}, cfg).exit_code == 2);
  CHECK(run_command("describe", {"ring=z12", "module=z12"}, cfg).exit_code == 2);
  CHECK(run_command("describe", {"gadget=z12"}, cfg).exit_code == 2);
  CHECK(run_command("verify", {"claims=NOPE"}, cfg).exit_code == 2);
  RunOutcome err = run_command("check", {"kind=prime", "module=zzz",
                                         "submodule=6"}, cfg);
  CHECK(first_item(err).contains("error"));
  CHECK(err.human.find("error:") != std::string::npos);
}

TEST_CASE("run: witnesses lists the validating elements") {
  RunOutcome out = run_command(
      "witnesses", {"module=z36", "submodule=6", "multset=3"}, bench());
  CHECK(out.exit_code == 0);
  CHECK(first_item(out)["witnesses"] == json::array({"3", "9", "27"}));
  CHECK(first_item(out)["disjoint"] == true);
  CHECK(out.human.find("witnesses: 3 9 27") != std::string::npos);

  RunOutcome none = run_command(
      "witnesses", {"module=z12", "submodule=6", "multset=6"}, bench());
  CHECK(none.exit_code == 1);
  CHECK(first_item(none)["disjoint"] == false);
  CHECK(first_item(none)["count"] == 0);
}

TEST_CASE("run: enumerate prints the lattice") {
  RunOutcome out = run_command("enumerate", {"module=z12"}, bench());
  CHECK(out.exit_code == 0);
  CHECK(first_item(out)["count"] == 6);
  CHECK(first_item(out)["submodules"][0] == "{0}");
  CHECK(out.human.find("{0,4,8}") != std::string::npos);
}

TEST_CASE("run: describe summarizes structures") {
  RunOutcome ring = run_command("describe", {"ring=z12"}, bench());
  CHECK(ring.exit_code == 0);
  CHECK(first_item(ring)["order"] == 12);
  CHECK(first_item(ring)["ideal_count"] == 6);

  RunOutcome mod = run_command("describe", {"module=z12"}, bench());
  CHECK(mod.exit_code == 0);
  CHECK(first_item(mod)["faithful"] == true);
  CHECK(first_item(mod)["multiplication"] == true);

  WorkbenchConfig cfg = parse_config_text(R"({
    "rings": {"R": {"zn": 12}},
    "modules": {"M": {"regular": "R"}},
    "submodules": {"N": {"module": "M", "gens": [6]}},
    "multsets": {"S": {"ring": "R", "gens": [5]}},
    "homs": {"f": {"kind": "ring", "from": "R", "to": "R", "recipe": "identity"}},
    "amalgamations": {"A": {"module": "M", "ideal": [6]}}
  })");
  CHECK(first_item(run_command("describe", {"submodule=N"}, cfg))["residual"] ==
        "{0,6}");
  CHECK(first_item(run_command("describe", {"multset=S"}, cfg))["elements"] ==
        "{1,5}");
  CHECK(first_item(run_command("describe", {"hom=f"}, cfg))["surjective"] == true);
  RunOutcome am = run_command("describe", {"amalgamation=A"}, cfg);
  CHECK(am.exit_code == 0);
  CHECK(first_item(am)["duplication"] == true);
}

TEST_CASE("run: named submodule resolves its module, inline needs one") {
  WorkbenchConfig cfg = parse_config_text(R"({
    "rings": {"R": {"zn": 12}},
    "modules": {"M": {"regular": "R"}},
    "submodules": {"N": {"module": "M", "gens": [6]}}
  })");
  RunOutcome named = run_command("check", {"kind=primary", "submodule=N"}, cfg);
  CHECK(named.exit_code == 1);  // (6) = (2)(3) is not primary in Z12
  CHECK(run_command("check", {"kind=primary", "submodule=6"}, cfg).exit_code == 2);
  CHECK(run_command("check", {"kind=primary", "submodule=N", "module=M"}, cfg)
            .exit_code == 1);
}

TEST_CASE("run: verify emits the pinned report shape") {
  RunOptions opts;
  opts.max_ring_order = 4;
  RunOutcome out = run_command("verify", {"claims=HIER,SAT"}, bench(), opts);
  CHECK(out.exit_code == 0);

  std::set<std::string> keys;
  for (const auto& [k, v] : out.report.items()) keys.insert(k);
  CHECK(keys == std::set<std::string>{"version", "params_fingerprint", "results",
                                      "claims"});
  CHECK(out.report["version"] == kReportVersion);
  CHECK(out.report["results"]["command"] == "verify claims=HIER,SAT");
  CHECK(out.report["claims"].size() == 2);
  CHECK(out.report["claims"][0]["claim"] == "HIER");
  CHECK(out.report["claims"][1]["claim"] == "SAT");
  for (const auto& c : out.report["claims"]) {
    CHECK(c["holds"] == true);
    CHECK(c.contains("elapsed_seconds"));
  }
  // Fixture records land under results, with the substitution flag.
  bool saw_fixture = false;
  for (const auto& item : out.report["results"]["items"]) {
    if (!item.contains("fixture")) continue;
    saw_fixture = true;
    CHECK(item.contains("substituted"));
    CHECK(item.contains("candidates"));
  }
  CHECK(saw_fixture);
  // The --claims option is the fallback selection.
  RunOptions flag = opts;
  flag.claims = "SAT";
  RunOutcome viaflag = run_command("verify", {}, bench(), flag);
  CHECK(viaflag.report["claims"].size() == 1);
  CHECK(viaflag.report["claims"][0]["claim"] == "SAT");
}

TEST_CASE("run: verify reports are deterministic modulo timings") {
  RunOptions opts;
  opts.max_ring_order = 4;
  RunOutcome a = run_command("verify", {"claims=HIER,E1-2,DUP"}, bench(), opts);
  RunOutcome b = run_command("verify", {"claims=HIER,E1-2,DUP"}, bench(), opts);
  CHECK(strip_timings(a.report) == strip_timings(b.report));
  CHECK(a.report["params_fingerprint"] == b.report["params_fingerprint"]);
}

TEST_CASE("strip_timings removes every elapsed field") {
  json j = {{"elapsed_seconds", 1.5},
            {"nested", {{"elapsed_seconds", 2.0}, {"keep", 1}}},
            {"arr", json::array({{{"elapsed_seconds", 3.0}}})}};
  json s = strip_timings(j);
  CHECK(!s.contains("elapsed_seconds"));
  CHECK(!s["nested"].contains("elapsed_seconds"));
  CHECK(!s["arr"][0].contains("elapsed_seconds"));
  CHECK(s["nested"]["keep"] == 1);
}
