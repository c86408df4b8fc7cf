#pragma once

#include <map>
#include <string>

#include "finalg/constructions.hpp"
#include "finalg/corpus.hpp"
#include "finalg/module.hpp"
#include "finalg/ring.hpp"

namespace finalg {

// Named instances assembled from a JSON recipe file. Everything is resolved
// and audited while parsing; lookups on a built workbench cannot fail.
//
// Recipe shapes:
//   rings:         "R": {"zn": 36} | {"product": ["A","B"]}
//   modules:       "M": {"regular": "R"} | {"reduction": "R", "order": 6}
//                       | {"direct_sum": ["M1","M2",...]} | {"zero": "R"}
//   submodules:    "N": {"module": "M", "gens": [6]}
//                       | {"module": "M", "elements": [...]}
//   multsets:      "S": {"ring": "R", "gens": [3]}          (closure taken)
//                       | {"ring": "R", "elements": [...]}  (audited as given)
//   homs:          "f": {"kind": "ring"|"module", "from": ..., "to": ...,
//                        "table": [...] | "recipe": "identity"|"reduction"}
//                       module homs accept "bridge": <ring hom name>|[table]
//   amalgamations: "A": {"ring1","ring2","f","ideal","module1","module2",
//                        "phi"[,"cap"]}   (f/phi: hom name or table)
//                  "D": {"module": "M", "ideal": [gens][, "cap"]}
//   caps:          ring_order / module_order / lattice_size, plus any
//                  corpus parameter by field name
struct WorkbenchConfig {
  CorpusParams params;
  std::map<std::string, RingPtr> rings;
  std::map<std::string, ModulePtr> modules;
  std::map<std::string, Submodule> submodules;
  std::map<std::string, MultClosedSet> multsets;
  std::map<std::string, RingHom> ring_homs;
  std::map<std::string, ModuleHom> module_homs;
  std::map<std::string, AmalgContext> amalgamations;
};

// Errors: ParseError (syntax or shape, position-annotated where available),
// UnresolvedReference (unknown or cyclic name), AuditFailure (a recipe built
// something the structural audits reject).
WorkbenchConfig parse_config(const std::string& path);
WorkbenchConfig parse_config_text(const std::string& text,
                                  const std::string& origin = "<config>");

// Workbench used when no config file is given: rings z2..z12 and the larger
// fixture moduli, each with its regular module under the same name.
WorkbenchConfig default_workbench();

}  // namespace finalg
