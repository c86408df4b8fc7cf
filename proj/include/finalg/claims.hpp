#pragma once

#include <string>
#include <vector>

#include "finalg/corpus.hpp"

namespace finalg {

struct Counterexample {
  std::string instance;  // where it happened
  std::string detail;    // what went wrong
};

struct ClaimReport {
  std::string claim_id;
  std::size_t instances_checked = 0;
  std::size_t instances_skipped = 0;  // hypothesis filter
  bool holds = true;                  // no counterexample found
  bool vacuous = false;               // nothing survived the hypothesis filter
  std::vector<Counterexample> counterexamples;  // capped per corpus params
  double elapsed_seconds = 0.0;
};

struct ClaimInfo {
  std::string id;
  std::string description;
};

const std::vector<ClaimInfo>& claim_registry();
bool claim_known(const std::string& id);

// Runs the named claims against the corpus; reports come back in registry
// order regardless of the order of `ids`. Throws UnknownClaim on a bad id.
std::vector<ClaimReport> verify_claims(const Corpus& corpus,
                                       const std::vector<std::string>& ids);

}  // namespace finalg
