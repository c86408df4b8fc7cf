#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "finalg/claims.hpp"
#include "finalg/corpus.hpp"
#include "finalg/predicates.hpp"

namespace finalg {

inline constexpr const char* kReportVersion = "0.1.0";

// Element sets rendered through carrier labels, e.g. "{3,9,27}" or
// "{(0|0),(1|2)}" for pair carriers.
std::string ring_set_text(const FiniteRing& r, const IndexSet& s);
std::string module_set_text(const FiniteModule& m, const IndexSet& s);

nlohmann::json claim_report_json(const ClaimReport& r);
nlohmann::json fixture_record_json(const FixtureRecord& f);
nlohmann::json verdict_json(const Submodule& n, const PredicateVerdict& v);

// The machine-readable run report. Top-level keys are exactly
// version / params_fingerprint / results / claims; `items` is the per-item
// result array and `command` the echoed invocation.
nlohmann::json make_run_report(const std::string& command,
                               const std::string& fingerprint,
                               nlohmann::json items,
                               const std::vector<ClaimReport>& claims);

// Strips timing fields (recursively) so two runs compare byte for byte.
nlohmann::json strip_timings(nlohmann::json j);

std::string render_claims_human(const std::vector<ClaimReport>& claims);
std::string render_fixtures_human(const std::vector<FixtureRecord>& fixtures);

}  // namespace finalg
