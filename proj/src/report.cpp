#include "finalg/report.hpp"

#include <cstdio>
#include <sstream>

namespace finalg {

namespace {

using nlohmann::json;

template <typename Carrier>
std::string set_text(const Carrier& c, const IndexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Idx x : s.members()) {
    if (!first) out += ",";
    out += c.label(x);
    first = false;
  }
  return out + "}";
}

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

}  // namespace

std::string ring_set_text(const FiniteRing& r, const IndexSet& s) {
  return set_text(r, s);
}

std::string module_set_text(const FiniteModule& m, const IndexSet& s) {
  return set_text(m, s);
}

json claim_report_json(const ClaimReport& r) {
  json cxs = json::array();
  for (const Counterexample& c : r.counterexamples)
    cxs.push_back({{"instance", c.instance}, {"detail", c.detail}});
  return {{"claim", r.claim_id},
          {"holds", r.holds},
          {"vacuous", r.vacuous},
          {"instances_checked", r.instances_checked},
          {"instances_skipped", r.instances_skipped},
          {"counterexamples", std::move(cxs)},
          {"elapsed_seconds", r.elapsed_seconds}};
}

json fixture_record_json(const FixtureRecord& f) {
  json out = {{"fixture", f.id},
              {"description", f.description},
              {"candidates", f.candidates},
              {"rejected", f.rejected},
              {"chosen", f.chosen},
              {"substituted", f.substituted}};
  if (f.module) {
    const FiniteModule& m = *f.module;
    out["module"] = m.id();
    out["ring"] = m.ring()->id();
    out["n"] = module_set_text(m, f.n);
    if (!f.k.is_empty()) {
      // k lives in the module for submodule fixtures, in the ring otherwise.
      out["k"] = f.k.carrier_size() == m.order()
                     ? module_set_text(m, f.k)
                     : ring_set_text(*m.ring(), f.k);
    }
    if (f.s) out["s"] = ring_set_text(*f.s->ring, f.s->elements);
  }
  return out;
}

json verdict_json(const Submodule& n, const PredicateVerdict& v) {
  const FiniteModule& m = *n.module;
  const FiniteRing& r = *m.ring();
  json out = {{"kind", kind_name(v.kind)},
              {"holds", v.holds},
              {"disjointness_checked", v.disjointness_checked}};
  out["witness"] = v.witness ? json(r.label(*v.witness)) : json(nullptr);
  out["counterexample"] =
      v.counterexample ? json("a=" + r.label(v.counterexample->first) +
                              ", m=" + m.label(v.counterexample->second))
                       : json(nullptr);
  json defeats = json::array();
  for (const DefeatEntry& d : v.defeats)
    defeats.push_back({{"s", r.label(d.s)},
                       {"a", r.label(d.a)},
                       {"m", m.label(d.m)}});
  out["defeats"] = std::move(defeats);
  return out;
}

json make_run_report(const std::string& command, const std::string& fingerprint,
                     json items, const std::vector<ClaimReport>& claims) {
  json claim_arr = json::array();
  for (const ClaimReport& r : claims) claim_arr.push_back(claim_report_json(r));
  return {{"version", kReportVersion},
          {"params_fingerprint", fingerprint},
          {"results", {{"command", command}, {"items", std::move(items)}}},
          {"claims", std::move(claim_arr)}};
}

json strip_timings(json j) {
  if (j.is_object()) {
    j.erase("elapsed_seconds");
    for (auto& [k, v] : j.items()) v = strip_timings(std::move(v));
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timings(std::move(v));
  }
  return j;
}

std::string render_claims_human(const std::vector<ClaimReport>& claims) {
  std::ostringstream out;
  for (const ClaimReport& r : claims) {
    const char* state = r.vacuous ? "VACUOUS" : r.holds ? "ok" : "FAIL";
    char line[160];
    std::snprintf(line, sizeof line, "%-12s %-8s %8zu checked %8zu skipped  %s\n",
                  r.claim_id.c_str(), state, r.instances_checked,
                  r.instances_skipped, seconds_text(r.elapsed_seconds).c_str());
    out << line;
    for (const Counterexample& c : r.counterexamples)
      out << "    counterexample: " << c.instance << " :: " << c.detail << "\n";
  }
  return out.str();
}

std::string render_fixtures_human(const std::vector<FixtureRecord>& fixtures) {
  std::ostringstream out;
  for (const FixtureRecord& f : fixtures) {
    out << "fixture " << f.id << ": ";
    if (f.chosen < 0) {
      out << "no candidate validated";
    } else {
      out << f.candidates[std::size_t(f.chosen)];
      if (f.substituted)
        out << "  [substituted for: " << f.candidates.front() << "]";
    }
    out << "\n";
    for (const std::string& why : f.rejected) out << "    rejected: " << why << "\n";
  }
  return out.str();
}

}  // namespace finalg
