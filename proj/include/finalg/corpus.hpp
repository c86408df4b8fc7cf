#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finalg/constructions.hpp"
#include "finalg/module.hpp"
#include "finalg/ring.hpp"

namespace finalg {

// Instance-generation parameters. Reports, caches and fingerprints are pure
// functions of these values; two runs with equal params must agree byte for
// byte (timings aside).
struct CorpusParams {
  std::vector<Idx> ring_orders = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  std::vector<Idx> fixture_ring_orders = {16, 24, 36, 72, 90};
  Idx max_ring_order = 0;          // 0 = unlimited; otherwise larger rings are dropped
  Idx sum_ring_max = 12;           // direct sums generated over rings up to this order
  Idx sum_order_cap = 24;          // |A| * |B| bound for generated direct sums
  Idx pair_multset_max_ring = 24;  // pair-generated mult sets only up to this ring order
  Idx char_ring_cap = 36;          // equivalence-of-characterizations sweep bound
  Idx product_factor_cap = 8;      // two-factor product instances: factor order bound
  Idx triple_factor_cap = 4;       // three-factor product instances: factor order bound
  std::size_t triple_target = 120;     // three-factor sample size floor
  std::size_t construction_cap = 96;   // idealization / amalgamation carrier bound
  std::size_t lattice_cap = 4096;
  std::size_t counterexample_cap = 10;
};

std::string params_fingerprint(const CorpusParams& p);

struct MultSetData {
  MultClosedSet set;
  bool contains_zero = false;
};

struct ModuleData {
  ModulePtr module;
  std::vector<IndexSet> lattice;  // all submodules, canonical order; empty if !lattice_ok
  bool lattice_ok = true;
  ModuleProperties props;
};

struct RingData {
  RingPtr ring;
  std::vector<IndexSet> ideals;
  std::vector<MultSetData> multsets;
  std::vector<ModuleData> modules;  // modules.front() is the regular module
};

// A frozen finite stand-in for one of the infinite-coefficient examples.
// Candidates are tried in order; the first whose separation the naive oracle
// confirms is kept, and each earlier rejection is recorded with its reason.
// chosen == -1 means no candidate survived (e.g. under a ring cap).
struct FixtureRecord {
  std::string id;
  std::string description;
  std::vector<std::string> candidates;
  std::vector<std::string> rejected;  // reasons for the tried-and-failed prefix
  int chosen = -1;
  bool substituted = false;           // chosen a candidate other than the first
  ModulePtr module;                   // ambient module (meaning is fixture-specific)
  IndexSet n;                         // submodule of interest
  IndexSet k;                         // companion submodule / ideal, when used
  std::optional<MultClosedSet> s;     // mult set, when used
};

struct Corpus {
  CorpusParams params;
  std::vector<RingData> rings;  // sorted by ring order
  std::vector<Idealization> idealizations;
  std::vector<AmalgContext> amalgamations;  // duplications carry is_duplication
  std::vector<FixtureRecord> fixtures;

  const RingData* ring_by_order(Idx n) const;
  const ModuleData* find_module(const ModulePtr& m) const;
  const FixtureRecord* fixture(const std::string& id) const;
};

Corpus build_corpus(const CorpusParams& params = {});

}  // namespace finalg
