#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace finalg {

// Element index inside a fixed carrier. Carriers are capped well below 2^16.
using Idx = std::uint16_t;

enum class Errc {
  invalid_spec,
  empty_generators,
  missing_ideal,
  improper_ideal,
  not_a_submodule,
  action_undefined,
  lattice_too_large,
  not_multiplication_module,
  method_inapplicable,
  not_additive,
  not_linear,
  image_not_submodule,
  empty_mult_set,
  not_disjoint,
  not_proper,
  missing_mult_set,
  not_weakly_s_primary,
  fm_hypothesis_unmet,
  not_homogeneous,
  cap_exceeded,
  not_ring_hom,
  epimorphism_required,
  empty_set,
  unknown_claim,
  parse_error,
  unresolved_reference,
  audit_failure,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

// Sorted subset of {0, ..., carrier_size-1} with O(1) membership.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(Idx carrier_size, std::vector<Idx> members);

  static IndexSet empty_set(Idx carrier_size);
  static IndexSet full(Idx carrier_size);
  static IndexSet singleton(Idx carrier_size, Idx x);

  bool contains(Idx i) const { return mask_[i] != 0; }
  const std::vector<Idx>& members() const { return members_; }
  Idx carrier_size() const { return carrier_; }
  std::size_t size() const { return members_.size(); }
  bool is_empty() const { return members_.empty(); }
  bool is_full() const { return members_.size() == carrier_; }

  bool subset_of(const IndexSet& other) const;
  bool intersects(const IndexSet& other) const;
  IndexSet intersect(const IndexSet& other) const;
  IndexSet unite(const IndexSet& other) const;

  bool operator==(const IndexSet& other) const;
  bool operator!=(const IndexSet& other) const { return !(*this == other); }
  // Canonical order: by size, then lexicographic on members.
  bool operator<(const IndexSet& other) const;

  std::string to_string() const;
  std::string key() const;  // compact stable key for caching

 private:
  Idx carrier_ = 0;
  std::vector<Idx> members_;
  std::vector<std::uint8_t> mask_;
};

}  // namespace finalg
