#include "finalg/types.hpp"

#include <algorithm>
#include <sstream>

namespace finalg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::empty_generators: return "EmptyGenerators";
    case Errc::missing_ideal: return "MissingIdeal";
    case Errc::improper_ideal: return "ImproperIdeal";
    case Errc::not_a_submodule: return "NotASubmodule";
    case Errc::action_undefined: return "ActionUndefined";
    case Errc::lattice_too_large: return "LatticeTooLarge";
    case Errc::not_multiplication_module: return "NotMultiplicationModule";
    case Errc::method_inapplicable: return "MethodInapplicable";
    case Errc::not_additive: return "NotAdditive";
    case Errc::not_linear: return "NotLinear";
    case Errc::image_not_submodule: return "ImageNotSubmodule";
    case Errc::empty_mult_set: return "EmptyMultSet";
    case Errc::not_disjoint: return "NotDisjoint";
    case Errc::not_proper: return "NotProper";
    case Errc::missing_mult_set: return "MissingMultSet";
    case Errc::not_weakly_s_primary: return "NotWeaklySPrimary";
    case Errc::fm_hypothesis_unmet: return "FmHypothesisUnmet";
    case Errc::not_homogeneous: return "NotHomogeneous";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::not_ring_hom: return "NotRingHom";
    case Errc::epimorphism_required: return "EpimorphismRequired";
    case Errc::empty_set: return "EmptySet";
    case Errc::unknown_claim: return "UnknownClaim";
    case Errc::parse_error: return "ParseError";
    case Errc::unresolved_reference: return "UnresolvedReference";
    case Errc::audit_failure: return "AuditFailure";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

IndexSet::IndexSet(Idx carrier_size, std::vector<Idx> members)
    : carrier_(carrier_size), members_(std::move(members)), mask_(carrier_size, 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Idx m : members_) {
    if (m >= carrier_) fail(Errc::invalid_spec, "index set member out of range");
    mask_[m] = 1;
  }
}

IndexSet IndexSet::empty_set(Idx carrier_size) { return IndexSet(carrier_size, {}); }

IndexSet IndexSet::full(Idx carrier_size) {
  std::vector<Idx> all(carrier_size);
  for (Idx i = 0; i < carrier_size; ++i) all[i] = i;
  return IndexSet(carrier_size, std::move(all));
}

IndexSet IndexSet::singleton(Idx carrier_size, Idx x) {
  return IndexSet(carrier_size, {x});
}

bool IndexSet::subset_of(const IndexSet& other) const {
  if (carrier_ != other.carrier_) fail(Errc::invalid_spec, "carrier mismatch");
  for (Idx m : members_)
    if (!other.contains(m)) return false;
  return true;
}

bool IndexSet::intersects(const IndexSet& other) const {
  if (carrier_ != other.carrier_) fail(Errc::invalid_spec, "carrier mismatch");
  const IndexSet& small = size() <= other.size() ? *this : other;
  const IndexSet& big = size() <= other.size() ? other : *this;
  for (Idx m : small.members_)
    if (big.contains(m)) return true;
  return false;
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  if (carrier_ != other.carrier_) fail(Errc::invalid_spec, "carrier mismatch");
  std::vector<Idx> out;
  for (Idx m : members_)
    if (other.contains(m)) out.push_back(m);
  return IndexSet(carrier_, std::move(out));
}

IndexSet IndexSet::unite(const IndexSet& other) const {
  if (carrier_ != other.carrier_) fail(Errc::invalid_spec, "carrier mismatch");
  std::vector<Idx> out = members_;
  for (Idx m : other.members_)
    if (!contains(m)) out.push_back(m);
  return IndexSet(carrier_, std::move(out));
}

bool IndexSet::operator==(const IndexSet& other) const {
  return carrier_ == other.carrier_ && members_ == other.members_;
}

bool IndexSet::operator<(const IndexSet& other) const {
  if (size() != other.size()) return size() < other.size();
  return members_ < other.members_;
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) os << ',';
    os << members_[i];
  }
  os << '}';
  return os.str();
}

std::string IndexSet::key() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) os << ',';
    os << members_[i];
  }
  return os.str();
}

}  // namespace finalg
