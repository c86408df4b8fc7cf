#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finalg/types.hpp"

namespace finalg {

// Finite commutative ring with identity, given by explicit operation tables.
// Construction runs a full axiom audit; instances are immutable afterwards.
class FiniteRing {
 public:
  static std::shared_ptr<const FiniteRing> from_tables(
      std::string id, Idx order, std::vector<Idx> add, std::vector<Idx> mul,
      Idx zero, Idx one, std::vector<std::string> labels = {},
      std::string provenance = "");

  Idx order() const { return order_; }
  Idx add(Idx a, Idx b) const { return add_[std::size_t(a) * order_ + b]; }
  Idx mul(Idx a, Idx b) const { return mul_[std::size_t(a) * order_ + b]; }
  Idx neg(Idx a) const { return neg_[a]; }
  Idx sub(Idx a, Idx b) const { return add(a, neg_[b]); }
  Idx pow(Idx a, unsigned e) const;
  Idx zero() const { return zero_; }
  Idx one() const { return one_; }
  bool is_unit(Idx a) const { return unit_[a] != 0; }
  const std::string& id() const { return id_; }
  const std::string& label(Idx a) const { return labels_[a]; }
  const std::string& provenance() const { return provenance_; }

 private:
  FiniteRing() = default;

  std::string id_;
  Idx order_ = 0;
  std::vector<Idx> add_, mul_, neg_;
  std::vector<std::uint8_t> unit_;
  Idx zero_ = 0, one_ = 0;
  std::vector<std::string> labels_;
  std::string provenance_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

RingPtr make_zn(Idx n);
RingPtr make_ring_product(const RingPtr& a, const RingPtr& b);

// Encoding helpers for product rings built by make_ring_product.
inline Idx pair_index(Idx a, Idx b, Idx b_order) { return Idx(a * b_order + b); }
inline Idx pair_first(Idx p, Idx b_order) { return Idx(p / b_order); }
inline Idx pair_second(Idx p, Idx b_order) { return Idx(p % b_order); }

struct Ideal {
  RingPtr ring;
  IndexSet elements;

  Ideal(RingPtr r, IndexSet elems);  // audits the ideal axioms
  bool proper() const { return !elements.is_full(); }
  bool contains(Idx a) const { return elements.contains(a); }
};

IndexSet ideal_span(const RingPtr& r, const std::vector<Idx>& gens);
Ideal principal_ideal(const RingPtr& r, Idx g);
Ideal zero_ideal(const RingPtr& r);
Ideal unit_ideal(const RingPtr& r);

// Radical: elements with some power in the ideal.
IndexSet radical_of_ideal(const RingPtr& r, const IndexSet& ideal);

// (I : a) = {x : x*a in I} and (I : J) = {x : x*J subset I}.
IndexSet ideal_residual(const RingPtr& r, const IndexSet& ideal, Idx a);
IndexSet ideal_residual(const RingPtr& r, const IndexSet& ideal, const IndexSet& j);
IndexSet ideal_product(const RingPtr& r, const IndexSet& i, const IndexSet& j);

// All ideals of r, canonically sorted. Throws LatticeTooLarge past the cap.
std::vector<IndexSet> enumerate_ideals(const RingPtr& r, std::size_t cap = 1u << 20);

struct MultClosedSet {
  RingPtr ring;
  IndexSet elements;

  MultClosedSet(RingPtr r, IndexSet elems);  // audits closure and nonemptiness
  bool contains(Idx a) const { return elements.contains(a); }
};

MultClosedSet mult_set_closure(const RingPtr& r, const std::vector<Idx>& gens);
// Saturation: {x : x*y lies in S for some y}.
MultClosedSet saturate(const MultClosedSet& s);

IndexSet units(const RingPtr& r);
// Zero-divisors on R/I: {a : a*b in I for some b outside I}. I must be proper.
IndexSet zdiv_mod_ideal(const RingPtr& r, const IndexSet& ideal);

}  // namespace finalg
