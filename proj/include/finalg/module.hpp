#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finalg/ring.hpp"
#include "finalg/types.hpp"

namespace finalg {

// Finite module over a finite commutative ring, via explicit tables.
class FiniteModule {
 public:
  static std::shared_ptr<const FiniteModule> from_tables(
      std::string id, RingPtr ring, Idx order, std::vector<Idx> add,
      std::vector<Idx> act, Idx zero, std::vector<std::string> labels = {},
      std::string provenance = "");

  const RingPtr& ring() const { return ring_; }
  Idx order() const { return order_; }
  Idx add(Idx m, Idx n) const { return add_[std::size_t(m) * order_ + n]; }
  Idx act(Idx r, Idx m) const { return act_[std::size_t(r) * order_ + m]; }
  Idx neg(Idx m) const { return neg_[m]; }
  Idx sub(Idx m, Idx n) const { return add(m, neg_[n]); }
  Idx zero() const { return zero_; }
  const std::string& id() const { return id_; }
  const std::string& label(Idx m) const { return labels_[m]; }
  const std::string& provenance() const { return provenance_; }

 private:
  FiniteModule() = default;

  std::string id_;
  RingPtr ring_;
  Idx order_ = 0;
  std::vector<Idx> add_, act_, neg_;
  Idx zero_ = 0;
  std::vector<std::string> labels_;
  std::string provenance_;
};

using ModulePtr = std::shared_ptr<const FiniteModule>;

struct Submodule {
  ModulePtr module;
  IndexSet elements;

  Submodule(ModulePtr m, IndexSet elems);  // audits the submodule axioms
  bool contains(Idx m) const { return elements.contains(m); }
  bool proper() const { return !elements.is_full(); }
};

// Module morphism between modules over possibly different rings; `bridge`
// maps scalars of the source ring to the target ring (identity when absent).
class ModuleHom {
 public:
  ModuleHom(ModulePtr source, ModulePtr target, std::vector<Idx> map,
            std::optional<std::vector<Idx>> bridge = std::nullopt);

  const ModulePtr& source() const { return source_; }
  const ModulePtr& target() const { return target_; }
  Idx map(Idx m) const { return map_[m]; }
  Idx map_scalar(Idx r) const { return bridge_ ? (*bridge_)[r] : r; }
  bool has_bridge() const { return bridge_.has_value(); }
  bool injective() const;
  bool surjective() const;
  IndexSet kernel() const;

 private:
  ModulePtr source_, target_;
  std::vector<Idx> map_;
  std::optional<std::vector<Idx>> bridge_;
};

// Ring morphism as explicit value table; audited on construction.
class RingHom {
 public:
  RingHom(RingPtr source, RingPtr target, std::vector<Idx> map);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  Idx map(Idx r) const { return map_[r]; }
  const std::vector<Idx>& table() const { return map_; }
  bool surjective() const;

 private:
  RingPtr source_, target_;
  std::vector<Idx> map_;
};

ModulePtr make_regular(const RingPtr& r);
ModulePtr make_zero_module(const RingPtr& r);
// Z_m as a module over Z_n (requires m | n); `zn` must be a make_zn ring.
ModulePtr make_reduction(const RingPtr& zn, Idx m);
ModulePtr make_direct_sum(const ModulePtr& a, const ModulePtr& b);
// Module over the product ring, componentwise.
ModulePtr make_module_product(const ModulePtr& a, const ModulePtr& b,
                              const RingPtr& product_ring);

struct QuotientModule {
  ModulePtr module;           // M / N
  ModuleHom projection;       // M -> M/N
  std::vector<Idx> rep;       // class -> least representative in M
  std::vector<Idx> class_of;  // element of M -> class
};
QuotientModule make_quotient_module(const ModulePtr& m, const Submodule& n);

struct SubmoduleModule {
  ModulePtr module;        // N as a module in its own right
  ModuleHom inclusion;     // N -> M
  std::vector<Idx> to_sub; // element of M -> index in N (order() if absent)
};
SubmoduleModule make_submodule_module(const ModulePtr& m, const Submodule& n);

IndexSet submodule_span(const ModulePtr& m, const std::vector<Idx>& gens);
Submodule zero_submodule(const ModulePtr& m);
Submodule whole_submodule(const ModulePtr& m);

// All submodules, canonically sorted; LatticeTooLarge past the cap.
std::vector<IndexSet> enumerate_submodules(const ModulePtr& m,
                                           std::size_t cap = 1u << 20);

// (N :_R M') for a subset M' of M, and (N :_R m), and annihilator (0 :_R M).
IndexSet residual_in_ring(const ModulePtr& m, const IndexSet& n);
IndexSet residual_in_ring(const ModulePtr& m, const IndexSet& n, const IndexSet& sub);
IndexSet residual_by_element(const ModulePtr& m, const IndexSet& n, Idx elem);
IndexSet annihilator(const ModulePtr& m);
// (N :_M A) = {m : A m subset N} for a set A of ring elements.
IndexSet residual_in_module(const ModulePtr& m, const IndexSet& n, const IndexSet& a);

struct ModuleProperties {
  bool faithful = false;
  bool multiplication = false;
  IndexSet zdivisors;  // ring elements killing some nonzero module element
};
ModuleProperties module_properties(const ModulePtr& m,
                                   const std::vector<IndexSet>& lattice);

// IM = additive closure of {a m : a in I, m in M}.
IndexSet ideal_action(const ModulePtr& m, const IndexSet& ideal);
// Product N K = (N:M)(K:M)M; both factors must be presentable as (X:M)M.
IndexSet submodule_product(const ModulePtr& m, const IndexSet& n, const IndexSet& k,
                           const ModuleProperties* props = nullptr);

enum class RadicalMethod { definition, mult_formula, auto_pick };
// M-radical of N: intersection of prime submodules containing N (M if none),
// or via sqrt((N:M))M on multiplication modules.
IndexSet m_radical(const ModulePtr& m, const IndexSet& n, RadicalMethod method,
                   const std::vector<IndexSet>* lattice = nullptr,
                   const ModuleProperties* props = nullptr);

bool is_prime_submodule(const ModulePtr& m, const IndexSet& n);

ModuleHom identity_hom(const ModulePtr& m);

enum class TransportDir { image, preimage };
IndexSet hom_transport(const ModuleHom& h, const IndexSet& n, TransportDir dir);

}  // namespace finalg
