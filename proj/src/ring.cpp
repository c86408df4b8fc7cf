#include "finalg/ring.hpp"

#include <algorithm>
#include <set>

namespace finalg {

namespace {

void audit_ring(const std::string& id, Idx n, const std::vector<Idx>& add,
                const std::vector<Idx>& mul, Idx zero, Idx one) {
  auto at = [n](const std::vector<Idx>& t, Idx a, Idx b) {
    return t[std::size_t(a) * n + b];
  };
  if (n == 0) fail(Errc::invalid_spec, id + ": empty carrier");
  if (add.size() != std::size_t(n) * n || mul.size() != std::size_t(n) * n)
    fail(Errc::invalid_spec, id + ": table size mismatch");
  for (Idx v : add)
    if (v >= n) fail(Errc::invalid_spec, id + ": add entry out of range");
  for (Idx v : mul)
    if (v >= n) fail(Errc::invalid_spec, id + ": mul entry out of range");
  if (zero >= n || one >= n) fail(Errc::invalid_spec, id + ": bad constants");

  for (Idx a = 0; a < n; ++a) {
    if (at(add, a, zero) != a) fail(Errc::invalid_spec, id + ": zero not neutral");
    if (at(mul, a, one) != a) fail(Errc::invalid_spec, id + ": one not neutral");
  }
  for (Idx a = 0; a < n; ++a) {
    bool has_neg = false;
    for (Idx b = 0; b < n; ++b)
      if (at(add, a, b) == zero) { has_neg = true; break; }
    if (!has_neg) fail(Errc::invalid_spec, id + ": missing additive inverse");
  }
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b) {
      if (at(add, a, b) != at(add, b, a))
        fail(Errc::invalid_spec, id + ": addition not commutative");
      if (at(mul, a, b) != at(mul, b, a))
        fail(Errc::invalid_spec, id + ": multiplication not commutative");
    }
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      for (Idx c = 0; c < n; ++c) {
        if (at(add, at(add, a, b), c) != at(add, a, at(add, b, c)))
          fail(Errc::invalid_spec, id + ": addition not associative");
        if (at(mul, at(mul, a, b), c) != at(mul, a, at(mul, b, c)))
          fail(Errc::invalid_spec, id + ": multiplication not associative");
        if (at(mul, a, at(add, b, c)) != at(add, at(mul, a, b), at(mul, a, c)))
          fail(Errc::invalid_spec, id + ": distributivity fails");
      }
}

}  // namespace

std::shared_ptr<const FiniteRing> FiniteRing::from_tables(
    std::string id, Idx order, std::vector<Idx> add, std::vector<Idx> mul,
    Idx zero, Idx one, std::vector<std::string> labels, std::string provenance) {
  audit_ring(id, order, add, mul, zero, one);
  auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
  r->id_ = std::move(id);
  r->order_ = order;
  r->add_ = std::move(add);
  r->mul_ = std::move(mul);
  r->zero_ = zero;
  r->one_ = one;
  r->neg_.assign(order, 0);
  for (Idx a = 0; a < order; ++a)
    for (Idx b = 0; b < order; ++b)
      if (r->add(a, b) == zero) { r->neg_[a] = b; break; }
  r->unit_.assign(order, 0);
  for (Idx a = 0; a < order; ++a)
    for (Idx b = 0; b < order; ++b)
      if (r->mul(a, b) == one) { r->unit_[a] = 1; break; }
  if (labels.empty()) {
    labels.resize(order);
    for (Idx a = 0; a < order; ++a) labels[a] = std::to_string(a);
  }
  if (labels.size() != order)
    fail(Errc::invalid_spec, r->id_ + ": label count mismatch");
  r->labels_ = std::move(labels);
  r->provenance_ = std::move(provenance);
  return r;
}

Idx FiniteRing::pow(Idx a, unsigned e) const {
  Idx acc = one_;
  for (unsigned i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

RingPtr make_zn(Idx n) {
  if (n == 0) fail(Errc::invalid_spec, "Z0 is not finite");
  std::vector<Idx> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b) {
      add[std::size_t(a) * n + b] = Idx((a + b) % n);
      mul[std::size_t(a) * n + b] = Idx((std::size_t(a) * b) % n);
    }
  return FiniteRing::from_tables("Z" + std::to_string(n), n, std::move(add),
                                 std::move(mul), 0, n == 1 ? Idx(0) : Idx(1),
                                 {}, "integers mod " + std::to_string(n));
}

RingPtr make_ring_product(const RingPtr& a, const RingPtr& b) {
  Idx na = a->order(), nb = b->order();
  std::size_t n = std::size_t(na) * nb;
  if (n > 60000) fail(Errc::cap_exceeded, "product ring too large");
  std::vector<Idx> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (Idx x1 = 0; x1 < na; ++x1)
    for (Idx x2 = 0; x2 < nb; ++x2) {
      Idx x = pair_index(x1, x2, nb);
      labels[x] = "(" + a->label(x1) + "|" + b->label(x2) + ")";
      for (Idx y1 = 0; y1 < na; ++y1)
        for (Idx y2 = 0; y2 < nb; ++y2) {
          Idx y = pair_index(y1, y2, nb);
          add[std::size_t(x) * n + y] = pair_index(a->add(x1, y1), b->add(x2, y2), nb);
          mul[std::size_t(x) * n + y] = pair_index(a->mul(x1, y1), b->mul(x2, y2), nb);
        }
    }
  return FiniteRing::from_tables(
      a->id() + "x" + b->id(), Idx(n), std::move(add), std::move(mul),
      pair_index(a->zero(), b->zero(), nb), pair_index(a->one(), b->one(), nb),
      std::move(labels), "product of " + a->id() + " and " + b->id());
}

Ideal::Ideal(RingPtr r, IndexSet elems) : ring(std::move(r)), elements(std::move(elems)) {
  if (elements.carrier_size() != ring->order())
    fail(Errc::invalid_spec, "ideal carrier mismatch");
  if (!elements.contains(ring->zero()))
    fail(Errc::invalid_spec, "ideal misses zero");
  for (Idx a : elements.members())
    for (Idx b : elements.members())
      if (!elements.contains(ring->add(a, b)))
        fail(Errc::invalid_spec, "ideal not closed under addition");
  for (Idx a : elements.members())
    for (Idx r2 = 0; r2 < ring->order(); ++r2)
      if (!elements.contains(ring->mul(r2, a)))
        fail(Errc::invalid_spec, "ideal not closed under ring multiplication");
}

IndexSet ideal_span(const RingPtr& r, const std::vector<Idx>& gens) {
  Idx n = r->order();
  std::vector<std::uint8_t> in(n, 0);
  std::vector<Idx> queue;
  auto push = [&](Idx x) {
    if (!in[x]) { in[x] = 1; queue.push_back(x); }
  };
  push(r->zero());
  for (Idx g : gens) {
    if (g >= n) fail(Errc::invalid_spec, "generator out of range");
    for (Idx c = 0; c < n; ++c) push(r->mul(c, g));
  }
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) push(r->add(queue[i], queue[j]));
  std::vector<Idx> members;
  for (Idx x = 0; x < n; ++x)
    if (in[x]) members.push_back(x);
  return IndexSet(n, std::move(members));
}

Ideal principal_ideal(const RingPtr& r, Idx g) { return Ideal(r, ideal_span(r, {g})); }

Ideal zero_ideal(const RingPtr& r) {
  return Ideal(r, IndexSet::singleton(r->order(), r->zero()));
}

Ideal unit_ideal(const RingPtr& r) { return Ideal(r, IndexSet::full(r->order())); }

IndexSet radical_of_ideal(const RingPtr& r, const IndexSet& ideal) {
  Idx n = r->order();
  std::vector<Idx> members;
  for (Idx a = 0; a < n; ++a) {
    Idx p = a;
    for (Idx e = 1; e <= n; ++e) {
      if (ideal.contains(p)) { members.push_back(a); break; }
      p = r->mul(p, a);
    }
  }
  return IndexSet(n, std::move(members));
}

IndexSet ideal_residual(const RingPtr& r, const IndexSet& ideal, Idx a) {
  Idx n = r->order();
  std::vector<Idx> members;
  for (Idx x = 0; x < n; ++x)
    if (ideal.contains(r->mul(x, a))) members.push_back(x);
  return IndexSet(n, std::move(members));
}

IndexSet ideal_residual(const RingPtr& r, const IndexSet& ideal, const IndexSet& j) {
  Idx n = r->order();
  std::vector<Idx> members;
  for (Idx x = 0; x < n; ++x) {
    bool ok = true;
    for (Idx a : j.members())
      if (!ideal.contains(r->mul(x, a))) { ok = false; break; }
    if (ok) members.push_back(x);
  }
  return IndexSet(n, std::move(members));
}

IndexSet ideal_product(const RingPtr& r, const IndexSet& i, const IndexSet& j) {
  Idx n = r->order();
  std::vector<std::uint8_t> in(n, 0);
  std::vector<Idx> queue;
  auto push = [&](Idx x) {
    if (!in[x]) { in[x] = 1; queue.push_back(x); }
  };
  push(r->zero());
  for (Idx a : i.members())
    for (Idx b : j.members()) push(r->mul(a, b));
  for (std::size_t p = 0; p < queue.size(); ++p)
    for (std::size_t q = 0; q <= p; ++q) push(r->add(queue[p], queue[q]));
  std::vector<Idx> members;
  for (Idx x = 0; x < n; ++x)
    if (in[x]) members.push_back(x);
  return IndexSet(n, std::move(members));
}

std::vector<IndexSet> enumerate_ideals(const RingPtr& r, std::size_t cap) {
  Idx n = r->order();
  std::set<IndexSet> found;
  std::vector<IndexSet> work;
  for (Idx g = 0; g < n; ++g) {
    IndexSet p = ideal_span(r, {g});
    if (found.insert(p).second) work.push_back(p);
  }
  // Close under pairwise ideal sums.
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      IndexSet u = work[i].unite(work[j]);
      // Sum of ideals: additive closure of the union.
      std::vector<Idx> gens(u.members().begin(), u.members().end());
      IndexSet sum = ideal_span(r, gens);
      if (found.insert(sum).second) {
        work.push_back(sum);
        if (found.size() > cap)
          fail(Errc::lattice_too_large,
               r->id() + ": more than " + std::to_string(cap) + " ideals");
      }
    }
  }
  return std::vector<IndexSet>(found.begin(), found.end());
}

MultClosedSet::MultClosedSet(RingPtr r, IndexSet elems)
    : ring(std::move(r)), elements(std::move(elems)) {
  if (elements.carrier_size() != ring->order())
    fail(Errc::invalid_spec, "mult set carrier mismatch");
  if (elements.is_empty()) fail(Errc::empty_mult_set, "multiplicative set is empty");
  for (Idx a : elements.members())
    for (Idx b : elements.members())
      if (!elements.contains(ring->mul(a, b)))
        fail(Errc::invalid_spec, "set not closed under multiplication");
}

MultClosedSet mult_set_closure(const RingPtr& r, const std::vector<Idx>& gens) {
  if (gens.empty()) fail(Errc::empty_generators, "no generators for mult set");
  Idx n = r->order();
  std::vector<std::uint8_t> in(n, 0);
  std::vector<Idx> queue;
  auto push = [&](Idx x) {
    if (!in[x]) { in[x] = 1; queue.push_back(x); }
  };
  for (Idx g : gens) {
    if (g >= n) fail(Errc::invalid_spec, "generator out of range");
    push(g);
  }
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) push(r->mul(queue[i], queue[j]));
  std::vector<Idx> members;
  for (Idx x = 0; x < n; ++x)
    if (in[x]) members.push_back(x);
  return MultClosedSet(r, IndexSet(n, std::move(members)));
}

MultClosedSet saturate(const MultClosedSet& s) {
  const RingPtr& r = s.ring;
  Idx n = r->order();
  std::vector<Idx> members;
  for (Idx x = 0; x < n; ++x) {
    for (Idx y = 0; y < n; ++y)
      if (s.contains(r->mul(x, y))) { members.push_back(x); break; }
  }
  return MultClosedSet(r, IndexSet(n, std::move(members)));
}

IndexSet units(const RingPtr& r) {
  Idx n = r->order();
  std::vector<Idx> members;
  for (Idx a = 0; a < n; ++a)
    if (r->is_unit(a)) members.push_back(a);
  return IndexSet(n, std::move(members));
}

IndexSet zdiv_mod_ideal(const RingPtr& r, const IndexSet& ideal) {
  if (ideal.is_full()) fail(Errc::improper_ideal, "quotient by the unit ideal");
  Idx n = r->order();
  std::vector<Idx> members;
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      if (!ideal.contains(b) && ideal.contains(r->mul(a, b))) {
        members.push_back(a);
        break;
      }
    }
  }
  return IndexSet(n, std::move(members));
}

}  // namespace finalg
