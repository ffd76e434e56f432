#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "octalab/perm.hpp"

namespace octalab {

struct BudgetExceeded : Error {
  using Error::Error;
};

// Finite permutation group, fully enumerated by breadth-first closure of the
// generators. Element order is the deterministic BFS discovery order with
// elements()[0] the identity, so serialized groups reload identically.
class PermGroup {
 public:
  static constexpr uint64_t kDefaultBudget = 1000000;

  static PermGroup closure(std::shared_ptr<const Domain> domain, std::vector<Perm> generators,
                           uint64_t element_budget = kDefaultBudget);

  const Domain& domain() const { return *domain_; }
  std::shared_ptr<const Domain> domain_ptr() const { return domain_; }
  const std::vector<Perm>& generators() const { return gens_; }
  uint64_t order() const { return elems_.size(); }
  const Perm& element(size_t i) const { return elems_[i]; }
  const std::vector<Perm>& elements() const { return elems_.items(); }

  bool contains(const Perm& p) const { return elems_.contains(p); }
  // Index in enumeration order; error if absent.
  uint32_t index_of(const Perm& p) const;

  // Conjugacy class of g as element indices in BFS-orbit order.
  std::vector<uint32_t> conjugacy_class(const Perm& g) const;
  uint64_t centralizer_order(const Perm& g) const;

  // Elements x != id with x^2 = id whose centralizer order has the same
  // 2-adic valuation as the group order. Sorted by image array.
  std::vector<Perm> central_involutions() const;

  // Orbit size of the unordered set {x, y, xy} under conjugation.
  // Requires commuting involutions from this group.
  uint64_t triple_orbit_size(const Perm& x, const Perm& y) const;

  // 64-bit content hash of the generator list (degree + images).
  uint64_t generator_hash() const;

  void save(std::ostream& os) const;
  static PermGroup load(std::istream& is);

 private:
  PermGroup() = default;

  std::shared_ptr<const Domain> domain_;
  std::vector<Perm> gens_;
  PermSet elems_;
};

// {x, y, xy} as sorted element indices within a group enumeration.
using Triple = std::array<uint32_t, 3>;

Triple make_triple(const PermGroup& g, const Perm& x, const Perm& y);

// Partition of a set of triples into conjugation orbits; labels[i] is the
// orbit id of triples[i] and orbit_sizes[id] its size. Deterministic.
struct TripleOrbits {
  std::vector<Triple> triples;
  std::vector<uint32_t> label;
  std::vector<uint64_t> orbit_sizes;
};

TripleOrbits triple_orbits(const PermGroup& g, const std::vector<Triple>& triples);

// Isomorphism type of <x, y> for involutions x, y, by the order n of xy:
// n=1 -> C2, n=2 -> C2xC2, n=3 -> S3, n=4 -> D8, n=5 -> D10, else D<2n>.
std::string dihedral_type(const Perm& x, const Perm& y);

uint64_t generator_list_hash(const std::vector<Perm>& gens);

}  // namespace octalab
