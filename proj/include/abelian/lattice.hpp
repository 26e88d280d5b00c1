#pragma once

// Subgroups of explicit groups: closure, full lattice enumeration, and the
// two independent routes to abstract isomorphism types (element-order
// statistics and Smith normal form).

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "abelian/concrete_group.hpp"
#include "abelian/group_type.hpp"

namespace abelian {

/// order -> number of elements (or subgroups) of that order.
using OrderProfile = std::map<std::int64_t, std::int64_t>;

class Subgroup {
 public:
  /// elements must be sorted, closed, and contain zero; the abstract type is
  /// derived from them. Prefer generated_subgroup() over calling this directly.
  Subgroup(ConcreteGroup parent, std::vector<ElementIndex> elements,
           std::vector<ElementIndex> generators);

  const ConcreteGroup& parent() const { return parent_; }
  /// Sorted ascending (= lexicographic on tuples).
  const std::vector<ElementIndex>& elements() const { return elements_; }
  const std::vector<ElementIndex>& generators() const { return generators_; }
  std::vector<Element> element_tuples() const;
  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  bool contains(ElementIndex e) const;
  const GroupType& abstract_type() const { return type_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }
  /// (order, element list) ordering used for deterministic lattice output.
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  ConcreteGroup parent_;
  std::vector<ElementIndex> elements_;
  std::vector<ElementIndex> generators_;
  GroupType type_;
};

// Lattice enumeration refuses groups above this order (default 512).
std::int64_t lattice_bound();
void set_lattice_bound(std::int64_t bound);

/// Restores the previous lattice bound on scope exit.
class ScopedLatticeBound {
 public:
  explicit ScopedLatticeBound(std::int64_t bound) : previous_(lattice_bound()) {
    set_lattice_bound(bound);
  }
  ~ScopedLatticeBound() { set_lattice_bound(previous_); }
  ScopedLatticeBound(const ScopedLatticeBound&) = delete;
  ScopedLatticeBound& operator=(const ScopedLatticeBound&) = delete;

 private:
  std::int64_t previous_;
};

Subgroup generated_subgroup(const ConcreteGroup& g, std::span<const Element> generators);
Subgroup generated_subgroup(const ConcreteGroup& g, std::span<const ElementIndex> generators);
Subgroup trivial_subgroup(const ConcreteGroup& g);
Subgroup whole_group(const ConcreteGroup& g);

/// Every subgroup exactly once, sorted by (order, elements). Throws
/// LatticeBoundError when g.order() exceeds lattice_bound().
std::vector<Subgroup> all_subgroups(const ConcreteGroup& g);

/// G/H via the Smith form of [diag(moduli) | generator columns].
GroupType quotient_type(const ConcreteGroup& g, const Subgroup& h);

/// H's type reconstructed from its element-order statistics.
GroupType subgroup_type(const Subgroup& h);
/// H's type as Z^r / ker(Z^r -> G), r = number of generators. Independent of
/// subgroup_type; used to cross-check it.
GroupType subgroup_type_via_kernel(const Subgroup& h);

/// The unique abelian type with this element-order profile. Throws
/// std::invalid_argument when no abelian group has it.
GroupType type_from_order_statistics(const OrderProfile& profile);
/// Element-order profile of a type computed from its invariant factors
/// (no enumeration).
OrderProfile order_profile_of_type(const GroupType& type);

/// One row per distinct (subgroup type, quotient type) pair, with the number
/// of concrete subgroups producing it. Convolution sums run over this.
struct CensusEntry {
  GroupType sub;
  GroupType quotient;
  std::int64_t count = 0;
};
using LatticeCensus = std::vector<CensusEntry>;

/// Cached per type; thread-safe. Throws LatticeBoundError.
std::shared_ptr<const LatticeCensus> lattice_census(const GroupType& type);

}  // namespace abelian
