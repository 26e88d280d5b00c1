#pragma once

// Explicit groups Z_{m_1} x ... x Z_{m_k} with enumerable elements.
//
// Elements are addressed two ways: as coordinate tuples (the public,
// human-facing form) and as dense indices 0..order-1. The index order is the
// lexicographic order of tuples (first coordinate most significant), and is
// the fixed element enumeration every permutation in the library refers to.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "abelian/group_type.hpp"

namespace abelian {

using Element = std::vector<std::int64_t>;
using ElementIndex = std::uint32_t;

class ConcreteGroup {
 public:
  /// The trivial group (no coordinates).
  ConcreteGroup();
  /// Every modulus must be >= 2; throws std::invalid_argument otherwise.
  explicit ConcreteGroup(std::vector<std::int64_t> moduli);
  /// Model of a group type on its invariant factors.
  static ConcreteGroup from_type(const GroupType& type);

  const std::vector<std::int64_t>& moduli() const { return state_->moduli; }
  std::size_t rank() const { return state_->moduli.size(); }
  std::int64_t order() const { return state_->order; }
  GroupType type() const { return canonicalize(state_->moduli); }

  /// Throws std::invalid_argument for wrong arity or out-of-range coordinates.
  ElementIndex index_of(std::span<const std::int64_t> element) const;
  Element element_at(ElementIndex index) const;
  bool is_valid(std::span<const std::int64_t> element) const;

  static constexpr ElementIndex zero() { return 0; }
  ElementIndex add(ElementIndex a, ElementIndex b) const;
  ElementIndex negate(ElementIndex a) const;
  ElementIndex subtract(ElementIndex a, ElementIndex b) const { return add(a, negate(b)); }
  /// k * a for k >= 0.
  ElementIndex multiple(ElementIndex a, std::int64_t k) const;
  std::int64_t element_order(ElementIndex a) const { return state_->orders[a]; }

  /// "(1,2)" style rendering of an element.
  std::string format(ElementIndex a) const;

  friend bool operator==(const ConcreteGroup& a, const ConcreteGroup& b) {
    return a.state_ == b.state_ || a.moduli() == b.moduli();
  }

 private:
  struct State {
    std::vector<std::int64_t> moduli;
    std::vector<std::int64_t> strides;
    std::int64_t order = 1;
    std::vector<std::int64_t> coords;  // order x rank, row-major
    std::vector<std::int64_t> orders;
    std::vector<ElementIndex> add_table;  // order x order when small enough
  };
  std::shared_ptr<const State> state_;
};

/// lcm_i(m_i / gcd(m_i, g_i)). Throws std::invalid_argument on invalid g.
std::int64_t element_order(const ConcreteGroup& g, std::span<const std::int64_t> element);

}  // namespace abelian
