#pragma once

// Isomorphism types of finite abelian groups.
//
// A GroupType is stored in invariant-factor form d_1 | d_2 | ... | d_n with
// every d_i >= 2. The trivial group is the empty list. Because the form is
// unique, value equality is isomorphism and the type doubles as a memo key.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abelian {

class GroupType {
 public:
  /// The trivial group.
  GroupType() = default;

  /// Accepts a list that already satisfies the divisibility chain; throws
  /// std::invalid_argument otherwise. Use canonicalize() for arbitrary moduli.
  static GroupType from_invariant_factors(std::vector<std::int64_t> factors);

  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::int64_t order() const;
  /// Largest invariant factor, 1 for the trivial group.
  std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  bool is_trivial() const { return factors_.empty(); }

  /// "2,12"; the trivial group renders as "1" so the string parses back.
  std::string to_string() const;

  friend bool operator==(const GroupType&, const GroupType&) = default;
  friend auto operator<=>(const GroupType&, const GroupType&) = default;

 private:
  std::vector<std::int64_t> factors_;
};

/// prime -> partition of exponents, parts in non-increasing order.
using PrimaryDecomposition = std::map<std::int64_t, std::vector<int>>;

/// Invariant-factor form of Z_{m_1} x ... x Z_{m_k}. Factors of 1 vanish.
GroupType canonicalize(std::span<const std::int64_t> moduli);
inline GroupType canonicalize(std::initializer_list<std::int64_t> moduli) {
  return canonicalize(std::span<const std::int64_t>(moduli.begin(), moduli.size()));
}

inline std::int64_t order(const GroupType& g) { return g.order(); }

PrimaryDecomposition primary(const GroupType& g);
GroupType from_primary(const PrimaryDecomposition& decomposition);

/// The p-primary component of g as a group type (trivial when p does not
/// divide the order).
GroupType p_part(const GroupType& g, std::int64_t p);

GroupType product(const GroupType& a, const GroupType& b);

bool is_elementary(const GroupType& g);
/// Number of cyclic p-power factors of g. Throws std::invalid_argument for
/// non-prime p.
int dim_p(const GroupType& g, std::int64_t p);

inline std::size_t min_generators(const GroupType& g) { return g.rank(); }

/// Parses "int(,int)*" with every entry >= 1 and canonicalizes. Throws
/// ParseError.
GroupType parse_group(std::string_view text);

/// All group types of order n, lexicographic on invariant factors.
std::vector<GroupType> types_of_order(std::int64_t n);
/// All group types of order <= max_order, ordered by (order, factors).
std::vector<GroupType> types_up_to(std::int64_t max_order);

// Elementary number theory shared by the rest of the library.
bool is_prime(std::int64_t n);
/// Ascending (prime, exponent) pairs. n >= 1.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t ipow(std::int64_t base, int exp);
/// All partitions of n, each non-increasing, in reverse-lexicographic order.
std::vector<std::vector<int>> partitions(int n);

}  // namespace abelian

template <>
struct std::hash<abelian::GroupType> {
  std::size_t operator()(const abelian::GroupType& g) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto d : g.invariant_factors()) {
      h ^= std::hash<std::int64_t>{}(d) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
