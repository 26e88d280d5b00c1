#pragma once

// Brute-force reference counts. Nothing here calls the lattice census, the
// convolution algebra, or the counting formulas; the only shared code is
// ConcreteGroup arithmetic and the Permutation/Subgroup containers. Every
// enumeration has an explicit size bound and throws BoundError beyond it.

#include <cstdint>
#include <vector>

#include "abelian/concrete_group.hpp"
#include "abelian/exact.hpp"
#include "abelian/lattice.hpp"
#include "abelian/permutation.hpp"

namespace abelian::oracle {

inline constexpr std::int64_t kMaxSubsetGroupOrder = 20;
inline constexpr std::int64_t kMaxFunctionCount = 10'000'000;
inline constexpr std::int64_t kMaxHomCount = 1'000'000;
inline constexpr std::int64_t kMaxClosureSize = 1'000'000;
inline constexpr std::int64_t kMaxIsometryGroupOrder = 7;

/// Subsets S of G (including the empty set) with <S> = G.
std::int64_t count_generating_subsets(const ConcreteGroup& g);

/// Functions G -> {0..t-1} with trivial stabilizer under (g.a)(x) = a(x + g).
std::int64_t count_free_functions(const ConcreteGroup& g, std::int64_t t);

/// Functions G -> {0..t-1} whose stabilizer is exactly H.
std::int64_t count_functions_with_stabilizer(const ConcreteGroup& g, const Subgroup& h,
                                             std::int64_t t);

struct HomCounts {
  std::int64_t hom = 0;
  std::int64_t mono = 0;
  std::int64_t epi = 0;
  friend bool operator==(const HomCounts&, const HomCounts&) = default;
};

/// Enumerates Hom(A, B) by the images of A's coordinate generators. A's
/// moduli must form a direct-product presentation (any moduli list does).
HomCounts enumerate_homs(const ConcreteGroup& a, const ConcreteGroup& b);

/// Order of the group generated by gens (all of size |G|), by BFS closure.
std::int64_t permutation_closure(const ConcreteGroup& g, const std::vector<Permutation>& gens);

/// Number of permutations sigma of G with sigma(x) - sigma(y) - (x - y) in H
/// for all x, y, by filtering all |G|! permutations.
std::int64_t enumerate_isometries(const ConcreteGroup& g, const Subgroup& h);

/// Isometries mod H that additionally fix every coset of H.
std::int64_t enumerate_coset_preserving_isometries(const ConcreteGroup& g, const Subgroup& h);

}  // namespace abelian::oracle
