#pragma once

// Morphism and subgroup counts between finite abelian groups, order
// profiles, and the isomorphism tests built on them.

#include <cstdint>
#include <utility>
#include <vector>

#include "abelian/exact.hpp"
#include "abelian/group_type.hpp"
#include "abelian/lattice.hpp"

namespace abelian {

/// |Hom(A, B)| = prod_{i,j} gcd(a_i, b_j).
BigInt hom_count(const GroupType& a, const GroupType& b);

/// |Mono(A, B)| = sum_{H <= A} mu(A/H) |Hom(H, B)|. Memoized per pair.
BigInt mono_count(const GroupType& a, const GroupType& b);
/// |Epi(A, B)| = |Mono(B, A)|.
BigInt epi_count(const GroupType& a, const GroupType& b);
BigInt aut_count(const GroupType& b);

/// Number of subgroups of A isomorphic to B: |Mono(B, A)| / |Aut B|. A
/// non-integral quotient throws std::logic_error.
BigInt sub_count(const GroupType& b, const GroupType& a);

/// Number of d-dimensional subspaces of F_p^n (0 when d > n).
BigInt gaussian_subspace_count(std::int64_t p, int n, int d);

/// Counts of element orders, by enumerating a concrete model.
OrderProfile element_order_profile(const GroupType& a);
/// Counts of subgroup orders over the full lattice.
OrderProfile subgroup_order_profile(const GroupType& a);

bool isomorphic_by_element_orders(const GroupType& a, const GroupType& b);

/// Unordered pairs of distinct types of equal order <= max_order sharing a
/// subgroup-order profile, lexicographic. Reports; asserts nothing.
std::vector<std::pair<GroupType, GroupType>> conjecture_search(std::int64_t max_order);

/// hom_count(A, Z/d) == hom_count(B, Z/d) for every 1 <= d <= cyclic_bound.
bool yoneda_numeric_check(const GroupType& a, const GroupType& b, std::int64_t cyclic_bound);

}  // namespace abelian
