#pragma once

// Generating the full symmetric group Sym(G) from the translations of a
// finite abelian group G plus a set of transpositions.
//
// For a Cayley subgroup K (one containing every translation), an element d
// is an interstice when the transposition (0 d) lies in K; interstices form
// a subgroup. Translations and transpositions (x_i y_i) generate Sym(G)
// exactly when the differences y_i - x_i generate G.

#include <cstdint>
#include <vector>

#include "abelian/concrete_group.hpp"
#include "abelian/exact.hpp"
#include "abelian/lattice.hpp"
#include "abelian/permutation.hpp"

namespace abelian {

struct Transposition {
  Element x;
  Element y;
};

/// Validates both endpoints and x != y; throws std::invalid_argument.
Permutation to_permutation(const ConcreteGroup& g, const Transposition& tau);

/// <y_i - x_i>. Throws UnsupportedOrderError when |G| <= 2.
Subgroup interstice_subgroup(const ConcreteGroup& g, const std::vector<Transposition>& taus);

/// True iff the translations of G and the given transpositions generate Sym(G).
bool generates_full_symmetric(const ConcreteGroup& g, const std::vector<Transposition>& taus);

/// Does the n-cycle (0 1 ... n-1) together with (i j) generate S_n?
/// Requires n >= 3 and i != j mod n.
bool cycle_transposition_generates(std::int64_t n, std::int64_t i, std::int64_t j);

/// sigma(x) - sigma(y) = x - y mod H for all x, y; checked as "sigma(x) - x
/// lies in a single coset of H".
bool is_isometry_mod(const ConcreteGroup& g, const Subgroup& h, const Permutation& sigma);

/// The coset sigma(x) - x + H, as its smallest element. Throws
/// std::invalid_argument when sigma is not an isometry mod H.
Element isometry_constant(const ConcreteGroup& g, const Subgroup& h, const Permutation& sigma);

/// (h!)^{g/h} * g / h, the order of the group of isometries mod a subgroup
/// of order h in a group of order g.
BigInt isometry_group_order(std::int64_t g, std::int64_t h);

}  // namespace abelian
