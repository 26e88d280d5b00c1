#pragma once

// Formula-versus-oracle sweeps. Each sweep walks every abelian type up to a
// bound, compares a library value with its brute-force counterpart and
// records one line per disagreement.

#include <cstdint>
#include <string>
#include <vector>

namespace abelian::verify {

struct SweepReport {
  std::int64_t checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// hom/mono/epi/aut against enumerate_homs, all pairs with |A|, |B| <= max_order.
SweepReport homs(std::int64_t max_order);

/// n_2(G) against count_generating_subsets(G), |G| <= max_order.
SweepReport generating_subsets(std::int64_t max_order);

/// n_t(G) against count_free_functions(G, t) for t in [1, max_t], |G| <=
/// max_order, keeping only pairs with t^|G| <= oracle::kMaxFunctionCount.
SweepReport free_functions(std::int64_t max_order, std::int64_t max_t = 10);

/// sum over H of count_functions_with_stabilizer(G, H, t) = t^|G|.
SweepReport stabilizer_partition(std::int64_t max_order, std::int64_t max_t = 3);

/// generates_full_symmetric against permutation_closure for 3 <= |G| <=
/// max_order: every transposition set when |G| <= exhaustive_order, otherwise
/// `samples` seeded random sets. Also the n-cycle criterion for n in [3, max_order].
SweepReport symmetric_generation(std::int64_t max_order, std::int64_t exhaustive_order = 5,
                                 std::int64_t samples = 100, std::uint64_t seed = 20240611);

/// Isometry counts and their coset-preserving kernel against the closed forms,
/// every subgroup of every G with |G| <= max_order.
SweepReport isometries(std::int64_t max_order);

/// inverse(one) against mu_closed, |G| <= max_order.
SweepReport mobius(std::int64_t max_order);

/// sub_count(B, A) against lattice subgroup counts, |A| <= max_order.
SweepReport subgroup_counts(std::int64_t max_order);

/// Distinct types of equal order <= max_order have distinct element-order profiles.
SweepReport element_profiles(std::int64_t max_order);

/// Suite names accepted by run_suite.
std::vector<std::string> suite_names();

/// Dispatches by name; throws std::invalid_argument for an unknown suite.
SweepReport run_suite(const std::string& name, std::int64_t bound);

}  // namespace abelian::verify
