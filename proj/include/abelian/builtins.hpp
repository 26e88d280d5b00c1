#pragma once

// The standard abelian functions. Each accessor returns a shared instance,
// so memoized values persist across calls.

#include <optional>
#include <string>
#include <vector>

#include "abelian/abelian_function.hpp"

namespace abelian::builtins {

const AbelianFunction& delta();
const AbelianFunction& one();
const AbelianFunction& card();
/// G -> t^{|G|}
const AbelianFunction& t_pow_card(int t);
/// G -> |G|^t
const AbelianFunction& card_pow_t(int t);
/// G -> binomial(|G|, d)
const AbelianFunction& binom_card(int d);
/// inverse(one)
const AbelianFunction& mu();
/// mu * card: number of generators of G.
const AbelianFunction& phi();
/// mu * t_pow_card(t); n_t(2) counts generating subsets.
const AbelianFunction& n_t(int t);
/// one * one
const AbelianFunction& subgroup_count();
/// mu * card_pow_t(t): generating t-tuples.
const AbelianFunction& generating_tuples(int t);
/// mu * binom_card(d): generating subsets with d elements.
const AbelianFunction& generating_subsets_of_size(int d);

/// Resolves CLI names: delta, one, card, mu, phi, nsub, nt:<t>,
/// gentuples:<t>, gensubsets:<d>, tpow:<t>, cardpow:<t>, binom:<d>.
/// Returns nullopt for unknown names.
std::optional<AbelianFunction> by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace abelian::builtins
