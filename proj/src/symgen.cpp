#include "abelian/symgen.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "abelian/errors.hpp"

namespace abelian {

namespace {

void require_order_at_least_3(const ConcreteGroup& g) {
  if (g.order() < 3) throw UnsupportedOrderError(g.order());
}

void require_same_group(const ConcreteGroup& g, const Subgroup& h, const Permutation& sigma) {
  if (!(h.parent() == g)) throw std::invalid_argument("subgroup belongs to a different group");
  if (static_cast<std::int64_t>(sigma.size()) != g.order()) {
    throw std::invalid_argument("permutation size does not match the group order");
  }
}

}  // namespace

Permutation to_permutation(const ConcreteGroup& g, const Transposition& tau) {
  const auto x = g.index_of(tau.x);
  const auto y = g.index_of(tau.y);
  if (x == y) throw std::invalid_argument("transposition endpoints must differ");
  return swap_permutation(static_cast<std::size_t>(g.order()), x, y);
}

Subgroup interstice_subgroup(const ConcreteGroup& g, const std::vector<Transposition>& taus) {
  require_order_at_least_3(g);
  std::vector<ElementIndex> deltas;
  deltas.reserve(taus.size());
  for (const auto& tau : taus) {
    const auto x = g.index_of(tau.x);
    const auto y = g.index_of(tau.y);
    if (x == y) throw std::invalid_argument("transposition endpoints must differ");
    deltas.push_back(g.subtract(y, x));
  }
  return generated_subgroup(g, std::span<const ElementIndex>(deltas));
}

bool generates_full_symmetric(const ConcreteGroup& g, const std::vector<Transposition>& taus) {
  return interstice_subgroup(g, taus).order() == g.order();
}

bool cycle_transposition_generates(std::int64_t n, std::int64_t i, std::int64_t j) {
  if (n < 3) throw UnsupportedOrderError(n);
  const std::int64_t diff = ((j - i) % n + n) % n;
  if (diff == 0) throw std::invalid_argument("transposition endpoints must differ mod n");
  return std::gcd(n, diff) == 1;
}

bool is_isometry_mod(const ConcreteGroup& g, const Subgroup& h, const Permutation& sigma) {
  require_same_group(g, h, sigma);
  const ElementIndex c0 = sigma(0);
  for (std::int64_t i = 1; i < g.order(); ++i) {
    const auto x = static_cast<ElementIndex>(i);
    const auto shift = g.subtract(sigma(x), x);
    if (!h.contains(g.subtract(shift, c0))) return false;
  }
  return true;
}

Element isometry_constant(const ConcreteGroup& g, const Subgroup& h, const Permutation& sigma) {
  if (!is_isometry_mod(g, h, sigma)) {
    throw std::invalid_argument("permutation is not an isometry modulo the subgroup");
  }
  const ElementIndex c0 = sigma(0);
  ElementIndex best = g.add(c0, h.elements().front());
  for (auto e : h.elements()) best = std::min(best, g.add(c0, e));
  return g.element_at(best);
}

BigInt isometry_group_order(std::int64_t g, std::int64_t h) {
  if (h < 1 || g < 1 || g % h != 0) {
    throw std::invalid_argument("isometry_group_order: need h >= 1 dividing g");
  }
  BigInt fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(h));
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), fact.get_mpz_t(), static_cast<unsigned long>(g / h));
  return out * make_big(g) / make_big(h);
}

}  // namespace abelian
