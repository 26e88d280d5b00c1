#include "abelian/counting.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "abelian/abelian_function.hpp"

namespace abelian {

BigInt hom_count(const GroupType& a, const GroupType& b) {
  BigInt n = 1;
  for (auto x : a.invariant_factors()) {
    for (auto y : b.invariant_factors()) n *= make_big(std::gcd(x, y));
  }
  return n;
}

BigInt mono_count(const GroupType& a, const GroupType& b) {
  static std::mutex mutex;
  static std::map<std::pair<GroupType, GroupType>, BigInt> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({a, b}); it != memo.end()) return it->second;
  }
  Exact sum = 0;
  for (const auto& entry : *lattice_census(a)) {
    const Exact mu = mu_closed(entry.quotient);
    if (mu != 0) sum += entry.count * mu * Exact(hom_count(entry.sub, b));
  }
  if (!is_integer(sum) || sum < 0) {
    throw std::logic_error("mono_count: non-integral or negative lattice sum");
  }
  BigInt value = sum.get_num();
  std::lock_guard lock(mutex);
  return memo.try_emplace({a, b}, std::move(value)).first->second;
}

BigInt epi_count(const GroupType& a, const GroupType& b) { return mono_count(b, a); }

BigInt aut_count(const GroupType& b) { return mono_count(b, b); }

BigInt sub_count(const GroupType& b, const GroupType& a) {
  const BigInt mono = mono_count(b, a);
  const BigInt aut = aut_count(b);
  if (mono % aut != 0) {
    throw std::logic_error("sub_count: |Mono(" + b.to_string() + ", " + a.to_string() +
                           ")| is not divisible by |Aut|");
  }
  return mono / aut;
}

BigInt gaussian_subspace_count(std::int64_t p, int n, int d) {
  if (!is_prime(p)) throw std::invalid_argument("gaussian_subspace_count: p must be prime");
  if (n < 0 || d < 0) throw std::invalid_argument("gaussian_subspace_count: negative dimension");
  if (d > n) return 0;
  const BigInt q = make_big(p);
  auto power = [&](int e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
  };
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < d; ++i) {
    num *= power(n) - power(i);
    den *= power(d) - power(i);
  }
  return num / den;
}

OrderProfile element_order_profile(const GroupType& a) {
  const auto g = ConcreteGroup::from_type(a);
  OrderProfile out;
  for (std::int64_t i = 0; i < g.order(); ++i) {
    ++out[g.element_order(static_cast<ElementIndex>(i))];
  }
  return out;
}

OrderProfile subgroup_order_profile(const GroupType& a) {
  OrderProfile out;
  for (const auto& entry : *lattice_census(a)) out[entry.sub.order()] += entry.count;
  return out;
}

bool isomorphic_by_element_orders(const GroupType& a, const GroupType& b) {
  return element_order_profile(a) == element_order_profile(b);
}

std::vector<std::pair<GroupType, GroupType>> conjecture_search(std::int64_t max_order) {
  std::vector<std::pair<GroupType, GroupType>> found;
  for (std::int64_t n = 1; n <= max_order; ++n) {
    const auto types = types_of_order(n);
    std::vector<OrderProfile> profiles;
    profiles.reserve(types.size());
    for (const auto& t : types) profiles.push_back(subgroup_order_profile(t));
    for (std::size_t i = 0; i < types.size(); ++i) {
      for (std::size_t j = i + 1; j < types.size(); ++j) {
        if (profiles[i] == profiles[j]) found.emplace_back(types[i], types[j]);
      }
    }
  }
  return found;
}

bool yoneda_numeric_check(const GroupType& a, const GroupType& b, std::int64_t cyclic_bound) {
  for (std::int64_t d = 1; d <= cyclic_bound; ++d) {
    const auto z = canonicalize({d});
    if (hom_count(a, z) != hom_count(b, z)) return false;
  }
  return true;
}

}  // namespace abelian
