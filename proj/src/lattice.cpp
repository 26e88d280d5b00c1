#include "abelian/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "abelian/errors.hpp"
#include "abelian/smith.hpp"

namespace abelian {

namespace {

std::atomic<std::int64_t> g_lattice_bound{512};

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : b) h = (h ^ w) * 0x100000001b3ULL ^ (h >> 29);
    return h;
  }
};

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }

std::vector<ElementIndex> bits_to_elements(const Bits& b, std::size_t n) {
  std::vector<ElementIndex> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (test_bit(b, i)) out.push_back(static_cast<ElementIndex>(i));
  }
  return out;
}

// Closure of a generating set by breadth-first addition of generators.
std::vector<ElementIndex> close(const ConcreteGroup& g, std::span<const ElementIndex> gens) {
  const auto n = static_cast<std::size_t>(g.order());
  Bits seen = make_bits(n);
  set_bit(seen, 0);
  std::vector<ElementIndex> frontier{0};
  std::vector<ElementIndex> out{0};
  while (!frontier.empty()) {
    std::vector<ElementIndex> next;
    for (auto x : frontier) {
      for (auto s : gens) {
        auto y = g.add(x, s);
        if (!test_bit(seen, y)) {
          set_bit(seen, y);
          next.push_back(y);
          out.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Subgroup::Subgroup(ConcreteGroup parent, std::vector<ElementIndex> elements,
                   std::vector<ElementIndex> generators)
    : parent_(std::move(parent)),
      elements_(std::move(elements)),
      generators_(std::move(generators)) {
  if (elements_.empty() || elements_.front() != 0) {
    throw std::invalid_argument("Subgroup: element set must contain zero");
  }
  if (parent_.order() % order() != 0) {
    throw std::invalid_argument("Subgroup: order does not divide the parent order");
  }
  type_ = subgroup_type(*this);
}

bool Subgroup::contains(ElementIndex e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

std::vector<Element> Subgroup::element_tuples() const {
  std::vector<Element> out;
  out.reserve(elements_.size());
  for (auto e : elements_) out.push_back(parent_.element_at(e));
  return out;
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements_ < b.elements_;
}

std::int64_t lattice_bound() { return g_lattice_bound.load(); }

void set_lattice_bound(std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("lattice bound must be >= 1");
  g_lattice_bound.store(bound);
}

Subgroup generated_subgroup(const ConcreteGroup& g, std::span<const ElementIndex> generators) {
  for (auto s : generators) {
    if (static_cast<std::int64_t>(s) >= g.order()) {
      throw std::invalid_argument("generated_subgroup: element index out of range");
    }
  }
  std::vector<ElementIndex> gens(generators.begin(), generators.end());
  auto elements = close(g, gens);
  return Subgroup(g, std::move(elements), std::move(gens));
}

Subgroup generated_subgroup(const ConcreteGroup& g, std::span<const Element> generators) {
  std::vector<ElementIndex> idx;
  idx.reserve(generators.size());
  for (const auto& e : generators) idx.push_back(g.index_of(e));
  return generated_subgroup(g, std::span<const ElementIndex>(idx));
}

Subgroup trivial_subgroup(const ConcreteGroup& g) {
  return Subgroup(g, {0}, {});
}

Subgroup whole_group(const ConcreteGroup& g) {
  std::vector<ElementIndex> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    Element e(g.rank(), 0);
    e[i] = 1;
    gens.push_back(g.index_of(e));
  }
  return generated_subgroup(g, std::span<const ElementIndex>(gens));
}

std::vector<Subgroup> all_subgroups(const ConcreteGroup& g) {
  if (g.order() > lattice_bound()) throw LatticeBoundError(lattice_bound(), g.order());
  const auto n = static_cast<std::size_t>(g.order());

  struct Node {
    Bits bits;
    std::vector<ElementIndex> elements;
    std::vector<ElementIndex> gens;
  };
  std::unordered_set<Bits, BitsHash> seen;
  std::vector<Node> found;
  std::deque<std::size_t> queue;

  {
    Node trivial{make_bits(n), {0}, {}};
    set_bit(trivial.bits, 0);
    seen.insert(trivial.bits);
    found.push_back(std::move(trivial));
    queue.push_back(0);
  }

  // Each step adjoins one element whose image in G/H has prime order; every
  // subgroup sits at the top of such a chain starting from the trivial one.
  while (!queue.empty()) {
    const std::size_t current = queue.front();
    queue.pop_front();
    const Bits in_h = found[current].bits;
    const std::vector<ElementIndex> h_elems = found[current].elements;
    Bits done = in_h;
    for (std::size_t x = 0; x < n; ++x) {
      if (test_bit(done, x)) continue;
      const auto gx = static_cast<ElementIndex>(x);
      std::int64_t m = 1;
      for (ElementIndex y = gx; !test_bit(in_h, y); y = g.add(y, gx)) ++m;

      const bool prime_step = is_prime(m);
      // Multiples k*x with gcd(k, m) = 1 give the same extension; for
      // non-prime m only the coset of x itself is retired.
      Bits k_bits = prime_step ? in_h : Bits{};
      ElementIndex multiple = 0;
      for (std::int64_t k = 1; k < m; ++k) {
        multiple = g.add(multiple, gx);
        for (auto h : h_elems) set_bit(done, g.add(h, multiple));
        if (!prime_step) break;
        for (auto h : h_elems) set_bit(k_bits, g.add(h, multiple));
      }
      if (!prime_step) continue;
      if (!seen.insert(k_bits).second) continue;
      Node node;
      node.elements = bits_to_elements(k_bits, n);
      node.bits = std::move(k_bits);
      node.gens = found[current].gens;
      node.gens.push_back(gx);
      found.push_back(std::move(node));
      queue.push_back(found.size() - 1);
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& node : found) out.emplace_back(g, std::move(node.elements), std::move(node.gens));
  std::sort(out.begin(), out.end());
  return out;
}

GroupType quotient_type(const ConcreteGroup& g, const Subgroup& h) {
  if (!(h.parent() == g)) throw std::invalid_argument("quotient_type: subgroup of a different group");
  const std::size_t k = g.rank();
  const std::size_t r = h.generators().size();
  IntMatrix m(k, k + r);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = g.moduli()[i];
  for (std::size_t j = 0; j < r; ++j) {
    auto e = g.element_at(h.generators()[j]);
    for (std::size_t i = 0; i < k; ++i) m(i, k + j) = e[i];
  }
  std::vector<std::int64_t> factors;
  for (auto s : smith_normal_form(m)) {
    if (s != 1) factors.push_back(s);
  }
  auto q = GroupType::from_invariant_factors(std::move(factors));
  if (q.order() * h.order() != g.order()) {
    throw std::logic_error("quotient_type: order mismatch for " + g.type().to_string());
  }
  return q;
}

GroupType subgroup_type(const Subgroup& h) {
  OrderProfile profile;
  for (auto e : h.elements()) ++profile[h.parent().element_order(e)];
  return type_from_order_statistics(profile);
}

GroupType subgroup_type_via_kernel(const Subgroup& h) {
  const auto& g = h.parent();
  const std::size_t k = g.rank();
  const std::size_t r = h.generators().size();
  if (r == 0) return {};
  IntMatrix m(k, r + k);
  for (std::size_t j = 0; j < r; ++j) {
    auto e = g.element_at(h.generators()[j]);
    for (std::size_t i = 0; i < k; ++i) m(i, j) = e[i];
  }
  for (std::size_t i = 0; i < k; ++i) m(i, r + i) = g.moduli()[i];

  auto smith = smith_decomposition(m);
  std::size_t rank = 0;
  while (rank < smith.invariants.size() && smith.invariants[rank] != 0) ++rank;

  // Columns of V past the rank span ker(M); their first r coordinates span
  // the relation lattice of the generators.
  const std::size_t kernel_dim = r + k - rank;
  IntMatrix relations(r, kernel_dim);
  for (std::size_t c = 0; c < kernel_dim; ++c) {
    for (std::size_t i = 0; i < r; ++i) relations(i, c) = smith.right(i, rank + c);
  }
  std::vector<std::int64_t> factors;
  for (auto s : smith_normal_form(relations)) {
    if (s == 0) throw std::logic_error("subgroup_type_via_kernel: infinite quotient");
    if (s != 1) factors.push_back(s);
  }
  return GroupType::from_invariant_factors(std::move(factors));
}

OrderProfile order_profile_of_type(const GroupType& type) {
  // #{x : ord(x) | d} = prod_i gcd(d, d_i); peel off proper divisors.
  OrderProfile out;
  for (auto d : divisors(type.exponent())) {
    std::int64_t dividing = 1;
    for (auto f : type.invariant_factors()) dividing *= std::gcd(d, f);
    for (const auto& [e, c] : out) {
      if (d % e == 0) dividing -= c;
    }
    out[d] = dividing;
  }
  return out;
}

GroupType type_from_order_statistics(const OrderProfile& profile) {
  std::int64_t total = 0;
  OrderProfile clean;
  for (const auto& [d, c] : profile) {
    if (d < 1 || c < 0) throw std::invalid_argument("order profile: invalid entry");
    if (c > 0) clean[d] = c;
    total += c;
  }
  if (total < 1) throw std::invalid_argument("order profile: counts must sum to a positive integer");

  PrimaryDecomposition decomposition;
  for (auto [p, e] : factorize(total)) {
    // Elements of order dividing p^k number p^(sum_i min(lambda_i, k)); the
    // successive exponent gaps form the conjugate partition.
    std::vector<int> conjugate;
    std::int64_t cumulative = clean.count(1) ? clean.at(1) : 0;
    int prev_exp = 0;
    std::int64_t pk = 1;
    while (prev_exp < e) {
      pk *= p;
      auto it = clean.find(pk);
      if (it == clean.end()) break;
      cumulative += it->second;
      int exp = 0;
      std::int64_t v = cumulative;
      while (v % p == 0) {
        v /= p;
        ++exp;
      }
      if (v != 1 || exp <= prev_exp) break;
      conjugate.push_back(exp - prev_exp);
      prev_exp = exp;
    }
    if (prev_exp != e) throw std::invalid_argument("order profile matches no abelian group");
    std::vector<int> lambda;
    for (int i = 1; !conjugate.empty() && i <= conjugate.front(); ++i) {
      int parts = 0;
      for (auto c : conjugate) parts += (c >= i) ? 1 : 0;
      lambda.push_back(parts);
    }
    decomposition[p] = std::move(lambda);
  }
  GroupType type;
  try {
    type = from_primary(decomposition);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("order profile matches no abelian group");
  }
  if (order_profile_of_type(type) != clean) {
    throw std::invalid_argument("order profile matches no abelian group");
  }
  return type;
}

std::shared_ptr<const LatticeCensus> lattice_census(const GroupType& type) {
  if (type.order() > lattice_bound()) throw LatticeBoundError(lattice_bound(), type.order());

  static std::mutex mutex;
  static std::unordered_map<GroupType, std::shared_ptr<const LatticeCensus>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(type); it != cache.end()) return it->second;
  }

  const auto g = ConcreteGroup::from_type(type);
  std::map<std::pair<GroupType, GroupType>, std::int64_t> counts;
  for (const auto& h : all_subgroups(g)) {
    ++counts[{h.abstract_type(), quotient_type(g, h)}];
  }
  auto census = std::make_shared<LatticeCensus>();
  census->reserve(counts.size());
  for (auto& [key, count] : counts) census->push_back({key.first, key.second, count});

  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(type, std::move(census));
  return it->second;
}

}  // namespace abelian
