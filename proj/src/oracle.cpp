#include "abelian/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "abelian/errors.hpp"

namespace abelian::oracle {

namespace {

std::vector<bool> membership(const ConcreteGroup& g, const Subgroup& h) {
  if (!(h.parent() == g)) throw std::invalid_argument("oracle: subgroup of a different group");
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  for (auto e : h.elements()) in[e] = true;
  return in;
}

std::int64_t checked_function_count(std::int64_t n, std::int64_t t) {
  if (t < 1) throw std::invalid_argument("oracle: t must be >= 1");
  std::int64_t total = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    total *= t;
    if (total > kMaxFunctionCount) throw BoundError("function enumeration", kMaxFunctionCount, total);
  }
  return total;
}

// Calls visit(values) for every map {0..n-1} -> {0..t-1}.
template <typename Visit>
void for_each_function(std::size_t n, std::int64_t t, Visit visit) {
  std::vector<std::int64_t> values(n, 0);
  while (true) {
    visit(values);
    std::size_t i = 0;
    while (i < n && ++values[i] == t) values[i++] = 0;
    if (i == n) return;
  }
}

bool invariant_under(const ConcreteGroup& g, const std::vector<std::int64_t>& values, ElementIndex shift) {
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (values[g.add(static_cast<ElementIndex>(x), shift)] != values[x]) return false;
  }
  return true;
}

}  // namespace

std::int64_t count_generating_subsets(const ConcreteGroup& g) {
  const std::int64_t n = g.order();
  if (n > kMaxSubsetGroupOrder) throw BoundError("generating-subset sweep order", kMaxSubsetGroupOrder, n);
  std::int64_t count = 0;
  std::vector<bool> in(static_cast<std::size_t>(n));
  std::vector<ElementIndex> closed;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::fill(in.begin(), in.end(), false);
    in[0] = true;
    closed.assign(1, 0);
    // Grow the closure one subset element at a time: C <- C + <s>.
    for (std::int64_t s = 0; s < n; ++s) {
      if (!((mask >> s) & 1U) || in[static_cast<std::size_t>(s)]) continue;
      const auto gen = static_cast<ElementIndex>(s);
      const std::vector<ElementIndex> base = closed;
      for (ElementIndex shift = gen; !in[shift]; shift = g.add(shift, gen)) {
        for (auto c : base) {
          auto y = g.add(c, shift);
          if (!in[y]) {
            in[y] = true;
            closed.push_back(y);
          }
        }
      }
    }
    if (static_cast<std::int64_t>(closed.size()) == n) ++count;
  }
  return count;
}

std::int64_t count_free_functions(const ConcreteGroup& g, std::int64_t t) {
  const std::int64_t n = g.order();
  checked_function_count(n, t);
  // A stabilizer is non-trivial iff it contains an element of prime order.
  std::vector<ElementIndex> prime_order;
  for (std::int64_t x = 1; x < n; ++x) {
    const auto ord = g.element_order(static_cast<ElementIndex>(x));
    bool prime = ord > 1;
    for (std::int64_t d = 2; d * d <= ord; ++d) prime = prime && ord % d != 0;
    if (prime) prime_order.push_back(static_cast<ElementIndex>(x));
  }
  std::int64_t count = 0;
  for_each_function(static_cast<std::size_t>(n), t, [&](const std::vector<std::int64_t>& values) {
    for (auto s : prime_order) {
      if (invariant_under(g, values, s)) return;
    }
    ++count;
  });
  return count;
}

std::int64_t count_functions_with_stabilizer(const ConcreteGroup& g, const Subgroup& h,
                                             std::int64_t t) {
  const std::int64_t n = g.order();
  checked_function_count(n, t);
  const auto in_h = membership(g, h);
  std::int64_t count = 0;
  for_each_function(static_cast<std::size_t>(n), t, [&](const std::vector<std::int64_t>& values) {
    for (std::int64_t x = 1; x < n; ++x) {
      const auto s = static_cast<ElementIndex>(x);
      if (invariant_under(g, values, s) != in_h[s]) return;
    }
    ++count;
  });
  return count;
}

HomCounts enumerate_homs(const ConcreteGroup& a, const ConcreteGroup& b) {
  const std::size_t k = a.rank();
  // Generator i (order a_i) may go to any element of B killed by a_i.
  std::vector<std::vector<ElementIndex>> candidates(k);
  std::int64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::int64_t y = 0; y < b.order(); ++y) {
      if (a.moduli()[i] % b.element_order(static_cast<ElementIndex>(y)) == 0) {
        candidates[i].push_back(static_cast<ElementIndex>(y));
      }
    }
    total *= static_cast<std::int64_t>(candidates[i].size());
    if (total > kMaxHomCount) throw BoundError("hom enumeration", kMaxHomCount, total);
  }

  HomCounts counts;
  std::vector<std::size_t> choice(k, 0);
  std::vector<bool> hit(static_cast<std::size_t>(b.order()));
  while (true) {
    std::fill(hit.begin(), hit.end(), false);
    bool injective = true;
    std::int64_t image_size = 0;
    for (std::int64_t x = 0; x < a.order(); ++x) {
      const auto coords = a.element_at(static_cast<ElementIndex>(x));
      ElementIndex image = 0;
      for (std::size_t i = 0; i < k; ++i) image = b.add(image, b.multiple(candidates[i][choice[i]], coords[i]));
      if (x != 0 && image == 0) injective = false;
      if (!hit[image]) {
        hit[image] = true;
        ++image_size;
      }
    }
    ++counts.hom;
    if (injective) ++counts.mono;
    if (image_size == b.order()) ++counts.epi;

    std::size_t i = 0;
    while (i < k && ++choice[i] == candidates[i].size()) choice[i++] = 0;
    if (i == k) break;
  }
  return counts;
}

std::int64_t permutation_closure(const ConcreteGroup& g, const std::vector<Permutation>& gens) {
  const auto n = static_cast<std::size_t>(g.order());
  for (const auto& p : gens) {
    if (p.size() != n) throw std::invalid_argument("permutation_closure: size mismatch");
  }
  std::unordered_set<Permutation> seen;
  std::deque<Permutation> queue;
  auto id = Permutation::identity(n);
  seen.insert(id);
  queue.push_back(std::move(id));
  while (!queue.empty()) {
    auto p = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      auto q = s.compose(p);
      if (seen.insert(q).second) {
        if (static_cast<std::int64_t>(seen.size()) > kMaxClosureSize) {
          throw BoundError("permutation closure", kMaxClosureSize,
                           static_cast<std::int64_t>(seen.size()));
        }
        queue.push_back(std::move(q));
      }
    }
  }
  return static_cast<std::int64_t>(seen.size());
}

namespace {

template <typename Accept>
std::int64_t filter_permutations(const ConcreteGroup& g, Accept accept) {
  const std::int64_t n = g.order();
  if (n > kMaxIsometryGroupOrder) throw BoundError("isometry enumeration order", kMaxIsometryGroupOrder, n);
  std::vector<ElementIndex> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), ElementIndex{0});
  std::int64_t count = 0;
  do {
    if (accept(image)) ++count;
  } while (std::next_permutation(image.begin(), image.end()));
  return count;
}

bool isometry_by_definition(const ConcreteGroup& g, const std::vector<bool>& in_h,
                            const std::vector<ElementIndex>& image) {
  const auto n = static_cast<ElementIndex>(image.size());
  for (ElementIndex x = 0; x < n; ++x) {
    for (ElementIndex y = 0; y < n; ++y) {
      const auto moved = g.subtract(image[x], image[y]);
      if (!in_h[g.subtract(moved, g.subtract(x, y))]) return false;
    }
  }
  return true;
}

}  // namespace

std::int64_t enumerate_isometries(const ConcreteGroup& g, const Subgroup& h) {
  const auto in_h = membership(g, h);
  return filter_permutations(g, [&](const std::vector<ElementIndex>& image) {
    return isometry_by_definition(g, in_h, image);
  });
}

std::int64_t enumerate_coset_preserving_isometries(const ConcreteGroup& g, const Subgroup& h) {
  const auto in_h = membership(g, h);
  return filter_permutations(g, [&](const std::vector<ElementIndex>& image) {
    for (ElementIndex x = 0; x < image.size(); ++x) {
      if (!in_h[g.subtract(image[x], x)]) return false;
    }
    return isometry_by_definition(g, in_h, image);
  });
}

}  // namespace abelian::oracle
