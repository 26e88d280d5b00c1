#pragma once

// Test-local brute-force helpers. They work on raw moduli and tuples and do
// not call into the library, so they can serve as independent references.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace naive {

using Tuple = std::vector<std::int64_t>;

inline std::int64_t group_order(const std::vector<std::int64_t>& moduli) {
  std::int64_t n = 1;
  for (auto m : moduli) n *= m;
  return n;
}

inline std::vector<Tuple> all_tuples(const std::vector<std::int64_t>& moduli) {
  std::vector<Tuple> out{Tuple{}};
  for (auto m : moduli) {
    std::vector<Tuple> next;
    for (const auto& t : out) {
      for (std::int64_t v = 0; v < m; ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(u);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline Tuple add(const std::vector<std::int64_t>& moduli, const Tuple& a, const Tuple& b) {
  Tuple c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % moduli[i];
  return c;
}

inline std::int64_t tuple_order(const std::vector<std::int64_t>& moduli, const Tuple& g) {
  std::int64_t l = 1;
  for (std::size_t i = 0; i < g.size(); ++i) l = std::lcm(l, moduli[i] / std::gcd(moduli[i], g[i]));
  return l;
}

inline std::map<std::int64_t, std::int64_t> element_profile(const std::vector<std::int64_t>& moduli) {
  std::map<std::int64_t, std::int64_t> p;
  for (const auto& t : all_tuples(moduli)) ++p[tuple_order(moduli, t)];
  return p;
}

/// Every subgroup as a sorted set of tuples, by testing all subsets that
/// contain zero for closure. Only for tiny groups.
inline std::set<std::set<Tuple>> subgroups(const std::vector<std::int64_t>& moduli) {
  const auto elems = all_tuples(moduli);
  const std::size_t n = elems.size();
  std::map<Tuple, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[elems[i]] = i;
  std::vector<std::vector<std::size_t>> sum(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sum[i][j] = index[add(moduli, elems[i], elems[j])];
  }
  std::set<std::set<Tuple>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (n % size != 0) continue;
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      if (!((mask >> i) & 1U)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (((mask >> j) & 1U) && !((mask >> sum[i][j]) & 1U)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::set<Tuple> s;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) s.insert(elems[i]);
    }
    out.insert(s);
  }
  return out;
}

/// Divisibility chains d_1 | d_2 | ... with every d_i >= 2 and product n.
inline void chains(std::int64_t remaining, std::int64_t last, std::vector<std::int64_t>& prefix,
                   std::vector<std::vector<std::int64_t>>& out) {
  if (remaining == 1) {
    out.push_back(prefix);
    return;
  }
  for (std::int64_t d = 2; d <= remaining; ++d) {
    if (remaining % d != 0 || d % last != 0) continue;
    prefix.push_back(d);
    chains(remaining / d, d, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<std::int64_t>> chains_of_order(std::int64_t n) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> prefix;
  chains(n, 1, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline int mobius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

inline std::int64_t totient(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1 ? 1 : 0;
  return count;
}

}  // namespace naive
