#include "abelian/group_type.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "abelian/errors.hpp"

namespace abelian {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("group order overflows 64-bit integer");
  }
  return r;
}

// Small primes for trial division; orders at desk scale stay far below
// 1000^2, and larger cofactors fall through to odd trial divisors.
const std::vector<std::int64_t>& prime_table() {
  static const std::vector<std::int64_t> table = [] {
    constexpr int kLimit = 1000;
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<std::int64_t> primes;
    for (int i = 2; i <= kLimit; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (int j = i * i; j <= kLimit; j += i) composite[j] = true;
    }
    return primes;
  }();
  return table;
}

}  // namespace

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<std::pair<std::int64_t, int>> out;
  auto strip = [&](std::int64_t p) {
    if (n % p != 0) return;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  };
  for (auto p : prime_table()) {
    if (p * p > n) break;
    strip(p);
  }
  for (std::int64_t p = prime_table().back() + 2; p * p <= n; p += 2) strip(p);
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  // Parts emitted largest-first, so the list comes out reverse-lexicographic.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

GroupType GroupType::from_invariant_factors(std::vector<std::int64_t> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) {
      throw std::invalid_argument("invariant factors must be >= 2");
    }
    if (i > 0 && factors[i] % factors[i - 1] != 0) {
      throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
  }
  GroupType g;
  g.factors_ = std::move(factors);
  return g;
}

std::int64_t GroupType::order() const {
  std::int64_t n = 1;
  for (auto d : factors_) n = checked_mul(n, d);
  return n;
}

std::string GroupType::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(factors_[i]);
  }
  return s;
}

GroupType from_primary(const PrimaryDecomposition& decomposition) {
  std::size_t rank = 0;
  for (const auto& [p, parts] : decomposition) rank = std::max(rank, parts.size());
  // The largest invariant factor collects the largest part of every prime.
  std::vector<std::int64_t> factors(rank, 1);
  for (const auto& [p, parts] : decomposition) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
      factors[rank - 1 - i] = checked_mul(factors[rank - 1 - i], ipow(p, parts[i]));
    }
  }
  return GroupType::from_invariant_factors(std::move(factors));
}

GroupType canonicalize(std::span<const std::int64_t> moduli) {
  PrimaryDecomposition parts;
  for (auto m : moduli) {
    if (m < 1) throw std::invalid_argument("moduli must be >= 1");
    for (auto [p, e] : factorize(m)) parts[p].push_back(e);
  }
  for (auto& [p, lambda] : parts) std::sort(lambda.rbegin(), lambda.rend());
  return from_primary(parts);
}

PrimaryDecomposition primary(const GroupType& g) {
  PrimaryDecomposition out;
  const auto& f = g.invariant_factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    for (auto [p, e] : factorize(*it)) out[p].push_back(e);
  }
  return out;
}

GroupType p_part(const GroupType& g, std::int64_t p) {
  auto decomposition = primary(g);
  auto it = decomposition.find(p);
  if (it == decomposition.end()) return {};
  return from_primary({{p, it->second}});
}

GroupType product(const GroupType& a, const GroupType& b) {
  std::vector<std::int64_t> moduli = a.invariant_factors();
  moduli.insert(moduli.end(), b.invariant_factors().begin(),
                b.invariant_factors().end());
  return canonicalize(moduli);
}

bool is_elementary(const GroupType& g) {
  for (auto d : g.invariant_factors()) {
    for (auto [p, e] : factorize(d)) {
      if (e > 1) return false;
    }
  }
  return true;
}

int dim_p(const GroupType& g, std::int64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("dim_p: " + std::to_string(p) + " is not prime");
  }
  int count = 0;
  for (auto d : g.invariant_factors()) {
    if (d % p == 0) ++count;
  }
  return count;
}

GroupType parse_group(std::string_view text) {
  std::vector<std::int64_t> moduli;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError("empty group");
  while (true) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                                  : comma - pos);
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw ParseError("bad group '" + std::string(text) +
                       "': expected comma-separated positive integers");
    }
    if (value < 1) {
      throw ParseError("bad group '" + std::string(text) +
                       "': moduli must be >= 1");
    }
    moduli.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return canonicalize(moduli);
}

std::vector<GroupType> types_of_order(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("types_of_order: n must be >= 1");
  std::vector<PrimaryDecomposition> acc{{}};
  for (auto [p, e] : factorize(n)) {
    std::vector<PrimaryDecomposition> next;
    for (const auto& partial : acc) {
      for (auto& lambda : partitions(e)) {
        auto d = partial;
        d[p] = lambda;
        next.push_back(std::move(d));
      }
    }
    acc = std::move(next);
  }
  std::vector<GroupType> out;
  out.reserve(acc.size());
  for (const auto& d : acc) out.push_back(from_primary(d));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupType> types_up_to(std::int64_t max_order) {
  std::vector<GroupType> out;
  for (std::int64_t n = 1; n <= max_order; ++n) {
    auto t = types_of_order(n);
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

}  // namespace abelian
