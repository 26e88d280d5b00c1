#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "abelian/smith.hpp"

using namespace abelian;

namespace {

std::int64_t det(const IntMatrix& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  std::int64_t total = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto rest = cols;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
    const std::vector<std::size_t> lower(rows.begin() + 1, rows.end());
    const std::int64_t term = m(rows[0], cols[j]) * det(m, lower, rest);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

// gcd of all k x k minors.
std::int64_t minor_gcd(const IntMatrix& m, std::size_t k) {
  std::int64_t g = 0;
  const auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) s.push_back(i);
      }
      out.push_back(s);
    }
    return out;
  };
  for (const auto& r : subsets(m.rows(), k)) {
    for (const auto& c : subsets(m.cols(), k)) g = std::gcd(g, det(m, r, c));
  }
  return g;
}

std::int64_t square_det(const IntMatrix& m) {
  std::vector<std::size_t> idx(m.rows());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return det(m, idx, idx);
}

bool is_diagonal(const IntMatrix& d) {
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t c = 0; c < d.cols(); ++c) {
      if (r != c && d(r, c) != 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("smith examples") {
  CHECK(smith_normal_form(IntMatrix(2, 2, {4, 0, 0, 6})) == std::vector<std::int64_t>{2, 12});
  CHECK(smith_normal_form(IntMatrix(2, 3)) == std::vector<std::int64_t>{0, 0});
  CHECK(smith_normal_form(IntMatrix::identity(2)) == std::vector<std::int64_t>{1, 1});
  CHECK(smith_normal_form(IntMatrix(1, 1, {-5})) == std::vector<std::int64_t>{5});
  CHECK(smith_normal_form(IntMatrix(0, 3)).empty());
}

TEST_CASE("diag(4,6) bookkeeping: U*M*V = D") {
  const IntMatrix m(2, 2, {4, 0, 0, 6});
  const auto s = smith_decomposition(m);
  CHECK(s.left * m * s.right == s.diagonal);
  CHECK(s.invariants == std::vector<std::int64_t>{2, 12});
  CHECK(std::abs(square_det(s.left)) == 1);
  CHECK(std::abs(square_det(s.right)) == 1);
}

TEST_CASE("random matrices: transforms, divisibility chain, minor gcds") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> entry(-9, 9);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = trial % 7 == 0 ? 2 * entry(rng) : entry(rng);
    }
    const auto s = smith_decomposition(m);
    REQUIRE(s.left * m * s.right == s.diagonal);
    REQUIRE(is_diagonal(s.diagonal));
    REQUIRE(std::abs(square_det(s.left)) == 1);
    REQUIRE(std::abs(square_det(s.right)) == 1);
    REQUIRE(s.invariants == smith_normal_form(m));
    std::int64_t running = 1;
    for (std::size_t k = 0; k < s.invariants.size(); ++k) {
      const auto d = s.invariants[k];
      REQUIRE(d >= 0);
      REQUIRE(s.diagonal(k, k) == d);
      if (k + 1 < s.invariants.size() && d != 0) REQUIRE(s.invariants[k + 1] % d == 0);
      if (d == 0 && k + 1 < s.invariants.size()) REQUIRE(s.invariants[k + 1] == 0);
      running *= d;
      REQUIRE(minor_gcd(m, k + 1) == running);
    }
  }
}

TEST_CASE("IntMatrix shape checks") {
  CHECK_THROWS_AS(IntMatrix(2, 2, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS(IntMatrix(2, 3) * IntMatrix(2, 3));
}
