#include <doctest.h>

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "abelian/errors.hpp"
#include "abelian/lattice.hpp"
#include "abelian/permutation.hpp"
#include "abelian/symgen.hpp"

using namespace abelian;

namespace {

Subgroup gen(const ConcreteGroup& g, std::vector<Element> gens) {
  return generated_subgroup(g, std::span<const Element>(gens));
}

Permutation perm(std::vector<ElementIndex> image) { return Permutation(std::move(image)); }

std::unordered_set<Permutation> closure(std::vector<Permutation> gens, std::size_t n) {
  std::unordered_set<Permutation> seen{Permutation::identity(n)};
  std::deque<Permutation> queue{Permutation::identity(n)};
  while (!queue.empty()) {
    const auto p = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      auto q = s.compose(p);
      if (seen.insert(q).second) queue.push_back(q);
    }
  }
  return seen;
}

std::vector<Permutation> all_perms(std::size_t n) {
  std::vector<ElementIndex> image(n);
  std::iota(image.begin(), image.end(), ElementIndex{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace

TEST_CASE("Permutation basics") {
  const auto p = perm({1, 2, 0});
  const auto q = perm({0, 2, 1});
  CHECK(p(0) == 1);
  CHECK(p.compose(q).image() == std::vector<ElementIndex>{1, 0, 2});
  CHECK(p.compose(p.inverse()) == Permutation::identity(3));
  CHECK(Permutation::identity(3).size() == 3);
  CHECK_THROWS_AS(perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perm({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(p.compose(Permutation::identity(4)), std::invalid_argument);
  CHECK(swap_permutation(4, 1, 3).image() == std::vector<ElementIndex>{0, 3, 2, 1});
  const ConcreteGroup z4({4});
  CHECK(translation(z4, 1).image() == std::vector<ElementIndex>{1, 2, 3, 0});
}

TEST_CASE("interstice_subgroup examples") {
  const ConcreteGroup z4({4});
  CHECK(interstice_subgroup(z4, {{{0}, {1}}}).order() == 4);
  CHECK(interstice_subgroup(z4, {{{0}, {2}}}).element_tuples() == std::vector<Element>{{0}, {2}});
  const ConcreteGroup v({2, 2});
  CHECK(interstice_subgroup(v, {{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}}).order() == 4);
  CHECK(interstice_subgroup(z4, {}).order() == 1);
}

TEST_CASE("interstice_subgroup errors") {
  CHECK_THROWS_AS(interstice_subgroup(ConcreteGroup({2}), {{{0}, {1}}}), UnsupportedOrderError);
  CHECK_THROWS_AS(interstice_subgroup(ConcreteGroup(), {}), UnsupportedOrderError);
  const ConcreteGroup z4({4});
  CHECK_THROWS_AS(interstice_subgroup(z4, {{{0}, {0}}}), std::invalid_argument);
  CHECK_THROWS_AS(interstice_subgroup(z4, {{{0}, {4}}}), std::invalid_argument);
  CHECK_THROWS_AS(to_permutation(z4, {{1}, {1}}), std::invalid_argument);
}

TEST_CASE("generates_full_symmetric examples") {
  CHECK(generates_full_symmetric(ConcreteGroup({5}), {{{0}, {2}}}));
  CHECK_FALSE(generates_full_symmetric(ConcreteGroup({4}), {{{0}, {2}}}));
  CHECK(generates_full_symmetric(ConcreteGroup({4}), {{{1}, {2}}}));
  const ConcreteGroup z4({4});
  CHECK(closure({translation(z4, 1), to_permutation(z4, {{1}, {2}})}, 4).size() == 24);
  CHECK(closure({translation(z4, 1), to_permutation(z4, {{0}, {2}})}, 4).size() == 8);
}

TEST_CASE("cycle_transposition_generates examples") {
  CHECK(cycle_transposition_generates(5, 0, 2));
  CHECK_FALSE(cycle_transposition_generates(4, 0, 2));
  CHECK(cycle_transposition_generates(6, 1, 2));
  CHECK(cycle_transposition_generates(6, 2, 1));
  CHECK(cycle_transposition_generates(6, 0, 11));
  CHECK_THROWS_AS(cycle_transposition_generates(2, 0, 1), UnsupportedOrderError);
  CHECK_THROWS_AS(cycle_transposition_generates(5, 1, 6), std::invalid_argument);
}

TEST_CASE("is_isometry_mod examples") {
  const ConcreteGroup z4({4});
  const auto h = gen(z4, {{2}});
  for (ElementIndex t = 0; t < 4; ++t) CHECK(is_isometry_mod(z4, trivial_subgroup(z4), translation(z4, t)));
  CHECK(is_isometry_mod(z4, h, Permutation::identity(4)));
  CHECK(is_isometry_mod(z4, h, swap_permutation(4, 0, 2)));
  CHECK_FALSE(is_isometry_mod(z4, h, swap_permutation(4, 0, 1)));
  CHECK_FALSE(is_isometry_mod(z4, trivial_subgroup(z4), swap_permutation(4, 0, 2)));
  CHECK_THROWS_AS(is_isometry_mod(z4, h, Permutation::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(is_isometry_mod(ConcreteGroup({2, 2}), h, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("isometry_constant examples") {
  const ConcreteGroup z4({4});
  const auto h = gen(z4, {{2}});
  CHECK(isometry_constant(z4, h, translation(z4, 3)) == Element{1});
  CHECK(isometry_constant(z4, trivial_subgroup(z4), translation(z4, 3)) == Element{3});
  CHECK(isometry_constant(z4, h, Permutation::identity(4)) == Element{0});
  CHECK(isometry_constant(z4, h, perm({1, 0, 3, 2})) == Element{1});
  CHECK_THROWS_AS(isometry_constant(z4, h, swap_permutation(4, 0, 1)), std::invalid_argument);
}

TEST_CASE("isometry_group_order examples") {
  CHECK(isometry_group_order(4, 2) == 8);
  for (std::int64_t n = 1; n <= 8; ++n) {
    CHECK(isometry_group_order(n, 1) == make_big(n));
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    CHECK(isometry_group_order(n, n) == f);
  }
  CHECK_THROWS_AS(isometry_group_order(6, 4), std::invalid_argument);
  CHECK_THROWS_AS(isometry_group_order(6, 0), std::invalid_argument);
}

TEST_CASE("transpositions (0 d) that are isometries mod H are exactly H (order 3..6)") {
  for (const auto& t : types_up_to(6)) {
    if (t.order() < 3) continue;
    const auto g = ConcreteGroup::from_type(t);
    for (const auto& h : all_subgroups(g)) {
      std::vector<ElementIndex> deltas{0};
      for (ElementIndex d = 1; d < g.order(); ++d) {
        if (is_isometry_mod(g, h, swap_permutation(static_cast<std::size_t>(g.order()), 0, d))) deltas.push_back(d);
      }
      REQUIRE(deltas == h.elements());
    }
  }
}

TEST_CASE("interstices of a closed Cayley group form a subgroup (random sets, order <= 8)") {
  std::mt19937_64 rng(5);
  for (const auto& t : types_up_to(8)) {
    if (t.order() < 3) continue;
    const auto g = ConcreteGroup::from_type(t);
    const auto n = static_cast<std::size_t>(g.order());
    for (int trial = 0; trial < (n == 8 ? 6 : 20); ++trial) {
      std::vector<Permutation> gens;
      for (ElementIndex x = 0; x < n; ++x) gens.push_back(translation(g, x));
      std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(n - 1));
      const int k = trial % 3;
      std::vector<Transposition> taus;
      for (int i = 0; i < k; ++i) {
        ElementIndex x = pick(rng), y = pick(rng);
        if (x == y) continue;
        gens.push_back(swap_permutation(n, x, y));
        taus.push_back({g.element_at(x), g.element_at(y)});
      }
      const auto k_group = closure(gens, n);
      std::set<ElementIndex> delta;
      for (ElementIndex d = 0; d < n; ++d) {
        if (d == 0 || k_group.count(swap_permutation(n, 0, d))) delta.insert(d);
      }
      for (auto a : delta) {
        REQUIRE(delta.count(g.negate(a)));
        for (auto b : delta) REQUIRE(delta.count(g.add(a, b)));
      }
      const auto expected = interstice_subgroup(g, taus).elements();
      REQUIRE(std::vector<ElementIndex>(delta.begin(), delta.end()) == expected);
    }
  }
}

TEST_CASE("isometry counts and the constant map (order <= 5)") {
  for (const auto& t : types_up_to(5)) {
    const auto g = ConcreteGroup::from_type(t);
    const auto n = static_cast<std::size_t>(g.order());
    const auto perms = all_perms(n);
    for (const auto& h : all_subgroups(g)) {
      std::vector<Permutation> isos;
      std::int64_t kernel = 0;
      for (const auto& p : perms) {
        if (!is_isometry_mod(g, h, p)) continue;
        isos.push_back(p);
        if (isometry_constant(g, h, p) == Element(g.rank(), 0)) ++kernel;
      }
      REQUIRE(make_big(static_cast<std::int64_t>(isos.size())) == isometry_group_order(g.order(), h.order()));
      BigInt f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(h.order()));
      BigInt expected;
      mpz_pow_ui(expected.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(g.order() / h.order()));
      REQUIRE(make_big(kernel) == expected);
      // c(s o r) = c(s) + c(r) as cosets.
      for (const auto& s : isos) {
        const auto cs = g.index_of(isometry_constant(g, h, s));
        for (const auto& r : isos) {
          const auto cr = g.index_of(isometry_constant(g, h, r));
          const auto csr = g.index_of(isometry_constant(g, h, s.compose(r)));
          REQUIRE(h.contains(g.subtract(csr, g.add(cs, cr))));
        }
      }
    }
  }
}
