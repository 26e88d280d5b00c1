#include "abelian/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "abelian/builtins.hpp"
#include "abelian/concrete_group.hpp"
#include "abelian/counting.hpp"
#include "abelian/group_type.hpp"
#include "abelian/lattice.hpp"
#include "abelian/oracle.hpp"
#include "abelian/permutation.hpp"
#include "abelian/symgen.hpp"

namespace abelian::verify {

namespace {

template <typename A, typename B>
void expect_equal(SweepReport& report, const std::string& what, const A& formula, const B& oracle) {
  ++report.checked;
  if (!(formula == oracle)) {
    std::ostringstream line;
    line << what << ": formula " << formula << " oracle " << oracle;
    report.mismatches.push_back(line.str());
  }
}

std::string label(const std::string& fn, const GroupType& g) { return fn + "(" + g.to_string() + ")"; }

std::string label(const std::string& fn, const GroupType& a, const GroupType& b) {
  return fn + "(" + a.to_string() + "; " + b.to_string() + ")";
}

BigInt factorial(std::int64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

// Translations by the coordinate generators; together they generate every
// translation of G.
std::vector<Permutation> translation_generators(const ConcreteGroup& g) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    Element e(g.rank(), 0);
    e[i] = 1;
    gens.push_back(translation(g, g.index_of(e)));
  }
  return gens;
}

void check_transposition_set(SweepReport& report, const ConcreteGroup& g,
                             const std::vector<std::pair<ElementIndex, ElementIndex>>& pairs,
                             const BigInt& full) {
  std::vector<Permutation> gens = translation_generators(g);
  std::vector<Transposition> taus;
  std::string text;
  for (const auto& [x, y] : pairs) {
    taus.push_back({g.element_at(x), g.element_at(y)});
    gens.push_back(swap_permutation(static_cast<std::size_t>(g.order()), x, y));
    text += (text.empty() ? "" : ";") + g.format(x) + ">" + g.format(y);
  }
  const bool closure_full = make_big(oracle::permutation_closure(g, gens)) == full;
  expect_equal(report, "symgen " + g.type().to_string() + " [" + text + "]",
               generates_full_symmetric(g, taus), closure_full);
}

}  // namespace

SweepReport homs(std::int64_t max_order) {
  SweepReport report;
  const auto types = types_up_to(max_order);
  for (const auto& a : types) {
    const auto ca = ConcreteGroup::from_type(a);
    for (const auto& b : types) {
      const auto counts = oracle::enumerate_homs(ca, ConcreteGroup::from_type(b));
      expect_equal(report, label("hom", a, b), hom_count(a, b), make_big(counts.hom));
      expect_equal(report, label("mono", a, b), mono_count(a, b), make_big(counts.mono));
      expect_equal(report, label("epi", a, b), epi_count(a, b), make_big(counts.epi));
      if (a == b) expect_equal(report, label("aut", b), aut_count(b), make_big(counts.mono));
    }
  }
  return report;
}

SweepReport generating_subsets(std::int64_t max_order) {
  SweepReport report;
  const auto& n2 = builtins::n_t(2);
  for (const auto& g : types_up_to(max_order)) {
    expect_equal(report, label("nt:2", g), n2(g),
                 make_exact(oracle::count_generating_subsets(ConcreteGroup::from_type(g))));
  }
  return report;
}

namespace {

bool within_function_bound(std::int64_t t, std::int64_t n) {
  std::int64_t total = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    total *= t;
    if (total > oracle::kMaxFunctionCount) return false;
  }
  return true;
}

}  // namespace

SweepReport free_functions(std::int64_t max_order, std::int64_t max_t) {
  SweepReport report;
  for (const auto& g : types_up_to(max_order)) {
    const auto cg = ConcreteGroup::from_type(g);
    for (std::int64_t t = 1; t <= max_t; ++t) {
      if (!within_function_bound(t, g.order())) continue;
      const auto& nt = builtins::n_t(static_cast<int>(t));
      expect_equal(report, label(nt.name(), g), nt(g), make_exact(oracle::count_free_functions(cg, t)));
    }
  }
  return report;
}

SweepReport stabilizer_partition(std::int64_t max_order, std::int64_t max_t) {
  SweepReport report;
  for (const auto& g : types_up_to(max_order)) {
    const auto cg = ConcreteGroup::from_type(g);
    const auto subgroups = all_subgroups(cg);
    for (std::int64_t t = 1; t <= max_t; ++t) {
      if (!within_function_bound(t, g.order())) continue;
      std::int64_t total = 0;
      for (const auto& h : subgroups) total += oracle::count_functions_with_stabilizer(cg, h, t);
      BigInt expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(t), static_cast<unsigned long>(g.order()));
      expect_equal(report, "stabilizer sum t=" + std::to_string(t) + " " + g.to_string(), expected,
                   make_big(total));
    }
  }
  return report;
}

SweepReport symmetric_generation(std::int64_t max_order, std::int64_t exhaustive_order,
                                 std::int64_t samples, std::uint64_t seed) {
  SweepReport report;
  std::mt19937_64 rng(seed);
  for (const auto& type : types_up_to(max_order)) {
    if (type.order() < 3) continue;
    const auto g = ConcreteGroup::from_type(type);
    const auto n = static_cast<ElementIndex>(g.order());
    const BigInt full = factorial(g.order());
    std::vector<std::pair<ElementIndex, ElementIndex>> all;
    for (ElementIndex x = 0; x < n; ++x) {
      for (ElementIndex y = x + 1; y < n; ++y) all.emplace_back(x, y);
    }
    if (g.order() <= exhaustive_order) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
        std::vector<std::pair<ElementIndex, ElementIndex>> chosen;
        for (std::size_t i = 0; i < all.size(); ++i) {
          if ((mask >> i) & 1U) chosen.push_back(all[i]);
        }
        check_transposition_set(report, g, chosen, full);
      }
    } else {
      // Small sets, so both outcomes show up.
      std::uniform_int_distribution<std::size_t> size_dist(0, 3);
      for (std::int64_t s = 0; s < samples; ++s) {
        auto pool = all;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(size_dist(rng));
        check_transposition_set(report, g, pool, full);
      }
    }
  }
  for (std::int64_t n = 3; n <= max_order; ++n) {
    const ConcreteGroup g({n});
    const BigInt full = factorial(n);
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = 0; j < n; ++j) {
        if (i == j) continue;
        auto gens = translation_generators(g);
        gens.push_back(swap_permutation(static_cast<std::size_t>(n), static_cast<ElementIndex>(i),
                                        static_cast<ElementIndex>(j)));
        const bool closure_full = make_big(oracle::permutation_closure(g, gens)) == full;
        expect_equal(report,
                     "cycle n=" + std::to_string(n) + " (" + std::to_string(i) + " " + std::to_string(j) + ")",
                     cycle_transposition_generates(n, i, j), closure_full);
      }
    }
  }
  return report;
}

SweepReport isometries(std::int64_t max_order) {
  SweepReport report;
  for (const auto& type : types_up_to(max_order)) {
    const auto g = ConcreteGroup::from_type(type);
    for (const auto& h : all_subgroups(g)) {
      const std::string where = type.to_string() + " H=" + h.abstract_type().to_string() + " order " +
                                std::to_string(h.order());
      expect_equal(report, "isometries " + where, isometry_group_order(g.order(), h.order()),
                   make_big(oracle::enumerate_isometries(g, h)));
      BigInt kernel;
      mpz_pow_ui(kernel.get_mpz_t(), factorial(h.order()).get_mpz_t(),
                 static_cast<unsigned long>(g.order() / h.order()));
      expect_equal(report, "kernel " + where, kernel,
                   make_big(oracle::enumerate_coset_preserving_isometries(g, h)));
    }
  }
  return report;
}

SweepReport mobius(std::int64_t max_order) {
  SweepReport report;
  const auto& mu = builtins::mu();
  for (const auto& g : types_up_to(max_order)) expect_equal(report, label("mu", g), mu(g), mu_closed(g));
  return report;
}

SweepReport subgroup_counts(std::int64_t max_order) {
  SweepReport report;
  for (const auto& a : types_up_to(max_order)) {
    std::map<GroupType, std::int64_t> by_type;
    for (const auto& h : all_subgroups(ConcreteGroup::from_type(a))) ++by_type[subgroup_type_via_kernel(h)];
    for (auto d : divisors(a.order())) {
      for (const auto& b : types_of_order(d)) {
        const auto it = by_type.find(b);
        expect_equal(report, label("subcount", b, a), sub_count(b, a),
                     make_big(it == by_type.end() ? 0 : it->second));
      }
    }
  }
  return report;
}

SweepReport element_profiles(std::int64_t max_order) {
  SweepReport report;
  for (std::int64_t n = 1; n <= max_order; ++n) {
    const auto types = types_of_order(n);
    std::vector<OrderProfile> profiles;
    for (const auto& t : types) profiles.push_back(element_order_profile(t));
    for (std::size_t i = 0; i < types.size(); ++i) {
      for (std::size_t j = i + 1; j < types.size(); ++j) {
        ++report.checked;
        if (profiles[i] == profiles[j]) {
          report.mismatches.push_back("same element orders: " + types[i].to_string() + " and " +
                                      types[j].to_string());
        }
      }
    }
  }
  return report;
}

std::vector<std::string> suite_names() {
  return {"homs", "gensubsets", "free", "stabilizers", "symgen", "isometries", "mu", "subcount", "profiles"};
}

SweepReport run_suite(const std::string& name, std::int64_t bound) {
  if (name == "homs") return homs(bound);
  if (name == "gensubsets") return generating_subsets(bound);
  if (name == "free") return free_functions(bound);
  if (name == "stabilizers") return stabilizer_partition(bound);
  if (name == "symgen") return symmetric_generation(bound);
  if (name == "isometries") return isometries(bound);
  if (name == "mu") return mobius(bound);
  if (name == "subcount") return subgroup_counts(bound);
  if (name == "profiles") return element_profiles(bound);
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

}  // namespace abelian::verify
