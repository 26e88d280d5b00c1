#pragma once

// The convolution algebra of abelian functions.
//
// An AbelianFunction assigns an exact rational to every finite abelian group
// type. Values are memoized per canonical GroupType; the memo is guarded by
// a mutex and writes are idempotent, so one function object may be evaluated
// from several threads at once.
//
//   (f * g)(G) = sum over all subgroups H <= G of f(H) g(G/H)
//
// Functions flagged multiplicative (f(1) = 1, f(A x B) = f(A) f(B) for
// coprime orders) are evaluated on each primary component separately, which
// avoids enumerating the lattice of large mixed-order groups.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "abelian/exact.hpp"
#include "abelian/group_type.hpp"

namespace abelian {

class AbelianFunction {
 public:
  /// Rules receive the function itself so recursive definitions (inverse)
  /// can evaluate it on smaller groups through the memo.
  using Rule = std::function<Exact(const AbelianFunction& self, const GroupType& g)>;

  AbelianFunction(std::string name, Rule rule, bool multiplicative_hint = false);
  /// Convenience for rules that do not recurse.
  static AbelianFunction from_values(std::string name,
                                     std::function<Exact(const GroupType&)> values,
                                     bool multiplicative_hint = false);

  /// Memoized evaluation, using the primary-component fast path when hinted.
  Exact operator()(const GroupType& g) const;
  /// Applies the rule at g itself, bypassing the fast path and the memo
  /// (inner evaluations still use both). check_multiplicative uses this.
  Exact eval_direct(const GroupType& g) const;

  const std::string& name() const;
  bool multiplicative_hint() const;
  /// Number of memoized values.
  std::size_t memo_size() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

inline Exact eval(const AbelianFunction& f, const GroupType& g) { return f(g); }

AbelianFunction convolve(const AbelianFunction& f, const AbelianFunction& g);
AbelianFunction add(const AbelianFunction& f, const AbelianFunction& g);
AbelianFunction scale(const Exact& c, const AbelianFunction& f);
AbelianFunction pointwise(const AbelianFunction& f, const AbelianFunction& g);
/// Convolution inverse via the recursion over proper subgroups. Throws
/// NotInvertibleError when f vanishes on the trivial group.
AbelianFunction inverse(const AbelianFunction& f);

/// Closed form: 0 unless G is elementary, otherwise
/// prod_p (-1)^{d_p} p^{d_p (d_p - 1) / 2} with d_p = dim_p G.
Exact mu_closed(const GroupType& g);

class ArithmeticFunction {
 public:
  explicit ArithmeticFunction(std::function<Exact(std::int64_t)> rule) : rule_(std::move(rule)) {}
  /// n >= 1; throws std::invalid_argument otherwise.
  Exact operator()(std::int64_t n) const;

 private:
  std::function<Exact(std::int64_t)> rule_;
};

/// n -> f(Z/n).
ArithmeticFunction restrict_to_cyclic(const AbelianFunction& f);

/// Dirichlet convolution of arithmetic functions (reference for the
/// restriction morphism).
Exact dirichlet_convolve_at(const ArithmeticFunction& f, const ArithmeticFunction& g, std::int64_t n);

/// f(1) = 1 and f(A x B) = f(A) f(B) for every pair of coprime orders with
/// |A| |B| <= order_bound, f(A x B) evaluated without the fast path.
bool check_multiplicative(const AbelianFunction& f, std::int64_t order_bound);

}  // namespace abelian
