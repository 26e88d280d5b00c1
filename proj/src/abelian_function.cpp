#include "abelian/abelian_function.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "abelian/errors.hpp"
#include "abelian/lattice.hpp"

namespace abelian {

struct AbelianFunction::State {
  std::string name;
  Rule rule;
  bool multiplicative = false;
  mutable std::mutex mutex;
  std::unordered_map<GroupType, Exact> memo;
};

const std::string& AbelianFunction::name() const { return state_->name; }
bool AbelianFunction::multiplicative_hint() const { return state_->multiplicative; }

AbelianFunction::AbelianFunction(std::string name, Rule rule, bool multiplicative_hint)
    : state_(std::make_shared<State>()) {
  state_->name = std::move(name);
  state_->rule = std::move(rule);
  state_->multiplicative = multiplicative_hint;
}

AbelianFunction AbelianFunction::from_values(std::string name,
                                             std::function<Exact(const GroupType&)> values,
                                             bool multiplicative_hint) {
  return AbelianFunction(
      std::move(name),
      [values = std::move(values)](const AbelianFunction&, const GroupType& g) { return values(g); },
      multiplicative_hint);
}

Exact AbelianFunction::operator()(const GroupType& g) const {
  {
    std::lock_guard lock(state_->mutex);
    if (auto it = state_->memo.find(g); it != state_->memo.end()) return it->second;
  }
  Exact value;
  const auto primes = factorize(g.order());
  if (state_->multiplicative && primes.size() > 1) {
    value = 1;
    for (auto [p, e] : primes) value *= (*this)(p_part(g, p));
  } else {
    value = state_->rule(*this, g);
  }
  std::lock_guard lock(state_->mutex);
  return state_->memo.try_emplace(g, std::move(value)).first->second;
}

Exact AbelianFunction::eval_direct(const GroupType& g) const { return state_->rule(*this, g); }

std::size_t AbelianFunction::memo_size() const {
  std::lock_guard lock(state_->mutex);
  return state_->memo.size();
}

AbelianFunction convolve(const AbelianFunction& f, const AbelianFunction& g) {
  const bool hint = f.multiplicative_hint() && g.multiplicative_hint();
  return AbelianFunction(
      "(" + f.name() + " * " + g.name() + ")",
      [f, g](const AbelianFunction&, const GroupType& group) {
        Exact sum = 0;
        for (const auto& entry : *lattice_census(group)) {
          sum += entry.count * f(entry.sub) * g(entry.quotient);
        }
        return sum;
      },
      hint);
}

AbelianFunction add(const AbelianFunction& f, const AbelianFunction& g) {
  return AbelianFunction::from_values("(" + f.name() + " + " + g.name() + ")",
                                      [f, g](const GroupType& x) { return Exact(f(x) + g(x)); });
}

AbelianFunction scale(const Exact& c, const AbelianFunction& f) {
  return AbelianFunction::from_values(to_string(c) + "·" + f.name(),
                                      [c, f](const GroupType& x) { return Exact(c * f(x)); },
                                      f.multiplicative_hint() && c == 1);
}

AbelianFunction pointwise(const AbelianFunction& f, const AbelianFunction& g) {
  return AbelianFunction::from_values("(" + f.name() + " . " + g.name() + ")",
                                      [f, g](const GroupType& x) { return Exact(f(x) * g(x)); },
                                      f.multiplicative_hint() && g.multiplicative_hint());
}

AbelianFunction inverse(const AbelianFunction& f) {
  const Exact at_trivial = f(GroupType{});
  if (at_trivial == 0) throw NotInvertibleError(f.name());
  return AbelianFunction(
      "inv(" + f.name() + ")",
      [f, at_trivial](const AbelianFunction& self, const GroupType& g) {
        if (g.is_trivial()) return Exact(1 / at_trivial);
        Exact sum = 0;
        for (const auto& entry : *lattice_census(g)) {
          if (entry.sub == g) continue;  // proper subgroups only
          sum += entry.count * self(entry.sub) * f(entry.quotient);
        }
        return Exact(-sum / at_trivial);
      },
      f.multiplicative_hint());
}

Exact mu_closed(const GroupType& g) {
  if (!is_elementary(g)) return 0;
  Exact value = 1;
  for (const auto& [p, parts] : primary(g)) {
    const auto dim = static_cast<unsigned long>(parts.size());
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(p), dim * (dim - 1) / 2);
    if (dim % 2 == 1) term = -term;
    value *= term;
  }
  return value;
}

Exact ArithmeticFunction::operator()(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("arithmetic functions are defined on n >= 1");
  return rule_(n);
}

ArithmeticFunction restrict_to_cyclic(const AbelianFunction& f) {
  return ArithmeticFunction([f](std::int64_t n) { return f(canonicalize({n})); });
}

Exact dirichlet_convolve_at(const ArithmeticFunction& f, const ArithmeticFunction& g, std::int64_t n) {
  Exact sum = 0;
  for (auto d : divisors(n)) sum += f(d) * g(n / d);
  return sum;
}

bool check_multiplicative(const AbelianFunction& f, std::int64_t order_bound) {
  if (f(GroupType{}) != 1) return false;
  for (std::int64_t a = 2; a <= order_bound; ++a) {
    for (std::int64_t b = a + 1; a * b <= order_bound; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (const auto& ga : types_of_order(a)) {
        for (const auto& gb : types_of_order(b)) {
          if (f.eval_direct(product(ga, gb)) != f(ga) * f(gb)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace abelian
