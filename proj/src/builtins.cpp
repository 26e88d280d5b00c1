#include "abelian/builtins.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <stdexcept>

namespace abelian::builtins {

namespace {

// Parameterized families are cached per parameter.
template <typename Make>
const AbelianFunction& cached(const std::string& family, int param, Make make) {
  static std::recursive_mutex mutex;
  static std::map<std::pair<std::string, int>, AbelianFunction> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({family, param});
  if (it == cache.end()) it = cache.emplace(std::pair{family, param}, make()).first;
  return it->second;
}

void require_non_negative(int v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be non-negative");
}

// Gives a composite a short public name. Top-level evaluation stays direct so
// the wrapper adds no shortcut of its own.
AbelianFunction renamed(std::string name, const AbelianFunction& f) {
  return AbelianFunction(
      std::move(name), [f](const AbelianFunction&, const GroupType& g) { return f.eval_direct(g); },
      f.multiplicative_hint());
}

}  // namespace

const AbelianFunction& delta() {
  static const AbelianFunction f = AbelianFunction::from_values(
      "delta", [](const GroupType& g) { return Exact(g.is_trivial() ? 1 : 0); }, true);
  return f;
}

const AbelianFunction& one() {
  static const AbelianFunction f =
      AbelianFunction::from_values("one", [](const GroupType&) { return Exact(1); }, true);
  return f;
}

const AbelianFunction& card() {
  static const AbelianFunction f = AbelianFunction::from_values(
      "card", [](const GroupType& g) { return make_exact(g.order()); }, true);
  return f;
}

const AbelianFunction& t_pow_card(int t) {
  require_non_negative(t, "t");
  return cached("tpow", t, [t] {
    return AbelianFunction::from_values("tpow:" + std::to_string(t), [t](const GroupType& g) {
      BigInt v;
      mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(t),
                    static_cast<unsigned long>(g.order()));
      return Exact(v);
    });
  });
}

const AbelianFunction& card_pow_t(int t) {
  require_non_negative(t, "t");
  return cached("cardpow", t, [t] {
    return AbelianFunction::from_values(
        "cardpow:" + std::to_string(t),
        [t](const GroupType& g) {
          BigInt v;
          mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(g.order()),
                        static_cast<unsigned long>(t));
          return Exact(v);
        },
        true);
  });
}

const AbelianFunction& binom_card(int d) {
  require_non_negative(d, "d");
  return cached("binom", d, [d] {
    return AbelianFunction::from_values("binom:" + std::to_string(d), [d](const GroupType& g) {
      BigInt v;
      mpz_bin_uiui(v.get_mpz_t(), static_cast<unsigned long>(g.order()),
                   static_cast<unsigned long>(d));
      return Exact(v);
    });
  });
}

const AbelianFunction& mu() {
  static const AbelianFunction f = renamed("mu", inverse(one()));
  return f;
}

const AbelianFunction& phi() {
  static const AbelianFunction f = renamed("phi", convolve(mu(), card()));
  return f;
}

const AbelianFunction& n_t(int t) {
  require_non_negative(t, "t");
  return cached("nt", t, [t] { return renamed("nt:" + std::to_string(t), convolve(mu(), t_pow_card(t))); });
}

const AbelianFunction& subgroup_count() {
  static const AbelianFunction f = renamed("nsub", convolve(one(), one()));
  return f;
}

const AbelianFunction& generating_tuples(int t) {
  require_non_negative(t, "t");
  return cached("gentuples", t, [t] {
    return renamed("gentuples:" + std::to_string(t), convolve(mu(), card_pow_t(t)));
  });
}

const AbelianFunction& generating_subsets_of_size(int d) {
  require_non_negative(d, "d");
  return cached("gensubsets", d, [d] {
    return renamed("gensubsets:" + std::to_string(d), convolve(mu(), binom_card(d)));
  });
}

std::optional<AbelianFunction> by_name(const std::string& name) {
  if (name == "delta") return delta();
  if (name == "one") return one();
  if (name == "card") return card();
  if (name == "mu") return mu();
  if (name == "phi") return phi();
  if (name == "nsub") return subgroup_count();

  const auto colon = name.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string family = name.substr(0, colon);
  const std::string arg = name.substr(colon + 1);
  int param = 0;
  auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), param);
  if (arg.empty() || ec != std::errc{} || end != arg.data() + arg.size() || param < 0) {
    return std::nullopt;
  }
  if (family == "nt") return n_t(param);
  if (family == "gentuples") return generating_tuples(param);
  if (family == "gensubsets") return generating_subsets_of_size(param);
  if (family == "tpow") return t_pow_card(param);
  if (family == "cardpow") return card_pow_t(param);
  if (family == "binom") return binom_card(param);
  return std::nullopt;
}

std::vector<std::string> names() {
  return {"delta", "one", "card", "mu", "phi", "nsub", "nt:<t>", "gentuples:<t>",
          "gensubsets:<d>", "tpow:<t>", "cardpow:<t>", "binom:<d>"};
}

}  // namespace abelian::builtins
