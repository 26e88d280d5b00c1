#include "abelian/concrete_group.hpp"

#include <numeric>
#include <stdexcept>

namespace abelian {

namespace {

constexpr std::int64_t kAddTableMaxOrder = 512;

}  // namespace

ConcreteGroup::ConcreteGroup() : ConcreteGroup(std::vector<std::int64_t>{}) {}

ConcreteGroup::ConcreteGroup(std::vector<std::int64_t> moduli) {
  auto s = std::make_shared<State>();
  for (auto m : moduli) {
    if (m < 2) throw std::invalid_argument("ConcreteGroup: moduli must be >= 2");
  }
  s->moduli = std::move(moduli);
  const std::size_t k = s->moduli.size();
  s->strides.assign(k, 1);
  for (std::size_t i = k; i-- > 0;) {
    s->strides[i] = s->order;
    if (__builtin_mul_overflow(s->order, s->moduli[i], &s->order) ||
        s->order > (std::int64_t{1} << 24)) {
      throw std::invalid_argument("ConcreteGroup: order too large to enumerate");
    }
  }
  const auto n = static_cast<std::size_t>(s->order);
  s->coords.resize(n * k);
  s->orders.resize(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < k; ++i) {
      auto c = (static_cast<std::int64_t>(idx) / s->strides[i]) % s->moduli[i];
      s->coords[idx * k + i] = c;
      ord = std::lcm(ord, s->moduli[i] / std::gcd(s->moduli[i], c));
    }
    s->orders[idx] = ord;
  }
  if (s->order <= kAddTableMaxOrder) {
    s->add_table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::int64_t idx = 0;
        for (std::size_t i = 0; i < k; ++i) {
          idx += ((s->coords[a * k + i] + s->coords[b * k + i]) % s->moduli[i]) * s->strides[i];
        }
        s->add_table[a * n + b] = static_cast<ElementIndex>(idx);
      }
    }
  }
  state_ = std::move(s);
}

ConcreteGroup ConcreteGroup::from_type(const GroupType& type) {
  return ConcreteGroup(type.invariant_factors());
}

bool ConcreteGroup::is_valid(std::span<const std::int64_t> element) const {
  if (element.size() != rank()) return false;
  for (std::size_t i = 0; i < element.size(); ++i) {
    if (element[i] < 0 || element[i] >= state_->moduli[i]) return false;
  }
  return true;
}

ElementIndex ConcreteGroup::index_of(std::span<const std::int64_t> element) const {
  if (!is_valid(element)) {
    std::string s = "(";
    for (std::size_t i = 0; i < element.size(); ++i) {
      s += (i ? "," : "") + std::to_string(element[i]);
    }
    std::string m;
    for (auto x : state_->moduli) m += (m.empty() ? "" : ",") + std::to_string(x);
    throw std::invalid_argument("element " + s + ") is not a valid element of the group with moduli (" + m + ")");
  }
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < element.size(); ++i) idx += element[i] * state_->strides[i];
  return static_cast<ElementIndex>(idx);
}

Element ConcreteGroup::element_at(ElementIndex index) const {
  const std::size_t k = rank();
  auto first = state_->coords.begin() + static_cast<std::ptrdiff_t>(index * k);
  return Element(first, first + static_cast<std::ptrdiff_t>(k));
}

ElementIndex ConcreteGroup::add(ElementIndex a, ElementIndex b) const {
  const auto& s = *state_;
  if (!s.add_table.empty()) return s.add_table[a * static_cast<std::size_t>(s.order) + b];
  const std::size_t k = s.moduli.size();
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < k; ++i) {
    idx += ((s.coords[a * k + i] + s.coords[b * k + i]) % s.moduli[i]) * s.strides[i];
  }
  return static_cast<ElementIndex>(idx);
}

ElementIndex ConcreteGroup::negate(ElementIndex a) const {
  const auto& s = *state_;
  const std::size_t k = s.moduli.size();
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < k; ++i) {
    idx += ((s.moduli[i] - s.coords[a * k + i]) % s.moduli[i]) * s.strides[i];
  }
  return static_cast<ElementIndex>(idx);
}

ElementIndex ConcreteGroup::multiple(ElementIndex a, std::int64_t k) const {
  const auto& s = *state_;
  const std::size_t r = s.moduli.size();
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const std::int64_t m = s.moduli[i];
    const std::int64_t kk = ((k % m) + m) % m;
    idx += ((s.coords[a * r + i] * kk) % m) * s.strides[i];
  }
  return static_cast<ElementIndex>(idx);
}

std::string ConcreteGroup::format(ElementIndex a) const {
  std::string out = "(";
  auto e = element_at(a);
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + ")";
}

std::int64_t element_order(const ConcreteGroup& g, std::span<const std::int64_t> element) {
  return g.element_order(g.index_of(element));
}

}  // namespace abelian
