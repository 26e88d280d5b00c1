#pragma once

// Permutations of a concrete group's element list (indices as documented in
// concrete_group.hpp).

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "abelian/concrete_group.hpp"

namespace abelian {

class Permutation {
 public:
  Permutation() = default;
  /// image[i] = where i goes. Throws std::invalid_argument if not a bijection.
  explicit Permutation(std::vector<ElementIndex> image);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  ElementIndex operator()(ElementIndex x) const { return image_[x]; }
  const std::vector<ElementIndex>& image() const { return image_; }

  /// (this o other)(x) = this(other(x)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<ElementIndex> image_;
};

/// x -> x + g (the Cayley embedding of G into Sym(G)).
Permutation translation(const ConcreteGroup& g, ElementIndex by);
/// Swaps x and y, fixes everything else.
Permutation swap_permutation(std::size_t n, ElementIndex x, ElementIndex y);

}  // namespace abelian

template <>
struct std::hash<abelian::Permutation> {
  std::size_t operator()(const abelian::Permutation& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : p.image()) h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }
};
