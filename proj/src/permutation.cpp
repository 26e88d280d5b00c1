#include "abelian/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace abelian {

Permutation::Permutation(std::vector<ElementIndex> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (auto x : image_) {
    if (x >= image_.size() || hit[x]) throw std::invalid_argument("Permutation: not a bijection");
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<ElementIndex> image(n);
  std::iota(image.begin(), image.end(), ElementIndex{0});
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("Permutation: size mismatch");
  Permutation out;
  out.image_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) out.image_[i] = image_[other.image_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.image_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) out.image_[image_[i]] = static_cast<ElementIndex>(i);
  return out;
}

Permutation translation(const ConcreteGroup& g, ElementIndex by) {
  std::vector<ElementIndex> image(static_cast<std::size_t>(g.order()));
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = g.add(static_cast<ElementIndex>(x), by);
  return Permutation(std::move(image));
}

Permutation swap_permutation(std::size_t n, ElementIndex x, ElementIndex y) {
  auto p = Permutation::identity(n);
  auto image = p.image();
  std::swap(image.at(x), image.at(y));
  return Permutation(std::move(image));
}

}  // namespace abelian
