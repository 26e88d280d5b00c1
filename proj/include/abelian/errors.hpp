#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abelian {

/// A computation would exceed an explicit resource bound (lattice size,
/// enumeration count). Always names the bound that was hit.
class BoundError : public std::runtime_error {
 public:
  BoundError(const std::string& what_limit, std::int64_t bound,
             std::int64_t requested)
      : std::runtime_error(what_limit + " bound " + std::to_string(bound) +
                           " exceeded (requested " +
                           std::to_string(requested) + ")"),
        bound_(bound),
        requested_(requested) {}

  std::int64_t bound() const noexcept { return bound_; }
  std::int64_t requested() const noexcept { return requested_; }

 private:
  std::int64_t bound_;
  std::int64_t requested_;
};

class LatticeBoundError : public BoundError {
 public:
  LatticeBoundError(std::int64_t bound, std::int64_t order)
      : BoundError("lattice enumeration order", bound, order) {}
};

/// Convolution inverse requested for a function vanishing on the trivial group.
class NotInvertibleError : public std::domain_error {
 public:
  explicit NotInvertibleError(const std::string& name)
      : std::domain_error("abelian function '" + name +
                          "' vanishes on the trivial group and has no inverse") {}
};

/// Symmetric-group machinery is only valid for groups with at least 3 elements.
class UnsupportedOrderError : public std::invalid_argument {
 public:
  explicit UnsupportedOrderError(std::int64_t order)
      : std::invalid_argument("group of order " + std::to_string(order) +
                              " is not supported (need at least 3 elements)") {}
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace abelian
