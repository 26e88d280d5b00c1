#pragma once

// Exact scalars. Every value in the math core is an arbitrary-precision
// integer or a normalized rational; nothing here touches floating point.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace abelian {

using BigInt = mpz_class;
using Exact = mpq_class;

inline Exact make_exact(std::int64_t n) {
  return Exact(BigInt(static_cast<long>(n)));
}

inline BigInt make_big(std::int64_t n) { return BigInt(static_cast<long>(n)); }

/// Decimal rendering, "p/q" for non-integers. Round-trips through parse_exact.
inline std::string to_string(const Exact& v) { return v.get_str(10); }
inline std::string to_string(const BigInt& v) { return v.get_str(10); }

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Exact parse_exact(const std::string& text);

/// True when the rational has denominator one.
inline bool is_integer(const Exact& v) { return v.get_den() == 1; }

}  // namespace abelian
