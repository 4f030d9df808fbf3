#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace omegalab {

using Nat = std::uint64_t;

// Hard cap on derived periods/windows; anything larger signals runaway
// alignment rather than a meaningful instance.
inline constexpr Nat kWindowLimit = Nat{1} << 26;

inline Nat checked_mul(Nat a, Nat b) {
  if (a != 0 && b > std::numeric_limits<Nat>::max() / a)
    throw std::overflow_error("omegalab: arithmetic overflow");
  return a * b;
}

inline Nat checked_add(Nat a, Nat b) {
  if (b > std::numeric_limits<Nat>::max() - a)
    throw std::overflow_error("omegalab: arithmetic overflow");
  return a + b;
}

inline Nat lcm_checked(Nat a, Nat b) {
  if (a == 0 || b == 0) return 0;
  Nat l = checked_mul(a / std::gcd(a, b), b);
  if (l > kWindowLimit)
    throw std::overflow_error("omegalab: derived period exceeds window limit");
  return l;
}

inline Nat ceil_div(Nat a, Nat b) { return a == 0 ? 0 : (a - 1) / b + 1; }

}  // namespace omegalab
