#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace slnkit {

/// Natural numbers used for variable values, heap addresses and heap values.
using Nat = std::uint64_t;

inline Nat checked_add(Nat a, Nat b) {
  if (a > std::numeric_limits<Nat>::max() - b) {
    throw std::overflow_error("natural number addition overflows 64 bits");
  }
  return a + b;
}

inline Nat checked_mul(Nat a, Nat b) {
  if (a != 0 && b > std::numeric_limits<Nat>::max() / a) {
    throw std::overflow_error("natural number multiplication overflows 64 bits");
  }
  return a * b;
}

}  // namespace slnkit
