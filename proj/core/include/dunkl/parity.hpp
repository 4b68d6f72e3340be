#pragma once

#include <stdexcept>

namespace dunkl {

/// Eigenvalue s of a reflection operator.
enum class Parity : int { even = 1, odd = -1 };

constexpr int sign(Parity p) noexcept { return static_cast<int>(p); }

/// 0 for even, 1 for odd: the exponent (1 - s)/2.
constexpr int odd_flag(Parity p) noexcept { return p == Parity::odd ? 1 : 0; }

constexpr Parity parity_from_sign(int s) {
  if (s == 1) return Parity::even;
  if (s == -1) return Parity::odd;
  throw std::invalid_argument("parity must be +1 or -1");
}

constexpr char parity_char(Parity p) noexcept { return p == Parity::even ? '+' : '-'; }

}  // namespace dunkl
