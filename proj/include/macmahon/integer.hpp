#pragma once

// Overflow-checked 64-bit coefficient arithmetic. Every coefficient in the
// library goes through these helpers; a wrap is reported as Errc::overflow.

#include <cstdint>

#include "macmahon/error.hpp"

namespace macmahon {

using Coeff = std::int64_t;

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::overflow, "coefficient overflow in addition");
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) fail(Errc::overflow, "coefficient overflow in subtraction");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::overflow, "coefficient overflow in multiplication");
  return r;
}

/// C(n, k) with the combinatorial convention C(n, k) = 0 for k < 0 or k > n.
/// A negative top is a caller bug.
inline Coeff binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) fail(Errc::invalid_argument, "binomial: negative top argument");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Coeff r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    // r * (n - i) is divisible by (i + 1) at every step
    __int128 wide = static_cast<__int128>(r) * (n - i) / (i + 1);
    if (wide > INT64_MAX) fail(Errc::overflow, "binomial coefficient overflow");
    r = static_cast<Coeff>(wide);
  }
  return r;
}

inline Coeff sign_of_parity(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace macmahon
