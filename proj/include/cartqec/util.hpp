#pragma once

#include <cstdint>

namespace cartqec {

/// Trial-division primality test; adequate for the desk-scale inputs used here.
bool is_prime(std::uint64_t v);

/// Exact integer square root: the largest x with x*x <= v. No floating point.
std::uint64_t isqrt(std::uint64_t v);

inline bool is_perfect_square(std::uint64_t v) {
  std::uint64_t s = isqrt(v);
  return s * s == v;
}

/// base^exp with an overflow cap; throws TooLarge if the result would exceed `cap`.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t cap);

std::uint32_t lcm_u32(std::uint32_t a, std::uint32_t b);

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace cartqec
