#include "cartqec/util.hpp"

#include <numeric>

#include "cartqec/errors.hpp"

namespace cartqec {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  if (v % 3 == 0) return v == 3;
  for (std::uint64_t d = 5; d * d <= v; d += 6) {
    if (v % d == 0 || v % (d + 2) == 0) return false;
  }
  return true;
}

std::uint64_t isqrt(std::uint64_t v) {
  if (v < 2) return v;
  std::uint64_t x = v, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + v / x) / 2;
  }
  return x;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && result > cap / base)
      fail(Errc::TooLarge, "power " + std::to_string(base) + "^" + std::to_string(exp) +
                               " exceeds cap " + std::to_string(cap));
    result *= base;
  }
  return result;
}

std::uint32_t lcm_u32(std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(std::lcm(a, b));
}

}  // namespace cartqec
