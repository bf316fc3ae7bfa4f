#pragma once

#include <cstdint>

#include "cartqec/footprint.hpp"

namespace cartqec {

/// [n, k, d] over F_q; d_exact records whether d is the true minimum distance
/// (always the case for the improved codes C(L(delta))).
struct ClassicalParams {
  std::uint64_t n = 0, k = 0, d = 0;
  bool d_exact = true;
};

enum class Construction { Css, Steane };

/// [[n, k, d]]_q; d_is_lower_bound marks distances only guaranteed from below
/// (all Steane-enlarged outputs).
struct QuantumParams {
  std::uint64_t n = 0, k = 0, d = 0;
  bool d_is_lower_bound = false;
  std::uint64_t q = 0;
  Construction construction = Construction::Css;
};

enum class GvVerdict { Exceeds, Meets, Neither };

struct GvClass {
  GvVerdict verdict = GvVerdict::Neither;
  std::uint64_t applied_k = 0;  // k, or k-1 when n and k have different parity
};

/// Parameters of C(L(delta)): n, k = |L(delta)|, d = the smallest attained
/// sigma-value >= delta (equals delta whenever tau(delta) > 0).
/// EmptyCode when delta = n + 1.
ClassicalParams classical_params(const ProductSpec& spec, std::uint64_t delta);

/// [[n, 2k - n, d]]_q from the dual-containing code C(L(delta));
/// NotDualContaining when the hypothesis fails.
QuantumParams css_params(const ProductSpec& spec, std::uint64_t delta);

struct SteaneResult {
  QuantumParams params;
  std::uint64_t increase = 0;  // tau(delta - 1) = dim C(L(delta-1)) - dim C(L(delta))
  bool prop4_applies = false;  // 2 < delta <= p^{r_2} + 1 (the guaranteed range)
};

/// Steane enlargement of C(L(delta)) by C(L(delta - 1)):
/// [[n, 2k - n + tau(delta-1), >= min{delta, ceil((1+1/q)(delta-1))}]]_q.
/// Requires delta >= 3 and tau(delta-1) >= 2 (EnlargementTooSmall otherwise).
SteaneResult steane_params(const ProductSpec& spec, std::uint64_t delta);

/// The stabilizer-code existence inequality
///   sum_{i=1}^{d-1} (q^2 - 1)^i * C(n, i) < q^{n-k+2} - 1,
/// evaluated in exact unbounded integers. Requires n > k >= 2, d >= 2,
/// n = k (mod 2).
bool gv_satisfied(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q);

/// Exceeds when the inequality fails at (n, applied_k, d); Meets when it
/// holds at d but fails at d + 1; Neither otherwise. applied_k = k - 1 when
/// n and k differ in parity.
GvClass gv_classify(const QuantumParams& params);

/// (n - k + 2) - 2d; zero means the quantum Singleton bound is met (MDS).
/// Codes emitted by css_params/steane_params always have slack >= 0.
std::int64_t singleton_slack(const QuantumParams& params);

}  // namespace cartqec
