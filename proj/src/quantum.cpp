#include "cartqec/quantum.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "cartqec/util.hpp"

namespace cartqec {

namespace {

using BigInt = boost::multiprecision::cpp_int;

void check_delta_range(const ProductSpec& spec, std::uint64_t delta) {
  if (delta < 1 || delta > spec.n() + 1)
    fail(Errc::BadDelta, "delta = " + std::to_string(delta) + " outside [1, n+1] with n = " +
                             std::to_string(spec.n()));
}

// Smallest attained sigma-value >= delta. count_sigma_below is nondecreasing,
// so binary-search the first threshold that admits a new value.
std::uint64_t min_attained_sigma(const ProductSpec& spec, std::uint64_t delta) {
  if (delta <= spec.coord_size(0)) return delta;  // single-coordinate value exists
  const std::uint64_t below = count_sigma_below(spec, delta);
  std::uint64_t lo = delta + 1, hi = spec.n() + 1;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (count_sigma_below(spec, mid) > below)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo - 1;
}

void singleton_alarm(const QuantumParams& qp) {
  if (singleton_slack(qp) < 0)
    fail(Errc::Internal, "constructed parameters violate the quantum Singleton bound");
}

}  // namespace

ClassicalParams classical_params(const ProductSpec& spec, std::uint64_t delta) {
  check_delta_range(spec, delta);
  if (delta == spec.n() + 1)
    fail(Errc::EmptyCode, "delta = n + 1 gives an empty defining set");
  ClassicalParams out;
  out.n = spec.n();
  out.k = spec.n() - count_sigma_below(spec, delta);
  out.d = tau(spec, delta) > 0 ? delta : min_attained_sigma(spec, delta);
  out.d_exact = true;  // L(delta) is decreasing, so the footprint bound is attained
  return out;
}

QuantumParams css_params(const ProductSpec& spec, std::uint64_t delta) {
  if (!is_dual_containing(spec, delta))
    fail(Errc::NotDualContaining,
         "C(L(delta)) does not contain its dual at delta = " + std::to_string(delta) +
             " (some monomial has mu < delta but sigma < delta)");
  const ClassicalParams cls = classical_params(spec, delta);
  if (2 * cls.k < cls.n) fail(Errc::Internal, "dual-containing code with k < n - k");
  QuantumParams qp;
  qp.n = cls.n;
  qp.k = 2 * cls.k - cls.n;
  qp.d = cls.d;
  qp.d_is_lower_bound = false;
  qp.q = spec.ambient_q();
  qp.construction = Construction::Css;
  singleton_alarm(qp);
  return qp;
}

SteaneResult steane_params(const ProductSpec& spec, std::uint64_t delta) {
  if (delta < 3)
    fail(Errc::BadDelta, "Steane enlargement needs delta >= 3, got " + std::to_string(delta));
  if (!is_dual_containing(spec, delta))
    fail(Errc::NotDualContaining,
         "C(L(delta)) does not contain its dual at delta = " + std::to_string(delta));
  const std::uint64_t increase = tau(spec, delta - 1);
  if (increase < 2)
    fail(Errc::EnlargementTooSmall, "tau(delta - 1) = " + std::to_string(increase) +
                                        " < 2, so C(L(delta-1)) is not large enough");
  const ClassicalParams cls = classical_params(spec, delta);
  const std::uint64_t q = spec.ambient_q();
  // ceil((1 + 1/q)(delta-1)) = (delta-1) + ceil((delta-1)/q); equals delta
  // whenever delta - 1 <= q.
  const std::uint64_t enlarged_d = (delta - 1) + ceil_div(delta - 1, q);
  SteaneResult out;
  out.params.n = cls.n;
  out.params.k = 2 * cls.k - cls.n + increase;
  out.params.d = std::min(delta, enlarged_d);
  out.params.d_is_lower_bound = true;
  out.params.q = q;
  out.params.construction = Construction::Steane;
  out.increase = increase;
  out.prop4_applies = spec.m() >= 2 && delta > 2 && delta <= spec.coord_size(1) + 1;
  singleton_alarm(out.params);
  return out;
}

bool gv_satisfied(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q) {
  if (n % 2 != k % 2)
    fail(Errc::ParityViolation, "n and k must have equal parity (n = " + std::to_string(n) +
                                    ", k = " + std::to_string(k) + ")");
  if (k < 2 || k >= n) fail(Errc::BadRange, "need n > k >= 2");
  if (d < 2) fail(Errc::BadRange, "need d >= 2");
  const BigInt q2m1 = BigInt(q) * q - 1;
  const BigInt rhs = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - k + 2)) - 1;
  BigInt lhs = 0;
  BigInt binom = 1;   // C(n, i), updated incrementally
  BigInt power = 1;   // (q^2 - 1)^i
  for (std::uint64_t i = 1; i <= d - 1 && i <= n; ++i) {
    binom = binom * (n - i + 1) / i;
    power *= q2m1;
    lhs += power * binom;
    if (lhs >= rhs) return false;  // sums only grow
  }
  return lhs < rhs;
}

GvClass gv_classify(const QuantumParams& params) {
  GvClass out;
  out.applied_k = (params.n % 2 == params.k % 2) ? params.k : params.k - 1;
  if (params.k < 2 || out.applied_k < 2)
    fail(Errc::KTooSmall, "GV classification needs k >= 2");
  if (!gv_satisfied(params.n, out.applied_k, params.d, params.q)) {
    out.verdict = GvVerdict::Exceeds;
  } else if (!gv_satisfied(params.n, out.applied_k, params.d + 1, params.q)) {
    out.verdict = GvVerdict::Meets;
  } else {
    out.verdict = GvVerdict::Neither;
  }
  return out;
}

std::int64_t singleton_slack(const QuantumParams& params) {
  return static_cast<std::int64_t>(params.n - params.k + 2) - static_cast<std::int64_t>(2 * params.d);
}

}  // namespace cartqec
