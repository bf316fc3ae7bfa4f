#include "cartqec/footprint.hpp"

#include <algorithm>
#include <map>
#include <span>

#include "cartqec/util.hpp"

namespace cartqec {

namespace {
constexpr std::uint64_t kNCap = std::uint64_t{1} << 61;
constexpr std::uint64_t kAmbientQCap = std::uint64_t{1} << 62;
}  // namespace

ProductSpec::ProductSpec(std::uint32_t p, std::vector<std::uint32_t> r_vec)
    : p_(p), r_vec_(std::move(r_vec)) {
  init(false);
}

ProductSpec::ProductSpec(std::uint32_t p, std::vector<std::uint32_t> r_vec, std::uint32_t ambient_r)
    : p_(p), r_vec_(std::move(r_vec)), ambient_r_(ambient_r) {
  init(true);
}

void ProductSpec::init(bool ambient_given) {
  if (!is_prime(p_)) fail(Errc::CompositeP, "p = " + std::to_string(p_) + " is not prime");
  if (r_vec_.empty()) fail(Errc::InvalidSpec, "r vector must be nonempty");
  for (std::size_t i = 0; i < r_vec_.size(); ++i) {
    if (r_vec_[i] < 1) fail(Errc::InvalidSpec, "every r_i must be >= 1");
    if (i > 0 && r_vec_[i] > r_vec_[i - 1])
      fail(Errc::InvalidSpec, "r vector must be non-increasing (r_1 >= ... >= r_m)");
  }
  if (!ambient_given) {
    ambient_r_ = 1;
    for (auto ri : r_vec_) ambient_r_ = lcm_u32(ambient_r_, ri);
  } else {
    for (auto ri : r_vec_) {
      if (ambient_r_ % ri != 0)
        fail(Errc::IncompatibleAmbient, "r_i = " + std::to_string(ri) +
                                            " does not divide ambient r = " +
                                            std::to_string(ambient_r_));
    }
  }
  sizes_.reserve(r_vec_.size());
  n_ = 1;
  for (auto ri : r_vec_) {
    const std::uint64_t s = checked_pow(p_, ri, kNCap);
    sizes_.push_back(s);
    if (n_ > kNCap / s) fail(Errc::TooLarge, "point count n overflows the supported range");
    n_ *= s;
  }
}

std::uint64_t ProductSpec::ambient_q() const { return checked_pow(p_, ambient_r_, kAmbientQCap); }

void ProductSpec::validate_exponent(const Exponent& a) const {
  if (a.size() != m()) fail(Errc::OutOfRange, "exponent vector has wrong length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= sizes_[i])
      fail(Errc::OutOfRange, "exponent a_" + std::to_string(i + 1) + " = " +
                                 std::to_string(a[i]) + " is outside [0, p^{r_i})");
  }
}

std::uint64_t sigma(const ProductSpec& spec, const Exponent& a) {
  spec.validate_exponent(a);
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < a.size(); ++i) v *= spec.coord_size(i) - a[i];
  return v;
}

std::uint64_t mu(const ProductSpec& spec, const Exponent& a) {
  spec.validate_exponent(a);
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < a.size(); ++i) v *= a[i] + std::uint64_t{1};
  return v;
}

Exponent complement(const ProductSpec& spec, const Exponent& a) {
  spec.validate_exponent(a);
  Exponent b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    b[i] = static_cast<std::uint32_t>(spec.coord_size(i) - 1 - a[i]);
  return b;
}

namespace {

void check_delta(const ProductSpec& spec, std::uint64_t delta) {
  if (delta < 1 || delta > spec.n() + 1)
    fail(Errc::BadDelta,
         "delta = " + std::to_string(delta) + " outside [1, n+1] with n = " + std::to_string(spec.n()));
}

}  // namespace

DefiningSet improved_defining_set(const ProductSpec& spec, std::uint64_t delta) {
  check_delta(spec, delta);
  DefiningSet set{spec, {}};
  for_each_exponent(spec, [&](const Exponent& a) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < a.size(); ++i) v *= spec.coord_size(i) - a[i];
    if (v >= delta) set.members.push_back(a);
  });
  return set;
}

DefiningSet dual_defining_set(const ProductSpec& spec, std::uint64_t delta) {
  check_delta(spec, delta);
  DefiningSet set{spec, {}};
  for_each_exponent(spec, [&](const Exponent& a) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < a.size(); ++i) v *= a[i] + std::uint64_t{1};
    if (v < delta) set.members.push_back(a);
  });
  return set;
}

bool is_dual_containing(const ProductSpec& spec, std::uint64_t delta) {
  check_delta(spec, delta);
  // (a_i+1)(s_i-a_i) >= s_i, so mu(a)*sigma(a) >= n; when delta(delta-1) <= n
  // any a with mu(a) < delta has sigma(a) > n/delta >= delta - 1.
  if (static_cast<unsigned __int128>(delta) * (delta - 1) <= spec.n()) return true;
  bool ok = true;
  for_each_exponent(spec, [&](const Exponent& a) {
    if (!ok) return;
    std::uint64_t muv = 1, sigmav = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      muv *= a[i] + std::uint64_t{1};
      sigmav *= spec.coord_size(i) - a[i];
    }
    if (muv < delta && sigmav < delta) ok = false;
  });
  return ok;
}

bool monomials_orthogonal(const ProductSpec& spec, const Exponent& a, const Exponent& b) {
  spec.validate_exponent(a);
  spec.validate_exponent(b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t e = std::uint64_t{a[i]} + b[i];
    if (e == 0 || e % (spec.coord_size(i) - 1 == 0 ? 1 : spec.coord_size(i) - 1) != 0) return true;
  }
  return false;
}

namespace {

std::uint64_t tau_rec(std::span<const std::uint64_t> sizes, std::uint64_t s,
                      std::uint64_t* leaf_calls) {
  if (sizes.size() == 1) {
    if (leaf_calls) ++*leaf_calls;
    return s <= sizes[0] ? 1 : 0;
  }
  std::uint64_t count = 0;
  const std::uint64_t cap = std::min(sizes[0], s);
  for (std::uint64_t d = 1; d <= cap; ++d) {
    if (s % d == 0) count += tau_rec(sizes.subspan(1), s / d, leaf_calls);
  }
  return count;
}

}  // namespace

std::uint64_t tau(const ProductSpec& spec, std::uint64_t s, std::uint64_t* leaf_calls) {
  if (leaf_calls) *leaf_calls = 0;
  if (s == 0) return 0;
  return tau_rec(std::span<const std::uint64_t>(spec.coord_sizes()), s, leaf_calls);
}

TauBound tau_lower_bound(const ProductSpec& spec, std::uint64_t s) {
  if (s < 2 || s > spec.coord_size(0))
    fail(Errc::BoundUndefined,
         "s = " + std::to_string(s) + " outside [2, p^{r_1}] with p^{r_1} = " +
             std::to_string(spec.coord_size(0)));
  TauBound out;
  for (std::size_t i = 0; i < spec.m() && s <= spec.coord_size(i); ++i) ++out.K;
  const std::uint64_t k = out.K;
  if (is_prime(s)) {
    out.bound = k;
    out.exact = true;
  } else if (is_perfect_square(s)) {
    out.bound = k + k * (k - 1) / 2;
  } else {
    out.bound = k * k;
  }
  return out;
}

namespace {

// Counts tuples (d_i, ..., d_m), 1 <= d_j <= s_j, with product < bound.
// Divisors with equal ceil(bound/d) are handled as one block.
std::uint64_t count_below_rec(const std::vector<std::uint64_t>& sizes, std::size_t i,
                              std::uint64_t bound,
                              std::vector<std::map<std::uint64_t, std::uint64_t>>& memo) {
  if (bound <= 1) return 0;
  if (i == sizes.size()) return 1;
  auto it = memo[i].find(bound);
  if (it != memo[i].end()) return it->second;
  std::uint64_t total = 0;
  const std::uint64_t cap = std::min(sizes[i], bound - 1);
  std::uint64_t d = 1;
  while (d <= cap) {
    const std::uint64_t qv = ceil_div(bound, d);   // qv >= 2 since d <= bound - 1
    const std::uint64_t end = std::min(cap, (bound - 1) / (qv - 1));
    total += (end - d + 1) * count_below_rec(sizes, i + 1, qv, memo);
    d = end + 1;
  }
  memo[i].emplace(bound, total);
  return total;
}

}  // namespace

std::uint64_t count_sigma_below(const ProductSpec& spec, std::uint64_t delta) {
  check_delta(spec, delta);
  std::vector<std::map<std::uint64_t, std::uint64_t>> memo(spec.m());
  return count_below_rec(spec.coord_sizes(), 0, delta, memo);
}

SigmaGrid sigma_grid(const ProductSpec& spec) {
  if (spec.m() > 3) fail(Errc::RenderCap, "sigma grids render only up to m = 3");
  if (spec.n() > (std::uint64_t{1} << 16))
    fail(Errc::TooLarge, "sigma grid exceeds the 2^16 render cap");
  SigmaGrid grid;
  grid.shape = spec.coord_sizes();
  grid.values.reserve(spec.n());
  for_each_exponent(spec, [&](const Exponent& a) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < a.size(); ++i) v *= spec.coord_size(i) - a[i];
    grid.values.push_back(v);
  });
  return grid;
}

}  // namespace cartqec
