#pragma once

#include <cstdint>
#include <vector>

#include "cartqec/errors.hpp"

namespace cartqec {

/// Exponent vector (a_1, ..., a_m) of a monomial X^a in Delta(r); membership
/// requires 0 <= a_i < p^{r_i}.
using Exponent = std::vector<std::uint32_t>;

/// The Cartesian product point set S = F_{p^{r_1}} x ... x F_{p^{r_m}} seen
/// through its combinatorial data: a prime p, factor degrees r_1 >= ... >= r_m,
/// and an ambient extension degree r with r_i | r (default: lcm of the r_i).
class ProductSpec {
 public:
  ProductSpec(std::uint32_t p, std::vector<std::uint32_t> r_vec);
  ProductSpec(std::uint32_t p, std::vector<std::uint32_t> r_vec, std::uint32_t ambient_r);

  std::uint32_t p() const { return p_; }
  const std::vector<std::uint32_t>& r_vec() const { return r_vec_; }
  std::uint32_t ambient_r() const { return ambient_r_; }
  std::size_t m() const { return r_vec_.size(); }

  /// p^{r_i}, the size of coordinate i's subfield.
  std::uint64_t coord_size(std::size_t i) const { return sizes_[i]; }
  const std::vector<std::uint64_t>& coord_sizes() const { return sizes_; }

  /// Number of evaluation points n = prod p^{r_i} = |Delta(r)|.
  std::uint64_t n() const { return n_; }

  /// Ambient field size q = p^r; TooLarge beyond 2^62.
  std::uint64_t ambient_q() const;

  /// OutOfRange unless a is a valid member of Delta(r).
  void validate_exponent(const Exponent& a) const;

 private:
  std::uint32_t p_ = 0;
  std::vector<std::uint32_t> r_vec_;
  std::uint32_t ambient_r_ = 0;
  std::vector<std::uint64_t> sizes_;
  std::uint64_t n_ = 0;

  void init(bool ambient_given);
};

/// An ordered subset L of Delta(r), kept in the canonical monomial order
/// (lexicographic on the exponent vector, ascending).
struct DefiningSet {
  ProductSpec spec;
  std::vector<Exponent> members;

  std::size_t size() const { return members.size(); }
};

/// Footprint value sigma(X^a) = prod (p^{r_j} - a_j); the weight contribution
/// of the monomial, in [1, n].
std::uint64_t sigma(const ProductSpec& spec, const Exponent& a);

/// mu(X^a) = prod (a_j + 1); governs membership in the dual defining set.
std::uint64_t mu(const ProductSpec& spec, const Exponent& a);

/// The coordinatewise complement b_i = p^{r_i} - 1 - a_i; satisfies
/// mu(complement(a)) = sigma(a).
Exponent complement(const ProductSpec& spec, const Exponent& a);

/// L(delta) = { a in Delta : sigma(a) >= delta }. Always a decreasing set.
DefiningSet improved_defining_set(const ProductSpec& spec, std::uint64_t delta);

/// Lperp(delta) = { a in Delta : mu(a) < delta }; |Lperp| + |L| = n.
DefiningSet dual_defining_set(const ProductSpec& spec, std::uint64_t delta);

/// True iff Lperp(delta) is contained in L(delta), i.e. C(L(delta)) contains
/// its Euclidean dual.
bool is_dual_containing(const ProductSpec& spec, std::uint64_t delta);

/// True iff ev(X^a) and ev(X^b) are Euclidean-orthogonal. The evaluations
/// have nonzero inner product exactly when, for every coordinate i,
/// a_i + b_i > 0 and (p^{r_i} - 1) | (a_i + b_i); with p^{r_i} = 2 the
/// divisibility is vacuous and only a_i + b_i > 0 matters.
bool monomials_orthogonal(const ProductSpec& spec, const Exponent& a, const Exponent& b);

/// Number of tuples (d_1, ..., d_m) with 1 <= d_i <= p^{r_i} and prod d_i = s;
/// equals the number of monomials with sigma = s. Computed by the divisor
/// recursion (iterate d | s with d <= p^{r_1}, recurse on the tail); 0 when s
/// has no admissible factorization. If `leaf_calls` is non-null it receives
/// the number of base-case evaluations, which is at most prod_{i<m} p^{r_i}.
std::uint64_t tau(const ProductSpec& spec, std::uint64_t s, std::uint64_t* leaf_calls = nullptr);

struct TauBound {
  std::uint32_t K = 0;       // largest index with s <= p^{r_K}
  std::uint64_t bound = 0;   // K if s prime; K + C(K,2) if s square; K^2 otherwise
  bool exact = false;        // true only in the prime case
};

/// Closed-form lower bound on tau(s) for 2 <= s <= p^{r_1}; BoundUndefined
/// outside that range. Squareness is decided by exact integer square root.
TauBound tau_lower_bound(const ProductSpec& spec, std::uint64_t s);

/// |{ a in Delta : sigma(a) < delta }| without materializing Delta, by a
/// quotient-grouped divisor recursion. |L(delta)| = n - count_sigma_below.
std::uint64_t count_sigma_below(const ProductSpec& spec, std::uint64_t delta);

/// The full table of sigma over Delta(r) in canonical order (last coordinate
/// fastest). Render cap: m <= 3 and n <= 2^16.
struct SigmaGrid {
  std::vector<std::uint64_t> shape;
  std::vector<std::uint64_t> values;
};
SigmaGrid sigma_grid(const ProductSpec& spec);

/// Visit every exponent of Delta(r) in canonical order.
template <typename F>
void for_each_exponent(const ProductSpec& spec, F&& fn) {
  Exponent a(spec.m(), 0);
  for (;;) {
    fn(a);
    std::size_t i = spec.m();
    while (i > 0) {
      --i;
      if (++a[i] < spec.coord_size(i)) break;
      a[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace cartqec
