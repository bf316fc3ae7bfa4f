#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "cartqec/errors.hpp"

namespace cartqec {

/// A field element of F_{p^r}, encoded as the base-p integer
/// c_0 + c_1*p + ... + c_{r-1}*p^{r-1} of its residue's coefficient vector.
/// The encoding doubles as the canonical element order (ascending integers).
using Elem = std::uint32_t;

/// Exact arithmetic in F_{p^r} = F_p[X]/(modulus).
///
/// The default modulus is the lexicographically smallest monic irreducible
/// polynomial of degree r over F_p, comparing coefficient vectors
/// (c_0, ..., c_{r-1}) as base-p integers. Any irreducible modulus yields an
/// isomorphic field; fixing the smallest one makes all derived matrices and
/// golden files reproducible. Multiplication runs on discrete log/antilog
/// tables built from a fixed generator at construction time.
class Field {
 public:
  /// Canonical-modulus constructor. Requires p prime, r >= 1, p^r <= 2^20.
  Field(std::uint32_t p, std::uint32_t r);

  /// Explicit modulus (coefficient vector, constant term first, monic,
  /// degree r, verified irreducible).
  Field(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t r() const { return r_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Multiplicative inverse; OutOfRange on zero.
  Elem inv(Elem a) const;
  /// a^e by square-and-multiply; pow(0,0) = 1.
  Elem pow(Elem a, std::uint64_t e) const;

  /// Embedding of an integer via the prime subfield (v mod p).
  Elem from_int(std::uint64_t v) const { return static_cast<Elem>(v % p_); }

  /// Little-endian coefficient digits of an element (length r).
  std::vector<std::uint32_t> coeffs(Elem a) const;

  /// The p^s elements fixed by x -> x^{p^s}, in canonical order.
  /// Requires s | r; always contains 0 and 1. Precomputed per divisor of r
  /// at construction, so lookups are O(1).
  const std::vector<Elem>& subfield_elements(std::uint32_t s) const;

 private:
  std::uint32_t p_, r_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;          // g^i for i in [0, 2(q-1)); avoids a mod in mul
  std::vector<std::uint32_t> log_; // log_[e] for e != 0
  std::vector<std::pair<std::uint32_t, std::vector<Elem>>> subfields_;  // per divisor of r

  void validate_and_build();
  Elem mul_poly(Elem a, Elem b) const;  // table-free multiply, used to bootstrap
  Elem pow_poly(Elem a, std::uint64_t e) const;
};

/// Dense row-major matrix over a field; entries are element encodings.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Elem at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  std::span<const Elem> row(std::size_t i) const { return {a.data() + i * cols, cols}; }
};

/// Rank by Gaussian elimination over f (works on a copy).
std::size_t mat_rank(Matrix m, const Field& f);

/// g * h^T; LengthMismatch unless g.cols == h.cols.
Matrix mat_mul_transpose(const Matrix& g, const Matrix& h, const Field& f);

bool mat_is_zero(const Matrix& m);

/// True iff every row of h lies in the row space of g.
bool rows_in_row_space(const Matrix& g, const Matrix& h, const Field& f);

/// Euclidean inner product; LengthMismatch on unequal lengths.
Elem dot(std::span<const Elem> u, std::span<const Elem> v, const Field& f);

/// Plain-text dump: header "q n k", then one row per line of base-p encodings.
void dump_matrix(std::ostream& os, const Matrix& m, const Field& f);

/// Irreducibility over F_p of a monic polynomial (coefficients constant-first).
bool poly_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p);

/// Lexicographically smallest monic irreducible polynomial of degree r over F_p.
std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t r);

}  // namespace cartqec
