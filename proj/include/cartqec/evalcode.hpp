#pragma once

#include <cstdint>
#include <vector>

#include "cartqec/field.hpp"
#include "cartqec/footprint.hpp"

namespace cartqec {

/// The evaluation points S = F_{p^{r_1}} x ... x F_{p^{r_m}} inside the
/// ambient field, as element encodings. Ordering is the product of canonical
/// subfield element orders with the last coordinate varying fastest; this
/// matches the canonical monomial order.
struct PointSet {
  ProductSpec spec;
  std::vector<Elem> pts;  // n * m, row-major
  std::size_t n = 0, m = 0;

  std::span<const Elem> point(std::size_t t) const { return {pts.data() + t * m, m}; }
};

/// Requires field.p == spec.p and r_i | field.r for every i.
PointSet build_points(const ProductSpec& spec, const Field& field);

/// C(L): the span of the monomial evaluations, materialized as a |L| x n
/// generator matrix with one row per monomial in canonical order.
struct EvalCode {
  PointSet points;
  DefiningSet defining_set;
  Matrix gen;
};

/// Dense-matrix size cap (default 4096); the CARTQEC_MATRIX_CAP environment
/// variable overrides it.
std::uint64_t matrix_cap();

/// Builds the generator matrix of C(L); TooLarge when n exceeds matrix_cap().
EvalCode build_code(const ProductSpec& spec, const DefiningSet& defining_set, const Field& field);

/// Exact minimum Hamming weight over all nonzero codewords, by exhaustive
/// enumeration of the message space (scalar multiples are enumerated once,
/// via messages whose first nonzero entry is 1). TooLarge when q^k > 2^22.
std::uint64_t brute_min_distance(const EvalCode& code, const Field& field);

/// Evaluation of f = prod_j prod_{i<a_j} (X_j - v_i^{(j)}), where the v's are
/// the first a_j elements of the canonical subfield order. The word has weight
/// exactly sigma(a) and lies in C(L) for every decreasing L containing a.
std::vector<Elem> min_weight_witness(const ProductSpec& spec, const Field& field,
                                     const Exponent& a);

/// Builds generator matrices G of C(L(delta)) and H of C(Lperp(delta)) and
/// checks G*H^T = 0 together with rank G + rank H = n.
bool verify_dual_identity(const ProductSpec& spec, const Field& field, std::uint64_t delta);

}  // namespace cartqec
