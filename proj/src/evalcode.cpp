#include "cartqec/evalcode.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "cartqec/util.hpp"

namespace cartqec {

namespace {

constexpr std::uint64_t kDefaultMatrixCap = 4096;
constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 22;

void check_same_spec(const ProductSpec& a, const ProductSpec& b) {
  if (a.p() != b.p() || a.r_vec() != b.r_vec())
    fail(Errc::InvalidSpec, "defining set belongs to a different product spec");
}

}  // namespace

std::uint64_t matrix_cap() {
  static const std::uint64_t cap = [] {
    if (const char* env = std::getenv("CARTQEC_MATRIX_CAP")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return kDefaultMatrixCap;
  }();
  return cap;
}

PointSet build_points(const ProductSpec& spec, const Field& field) {
  if (field.p() != spec.p())
    fail(Errc::IncompatibleAmbient, "field characteristic differs from spec");
  for (auto ri : spec.r_vec()) {
    if (field.r() % ri != 0)
      fail(Errc::IncompatibleAmbient, "r_i = " + std::to_string(ri) +
                                          " does not divide the ambient degree " +
                                          std::to_string(field.r()));
  }
  PointSet ps{spec, {}, static_cast<std::size_t>(spec.n()), spec.m()};
  std::vector<std::vector<Elem>> coords;
  coords.reserve(spec.m());
  for (auto ri : spec.r_vec()) coords.push_back(field.subfield_elements(ri));

  ps.pts.resize(ps.n * ps.m);
  std::vector<std::size_t> idx(spec.m(), 0);
  for (std::size_t t = 0; t < ps.n; ++t) {
    for (std::size_t j = 0; j < ps.m; ++j) ps.pts[t * ps.m + j] = coords[j][idx[j]];
    std::size_t j = ps.m;
    while (j > 0) {
      --j;
      if (++idx[j] < coords[j].size()) break;
      idx[j] = 0;
    }
  }
  return ps;
}

EvalCode build_code(const ProductSpec& spec, const DefiningSet& defining_set, const Field& field) {
  check_same_spec(spec, defining_set.spec);
  if (spec.n() > matrix_cap())
    fail(Errc::TooLarge, "n = " + std::to_string(spec.n()) + " exceeds the dense-matrix cap " +
                             std::to_string(matrix_cap()) +
                             " (override with CARTQEC_MATRIX_CAP)");
  EvalCode code{build_points(spec, field), defining_set, Matrix()};
  const std::size_t k = defining_set.members.size();
  const std::size_t n = code.points.n;
  code.gen = Matrix(k, n);
  for (std::size_t row = 0; row < k; ++row) {
    const Exponent& a = defining_set.members[row];
    spec.validate_exponent(a);
    for (std::size_t t = 0; t < n; ++t) {
      Elem v = field.one();
      for (std::size_t j = 0; j < code.points.m; ++j) {
        v = field.mul(v, field.pow(code.points.pts[t * code.points.m + j], a[j]));
      }
      code.gen.at(row, t) = v;
    }
  }
  return code;
}

std::uint64_t brute_min_distance(const EvalCode& code, const Field& field) {
  const std::size_t k = code.gen.rows;
  const std::size_t n = code.gen.cols;
  if (k == 0) fail(Errc::EmptyCode, "code has no nonzero codewords");
  std::uint64_t words = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (words > kEnumerationCap / field.q())
      fail(Errc::TooLarge, "q^k exceeds the 2^22 enumeration cap");
    words *= field.q();
  }

  // DFS over message digits, keeping partial combinations of generator rows.
  // Scalar multiples share a weight, so the first nonzero digit is pinned to 1.
  std::vector<std::vector<Elem>> partial(k + 1, std::vector<Elem>(n, 0));
  std::uint64_t best = n + 1;
  auto descend = [&](auto&& self, std::size_t depth, bool any_nonzero) -> void {
    if (depth == k) {
      if (!any_nonzero) return;
      std::uint64_t weight = 0;
      for (std::size_t t = 0; t < n; ++t) {
        if (partial[depth][t] != 0 && ++weight >= best) return;
      }
      best = weight;
      return;
    }
    partial[depth + 1] = partial[depth];
    self(self, depth + 1, any_nonzero);
    const std::uint64_t digit_count = any_nonzero ? field.q() : 2;
    for (std::uint64_t c = 1; c < digit_count; ++c) {
      const Elem coeff = static_cast<Elem>(c);
      for (std::size_t t = 0; t < n; ++t)
        partial[depth + 1][t] = field.add(partial[depth][t], field.mul(coeff, code.gen.at(depth, t)));
      self(self, depth + 1, true);
    }
  };
  descend(descend, 0, false);
  return best;
}

std::vector<Elem> min_weight_witness(const ProductSpec& spec, const Field& field,
                                     const Exponent& a) {
  spec.validate_exponent(a);
  const PointSet ps = build_points(spec, field);
  std::vector<std::vector<Elem>> coords;
  coords.reserve(spec.m());
  for (auto ri : spec.r_vec()) coords.push_back(field.subfield_elements(ri));
  std::vector<Elem> word(ps.n, field.one());
  for (std::size_t t = 0; t < ps.n; ++t) {
    Elem v = field.one();
    for (std::size_t j = 0; j < ps.m; ++j) {
      const Elem x = ps.pts[t * ps.m + j];
      for (std::uint32_t i = 0; i < a[j]; ++i) v = field.mul(v, field.sub(x, coords[j][i]));
    }
    word[t] = v;
  }
  return word;
}

bool verify_dual_identity(const ProductSpec& spec, const Field& field, std::uint64_t delta) {
  const EvalCode primal = build_code(spec, improved_defining_set(spec, delta), field);
  const EvalCode dual = build_code(spec, dual_defining_set(spec, delta), field);
  if (dual.gen.rows > 0 && !mat_is_zero(mat_mul_transpose(primal.gen, dual.gen, field)))
    return false;
  return mat_rank(primal.gen, field) + mat_rank(dual.gen, field) == spec.n();
}

}  // namespace cartqec
