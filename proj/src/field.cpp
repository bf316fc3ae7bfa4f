#include "cartqec/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <unordered_set>

#include "cartqec/util.hpp"

namespace cartqec {

namespace {

constexpr std::uint64_t kFieldCap = std::uint64_t{1} << 20;

using Poly = std::vector<std::uint32_t>;  // coefficients, constant term first

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

// f mod g, with g monic.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  poly_trim(f);
  const int dg = poly_deg(g);
  while (poly_deg(f) >= dg) {
    const std::uint64_t lead = f.back();
    const int shift = poly_deg(f) - dg;
    for (int i = 0; i <= dg; ++i) {
      std::uint64_t v = f[i + shift] + static_cast<std::uint64_t>(p - 1) * lead % p * g[i];
      f[i + shift] = static_cast<std::uint32_t>(v % p);
    }
    poly_trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), g, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& g, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), g, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, g, p);
    base = poly_mulmod(base, base, g, p);
    e >>= 1;
  }
  return result;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  poly_trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // make b monic before reducing
    const std::uint32_t lead = b.back();
    if (lead != 1) {
      std::uint32_t lead_inv = 1;
      for (std::uint32_t x = 1; x < p; ++x)
        if (static_cast<std::uint64_t>(x) * lead % p == 1) {
          lead_inv = x;
          break;
        }
      for (auto& c : b) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * lead_inv % p);
    }
    Poly r = poly_mod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

bool poly_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const int r = poly_deg(f);
  if (r < 1 || f.back() != 1) return false;
  if (r == 1) return true;
  // f of degree r is reducible iff it has an irreducible factor of degree
  // d <= r/2, which gcd(f, X^{p^d} - X) detects.
  Poly frob{0, 1};  // X
  for (int d = 1; d <= r / 2; ++d) {
    frob = poly_powmod(std::move(frob), p, f, p);
    Poly diff = poly_sub(frob, Poly{0, 1}, p);
    if (diff.empty()) return false;  // f divides X^{p^d} - X outright
    if (poly_deg(poly_gcd(f, diff, p)) >= 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t r) {
  const std::uint64_t q = checked_pow(p, r, kFieldCap);
  for (std::uint64_t code = 0; code < q; ++code) {
    Poly f(r + 1, 0);
    std::uint64_t v = code;
    for (std::uint32_t i = 0; i < r; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[r] = 1;
    if (poly_irreducible(f, p)) return f;
  }
  fail(Errc::Internal, "no irreducible polynomial found (unreachable)");
}

Field::Field(std::uint32_t p, std::uint32_t r) : p_(p), r_(r) {
  if (!is_prime(p)) fail(Errc::CompositeP, "p = " + std::to_string(p) + " is not prime");
  if (r < 1) fail(Errc::InvalidSpec, "extension degree must be >= 1");
  q_ = checked_pow(p, r, kFieldCap);
  modulus_ = canonical_modulus(p, r);
  validate_and_build();
}

Field::Field(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus)
    : p_(p), r_(r), modulus_(std::move(modulus)) {
  if (!is_prime(p)) fail(Errc::CompositeP, "p = " + std::to_string(p) + " is not prime");
  if (r < 1) fail(Errc::InvalidSpec, "extension degree must be >= 1");
  q_ = checked_pow(p, r, kFieldCap);
  if (modulus_.size() != r + 1 || modulus_.back() != 1)
    fail(Errc::InvalidSpec, "modulus must be monic of degree r");
  for (auto c : modulus_)
    if (c >= p) fail(Errc::InvalidSpec, "modulus coefficient out of range");
  if (!poly_irreducible(modulus_, p)) fail(Errc::InvalidSpec, "modulus is reducible");
  validate_and_build();
}

Elem Field::mul_poly(Elem a, Elem b) const {
  Poly pa(r_), pb(r_);
  for (std::uint32_t i = 0; i < r_; ++i) {
    pa[i] = a % p_;
    a /= p_;
    pb[i] = b % p_;
    b /= p_;
  }
  Poly prod = poly_mulmod(pa, pb, modulus_, p_);
  Elem out = 0;
  std::uint64_t w = 1;
  for (std::size_t i = 0; i < prod.size(); ++i) {
    out += static_cast<Elem>(prod[i] * w);
    w *= p_;
  }
  return out;
}

Elem Field::pow_poly(Elem a, std::uint64_t e) const {
  Elem result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul_poly(result, base);
    base = mul_poly(base, base);
    e >>= 1;
  }
  return result;
}

void Field::validate_and_build() {
  // find a generator of the multiplicative group, then tabulate exp/log
  const std::uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);
  Elem gen = 1;
  for (Elem cand = 1; cand < q_; ++cand) {
    bool ok = true;
    for (auto f : factors) {
      if (pow_poly(cand, order / f) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = cand;
      break;
    }
  }
  exp_.assign(2 * order, 1);
  log_.assign(q_, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = cur;
    exp_[i + order] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul_poly(cur, gen);
  }
  if (cur != 1) fail(Errc::Internal, "generator order mismatch");

  for (std::uint32_t s = 1; s <= r_; ++s) {
    if (r_ % s != 0) continue;
    const std::uint64_t ps = checked_pow(p_, s, kFieldCap);
    std::vector<Elem> fixed;
    fixed.reserve(ps);
    for (Elem x = 0; x < q_; ++x) {
      if (pow(x, ps) == x) fixed.push_back(x);
    }
    if (fixed.size() != ps) fail(Errc::Internal, "subfield has wrong size");
    subfields_.emplace_back(s, std::move(fixed));
  }
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  Elem out = 0;
  std::uint64_t w = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out += static_cast<Elem>(((a % p_) + (b % p_)) % p_ * w);
    a /= p_;
    b /= p_;
    w *= p_;
  }
  return out;
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  Elem out = 0;
  std::uint64_t w = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out += static_cast<Elem>((p_ - a % p_) % p_ * w);
    a /= p_;
    w *= p_;
  }
  return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::inv(Elem a) const {
  if (a == 0) fail(Errc::OutOfRange, "zero has no multiplicative inverse");
  const std::uint64_t order = q_ - 1;
  if (order == 0) return 1;
  return exp_[(order - log_[a]) % order];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  Elem result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> out(r_);
  for (std::uint32_t i = 0; i < r_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

const std::vector<Elem>& Field::subfield_elements(std::uint32_t s) const {
  for (const auto& [deg, elems] : subfields_) {
    if (deg == s) return elems;
  }
  fail(Errc::NotADivisor, std::to_string(s) + " does not divide r = " + std::to_string(r_));
}

std::size_t mat_rank(Matrix m, const Field& f) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) {
      for (std::size_t j = col; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    }
    const Elem scale = f.inv(m.at(rank, col));
    for (std::size_t j = col; j < m.cols; ++j) m.at(rank, j) = f.mul(m.at(rank, j), scale);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      const Elem factor = m.at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < m.cols; ++j) {
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(rank, j)));
      }
    }
    ++rank;
  }
  return rank;
}

Matrix mat_mul_transpose(const Matrix& g, const Matrix& h, const Field& f) {
  if (g.cols != h.cols) fail(Errc::LengthMismatch, "row lengths differ");
  Matrix out(g.rows, h.rows);
  for (std::size_t i = 0; i < g.rows; ++i) {
    for (std::size_t j = 0; j < h.rows; ++j) {
      Elem acc = 0;
      for (std::size_t t = 0; t < g.cols; ++t) acc = f.add(acc, f.mul(g.at(i, t), h.at(j, t)));
      out.at(i, j) = acc;
    }
  }
  return out;
}

bool mat_is_zero(const Matrix& m) {
  return std::all_of(m.a.begin(), m.a.end(), [](Elem e) { return e == 0; });
}

bool rows_in_row_space(const Matrix& g, const Matrix& h, const Field& f) {
  // reduce g to row-echelon form once, then reduce each row of h by it
  Matrix e = g;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < e.cols && rank < e.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < e.rows && e.at(pivot, col) == 0) ++pivot;
    if (pivot == e.rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < e.cols; ++j) std::swap(e.at(pivot, j), e.at(rank, j));
    const Elem scale = f.inv(e.at(rank, col));
    for (std::size_t j = col; j < e.cols; ++j) e.at(rank, j) = f.mul(e.at(rank, j), scale);
    for (std::size_t i = rank + 1; i < e.rows; ++i) {
      const Elem factor = e.at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < e.cols; ++j)
        e.at(i, j) = f.sub(e.at(i, j), f.mul(factor, e.at(rank, j)));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<Elem> row(e.cols);
  for (std::size_t i = 0; i < h.rows; ++i) {
    for (std::size_t j = 0; j < e.cols; ++j) row[j] = h.at(i, j);
    for (std::size_t t = 0; t < rank; ++t) {
      const Elem factor = row[pivot_col[t]];
      if (factor == 0) continue;
      for (std::size_t j = pivot_col[t]; j < e.cols; ++j)
        row[j] = f.sub(row[j], f.mul(factor, e.at(t, j)));
    }
    if (std::any_of(row.begin(), row.end(), [](Elem v) { return v != 0; })) return false;
  }
  return true;
}

Elem dot(std::span<const Elem> u, std::span<const Elem> v, const Field& f) {
  if (u.size() != v.size()) fail(Errc::LengthMismatch, "vector lengths differ");
  Elem acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(u[i], v[i]));
  return acc;
}

void dump_matrix(std::ostream& os, const Matrix& m, const Field& f) {
  os << f.q() << ' ' << m.cols << ' ' << m.rows << '\n';
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) os << ' ';
      os << m.at(i, j);
    }
    os << '\n';
  }
}

}  // namespace cartqec
