#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cartqec/field.hpp"
#include "cartqec/util.hpp"

using namespace cartqec;

namespace {

// Independent irreducibility oracle: trial division by every monic polynomial
// of degree 1..deg/2.
bool irreducible_by_trial_division(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> g(d + 1, 0);
      std::uint64_t v = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      // long division f by g over F_p; remainder zero => divisor found
      std::vector<std::uint32_t> rem = f;
      while (rem.size() >= g.size()) {
        const std::uint32_t lead = rem.back();
        if (lead != 0) {
          const std::size_t shift = rem.size() - g.size();
          for (std::size_t i = 0; i < g.size(); ++i) {
            std::uint64_t t = rem[i + shift] + static_cast<std::uint64_t>(p - lead % p) * g[i];
            rem[i + shift] = static_cast<std::uint32_t>(t % p);
          }
        }
        rem.pop_back();
      }
      if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c == 0; }))
        return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("canonical moduli") {
  CHECK(canonical_modulus(3, 2) == std::vector<std::uint32_t>{1, 0, 1});   // X^2 + 1
  CHECK(canonical_modulus(5, 1) == std::vector<std::uint32_t>{0, 1});      // X
  CHECK(canonical_modulus(2, 4) == std::vector<std::uint32_t>{1, 1, 0, 0, 1});  // X^4 + X + 1

  // the canonical choice agrees with an independent exhaustive search
  for (auto [p, r] : {std::pair<std::uint32_t, std::uint32_t>{2, 4},
                      {3, 2},
                      {3, 3},
                      {5, 2},
                      {2, 6}}) {
    const auto mod = canonical_modulus(p, r);
    CHECK(irreducible_by_trial_division(mod, p));
    // nothing lexicographically smaller is irreducible
    std::uint64_t mod_code = 0, w = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
      mod_code += mod[i] * w;
      w *= p;
    }
    for (std::uint64_t code = 0; code < mod_code; ++code) {
      std::vector<std::uint32_t> f(r + 1, 0);
      std::uint64_t v = code;
      for (std::uint32_t i = 0; i < r; ++i) {
        f[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      f[r] = 1;
      CHECK_FALSE(irreducible_by_trial_division(f, p));
    }
  }
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_WITH_AS(Field(4, 1), doctest::Contains("not prime"), Error);
  CHECK_THROWS_AS(Field(6, 2), Error);
  CHECK_THROWS_AS(Field(2, 21), Error);  // p^r over the 2^20 cap
  CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), Error);  // X^2+1 = (X+1)^2 over F_2
  try {
    Field(9, 1);
    FAIL("expected CompositeP");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CompositeP);
  }
}

TEST_CASE("field axioms exhaustive for small q") {
  for (auto [p, r] : {std::pair<std::uint32_t, std::uint32_t>{2, 1},
                      {2, 2},
                      {2, 4},
                      {3, 1},
                      {3, 2},
                      {5, 1},
                      {7, 1},
                      {3, 4}}) {
    const Field f(p, r);
    const std::uint64_t q = f.q();
    REQUIRE(q <= 81);
    for (Elem a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.pow(a, q) == a);  // x^q = x
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (Elem b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (Elem c = 0; c < q; ++c) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
        }
      }
    }
  }
}

TEST_CASE("subfield enumeration") {
  const Field f9(3, 2);
  CHECK(f9.subfield_elements(1) == std::vector<Elem>{0, 1, 2});
  CHECK(f9.subfield_elements(2).size() == 9);

  const Field f16(2, 4);
  const auto sub = f16.subfield_elements(2);
  REQUIRE(sub.size() == 4);
  CHECK(sub[0] == 0);
  CHECK(sub[1] == 1);
  for (auto x : sub) CHECK(f16.pow(x, 4) == x);

  // Frobenius-fixed sets are closed under the field operations
  for (std::uint32_t s : {1u, 2u}) {
    const auto elems = f16.subfield_elements(s);
    for (auto a : elems) {
      for (auto b : elems) {
        CHECK(std::binary_search(elems.begin(), elems.end(), f16.add(a, b)));
        CHECK(std::binary_search(elems.begin(), elems.end(), f16.mul(a, b)));
      }
      if (a != 0) CHECK(std::binary_search(elems.begin(), elems.end(), f16.inv(a)));
    }
  }

  CHECK_THROWS_AS(f16.subfield_elements(3), Error);  // 3 does not divide 4
}

TEST_CASE("rank: identity, zero, invariance under row operations") {
  const Field f(3, 2);
  Matrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK(mat_rank(id, f) == 3);
  CHECK(mat_rank(Matrix(4, 6), f) == 0);

  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m(5, 7);
    for (auto& e : m.a) e = static_cast<Elem>(rng() % f.q());
    const std::size_t rank = mat_rank(m, f);
    CHECK(rank <= 5);

    Matrix shuffled = m;
    std::vector<std::size_t> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 7; ++j) shuffled.at(i, j) = m.at(perm[i], j);
    CHECK(mat_rank(shuffled, f) == rank);

    Matrix scaled = m;
    for (std::size_t i = 0; i < 5; ++i) {
      const Elem c = static_cast<Elem>(1 + rng() % (f.q() - 1));
      for (std::size_t j = 0; j < 7; ++j) scaled.at(i, j) = f.mul(c, m.at(i, j));
    }
    CHECK(mat_rank(scaled, f) == rank);
  }
}

TEST_CASE("dot product") {
  const Field f(3, 1);
  const std::vector<Elem> zero{0, 0, 0}, u{1, 2, 1}, v{2, 2, 2};
  CHECK(dot(zero, u, f) == 0);
  CHECK(dot(u, v, f) == f.from_int(1 * 2 + 2 * 2 + 1 * 2));
  CHECK_THROWS_AS(dot(u, std::vector<Elem>{1}, f), Error);
}

TEST_CASE("row space membership") {
  const Field f(2, 1);
  Matrix g(2, 3);
  g.at(0, 0) = 1;
  g.at(0, 1) = 1;
  g.at(1, 1) = 1;
  g.at(1, 2) = 1;
  Matrix in(1, 3);
  in.at(0, 0) = 1;
  in.at(0, 2) = 1;  // row0 + row1
  Matrix out(1, 3);
  out.at(0, 0) = 1;
  CHECK(rows_in_row_space(g, in, f));
  CHECK_FALSE(rows_in_row_space(g, out, f));
}
