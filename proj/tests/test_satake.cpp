#include <doctest.h>

#include <random>
#include <stdexcept>

#include "bruhat/satake.hpp"

using namespace bruhat;
using namespace bruhat::satake;

namespace {

GroupKind A(int n) { return GroupKind(Family::TypeA_GL2n, n); }
GroupKind C(int n) { return GroupKind(Family::TypeC_Sp2n, n); }

SymLaurentPoly var(const VarList& ring, const std::string& name, int power = 1) {
  return SymLaurentPoly::variable(ring, index_of(ring, name), power);
}
SymLaurentPoly vpow(const VarList& ring, int k) { return SymLaurentPoly::constant(ring, 1, k); }
SymLaurentPoly one(const VarList& ring) { return SymLaurentPoly::constant(ring, 1); }

SymLaurentPoly random_poly(const VarList& ring, const laurent::Symmetry& sym, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-2, 2), c(-3, 3), terms(1, 3);
  SymLaurentPoly p(ring);
  for (int t = terms(rng); t > 0; --t) {
    laurent::Monomial m{std::vector<int>(ring.size()), e(rng)};
    for (auto& x : m.exps) x = e(rng);
    p += SymLaurentPoly::term(ring, m, c(rng));
  }
  return laurent::symmetrize(p, sym);
}

// Product of (X - r) over the expected roots of the Satake image of the G-side polynomial.
CharPoly unitary_oracle(int n, bool twisted) {
  const VarList ring = unitary_m_ring(n);
  const auto cw = twisted ? var(ring, "c_w") : one(ring);
  const auto cwc = twisted ? var(ring, "c_wc") : one(ring);
  CharPoly p{{one(ring)}};
  for (int i = 1; i <= n; ++i) {
    p = p * linear(vpow(ring, n - 1) * cw * var(ring, "W_" + std::to_string(i)));
    p = p * linear(vpow(ring, 3 * n - 1) * cwc.inverse_unit() * var(ring, "Z_" + std::to_string(i), -1));
  }
  return p;
}

CharPoly real_oracle(int n, bool twisted) {
  const VarList ring = real_m_ring(n);
  const auto c = twisted ? var(ring, "c_w") : one(ring);
  CharPoly p = linear(vpow(ring, 2 * n));
  for (int i = 1; i <= n; ++i) {
    p = p * linear(vpow(ring, n - 1) * c * var(ring, "W_" + std::to_string(i)));
    p = p * linear(vpow(ring, 3 * n + 1) * c.inverse_unit() * var(ring, "W_" + std::to_string(i), -1));
  }
  return p;
}

std::uint64_t binom(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("laurent polynomials") {
  const VarList ring = laurent::indexed_vars("x", 2);
  const auto x1 = SymLaurentPoly::variable(ring, 0), x2 = SymLaurentPoly::variable(ring, 1);
  CHECK((x1 * x1.inverse_unit()) == one(ring));
  CHECK((x1 + x2).pow(2) == x1 * x1 + x2 * x2 + SymLaurentPoly::constant(ring, 2) * x1 * x2);
  CHECK_THROWS_AS((x1 + x2).pow(-1), std::domain_error);
  CHECK_THROWS_AS(x1.with_symmetry(symmetric_group(0, 2)), std::invalid_argument);
  CHECK((x1 + x2).with_symmetry(symmetric_group(0, 2)).symmetry() == symmetric_group(0, 2));
  CHECK((x1 + x1.inverse_unit()).is_invariant(hyperoctahedral_group(0, 1)));
  CHECK(!(x1 + x1.inverse_unit() + x2).is_invariant(hyperoctahedral_group(0, 2)));
  CHECK(vpow(ring, 2).times_v(-2) == one(ring));
  CHECK(laurent::first_difference(x1, x1).empty());
  CHECK(!laurent::first_difference(x1, x2).empty());
}

TEST_CASE("elementary symmetric functions") {
  const VarList ring = unitary_m_ring(2);
  const auto W = variables(ring, 0, 2);
  CHECK(elementary_symmetric(0, ring, W) == one(ring));
  CHECK(elementary_symmetric(1, ring, W) == W[0] + W[1]);
  for (int m = 1; m <= 5; ++m) {
    const VarList r = laurent::indexed_vars("x", m);
    for (int i = 0; i <= m; ++i)
      CHECK(elementary_symmetric(i, r, variables(r, 0, m)).size() == binom(m, i));
  }
}

TEST_CASE("Hecke generators") {
  const VarList m1 = unitary_m_ring(1), m2 = unitary_m_ring(2);
  CHECK(t_M(1, 1, m1, 0) == var(m1, "W_1"));
  CHECK(t_M(1, 2, m2, 0) == (var(m2, "W_1") + var(m2, "W_2")).times_v(1));
  CHECK(t_M(2, 2, m2, 0) == var(m2, "W_1") * var(m2, "W_2"));
  const VarList y1 = unitary_g_ring(1);
  CHECK(t_G_unitary(1, 1) == (var(y1, "Y_1") + var(y1, "Y_2")).times_v(1));
  for (int n = 1; n <= 3; ++n) {
    const VarList y = unitary_g_ring(n);
    CHECK(t_G_unitary(2 * n, n) == elementary_symmetric(2 * n, y, variables(y, 0, 2 * n)));
    CHECK(t_G_real(2 * n + 1, n) == one(real_g_ring(n)));
    for (int i = 0; i <= 2 * n + 1; ++i) CHECK(t_G_real(i, n).is_invariant(hyperoctahedral_group(0, n)));
  }
  const VarList x1 = real_g_ring(1);
  CHECK(t_G_real(1, 1) == (var(x1, "X_1") + var(x1, "X_1", -1) + one(x1)).times_v(2));
}

TEST_CASE("Satake maps") {
  const VarList y = unitary_g_ring(1), m = unitary_m_ring(1);
  CHECK(satake_unitary(var(y, "Y_1") + var(y, "Y_2")) == var(m, "W_1").times_v(-1) + var(m, "Z_1", -1).times_v(1));
  for (int n = 1; n <= 3; ++n) {
    const VarList yn = unitary_g_ring(n), mn = unitary_m_ring(n);
    auto expected = one(mn);
    for (int i = 1; i <= n; ++i) expected *= var(mn, "W_" + std::to_string(i)) * var(mn, "Z_" + std::to_string(i), -1);
    CHECK(satake_unitary(elementary_symmetric(2 * n, yn, variables(yn, 0, 2 * n))) == expected);
  }
  const VarList x = real_g_ring(1), r = real_m_ring(1);
  CHECK(satake_real(var(x, "X_1") + var(x, "X_1", -1)) == var(r, "W_1").times_v(-2) + var(r, "W_1", -1).times_v(2));
  CHECK(satake_real(one(x)) == one(r));
  CHECK_THROWS_AS(satake_unitary(var(y, "Y_1")), std::invalid_argument);
  CHECK_THROWS_AS(satake_real(var(x, "X_1")), std::invalid_argument);
}

TEST_CASE("Satake maps are ring homomorphisms") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 2;
    const VarList y = unitary_g_ring(n);
    const auto f = random_poly(y, symmetric_group(0, 2 * n), rng), g = random_poly(y, symmetric_group(0, 2 * n), rng);
    REQUIRE(satake_unitary(f * g) == satake_unitary(f) * satake_unitary(g));
    REQUIRE(satake_unitary(f + g) == satake_unitary(f) + satake_unitary(g));
    const VarList x = real_g_ring(n);
    const auto a = random_poly(x, hyperoctahedral_group(0, n), rng), b = random_poly(x, hyperoctahedral_group(0, n), rng);
    REQUIRE(satake_real(a * b) == satake_real(a) * satake_real(b));
  }
}

TEST_CASE("characteristic polynomials") {
  const VarList m1 = unitary_m_ring(1), m2 = unitary_m_ring(2);
  CHECK(char_poly_M(1, m1, 0) == linear(var(m1, "W_1")));
  const auto p2 = char_poly_M(2, m2, 0);
  CHECK(p2.degree() == 2);
  CHECK(p2.coeffs[1] == -(var(m2, "W_1") + var(m2, "W_2")).times_v(1));
  CHECK(p2.coeffs[0] == (var(m2, "W_1") * var(m2, "W_2")).times_v(2));
  CHECK(twist(p2, one(m2)) == p2);
  CHECK(dual_char_poly(linear(var(m1, "Z_1"))) == linear(var(m1, "Z_1", -1)));
  for (int n = 1; n <= 3; ++n) {
    const VarList r = unitary_m_ring(n);
    const auto p = char_poly_M(n, r, n);
    CHECK(p.is_monic());
    CHECK(dual_char_poly(p).is_monic());
    CHECK(dual_char_poly(dual_char_poly(p)) == p);
  }
  const VarList y1 = unitary_g_ring(1);
  const auto g1 = char_poly_G(A(1));
  CHECK(g1.coeffs[2] == one(y1));
  CHECK(g1.coeffs[1] == -(var(y1, "Y_1") + var(y1, "Y_2")).times_v(1));
  CHECK(g1.coeffs[0] == (var(y1, "Y_1") * var(y1, "Y_2")).times_v(2));
  const auto r1 = char_poly_G(C(1));
  CHECK(r1.degree() == 3);
  CHECK(r1.coeffs[0] == SymLaurentPoly::constant(real_g_ring(1), -1, 6));
  // Real case functional equation: the root multiset is stable under r -> q^{2n} / r.
  for (int n = 1; n <= 2; ++n) {
    const auto p = char_poly_G(C(n));
    const VarList x = real_g_ring(n);
    CHECK(dual_char_poly(p) == scale(scale_argument(p, vpow(x, 4 * n)), vpow(x, -4 * n * (2 * n + 1))));
  }
}

TEST_CASE("determinant factorization") {
  for (bool twisted : {false, true}) {
    for (int n = 1; n <= 3; ++n) {
      const auto v = verify_determinant_factorization(A(n), twisted);
      CAPTURE(v.first_difference);
      CHECK(v.verdict);
      CHECK(v.g_side == unitary_oracle(n, twisted));
      CHECK(v.m_side == unitary_oracle(n, twisted));
    }
    for (int n = 1; n <= 2; ++n) {
      const auto v = verify_determinant_factorization(C(n), twisted);
      CAPTURE(v.first_difference);
      CHECK(v.verdict);
      CHECK(v.g_side == real_oracle(n, twisted));
      CHECK(v.m_side == real_oracle(n, twisted));
    }
  }
  // (X - W_1)(X - q Z_1^{-1})
  const VarList m1 = unitary_m_ring(1);
  const auto explicit_n1 = linear(var(m1, "W_1")) * linear(var(m1, "Z_1", -1).times_v(2));
  const auto v1 = verify_determinant_factorization(A(1), false);
  CHECK(v1.g_side == explicit_n1);
  CHECK(v1.m_side == explicit_n1);
  // A wrong normalization is told apart.
  CHECK(!(v1.g_side == linear(var(m1, "W_1")) * linear(var(m1, "Z_1", -1))));
  CHECK_THROWS_AS(verify_determinant_factorization(A(4)), std::invalid_argument);
  CHECK_THROWS_AS(verify_determinant_factorization(C(3)), std::invalid_argument);
}
