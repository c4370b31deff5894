#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "bruhat/padic.hpp"

using namespace bruhat;
using namespace bruhat::padic;

namespace {

GroupKind A(int n) { return GroupKind(Family::TypeA_GL2n, n); }
GroupKind C(int n) { return GroupKind(Family::TypeC_Sp2n, n); }

mpq_class q(long a, long b = 1) {
  mpq_class x(a, b);
  x.canonicalize();
  return x;
}

QMatrix with_blocks(int n, const QMatrix& Ab, const QMatrix& Bb, const QMatrix& Cb, const QMatrix& Db) {
  QMatrix g(2 * n, 2 * n);
  g.set_block(0, 0, Ab);
  g.set_block(0, n, Bb);
  g.set_block(n, 0, Cb);
  g.set_block(n, n, Db);
  return g;
}

// min over J containing a lower index of ceil((v0 - v_J) / |J ∩ low|), by linear scan over k.
ExtInt radius_oracle(const std::map<std::vector<int>, ExtInt>& vals, int n) {
  std::vector<int> J0;
  for (int i = n; i < 2 * n; ++i) J0.push_back(i);
  if (!vals.at(J0).finite()) return ExtInt::pos_inf();
  for (long k = 0;; ++k) {
    bool ok = true;
    for (const auto& [J, v] : vals) {
      if (!v.finite()) continue;
      long c = 0;
      for (int j : J) c += j < n;
      ok = ok && vals.at(J0).value() <= v.value() + k * c;
    }
    if (ok) return ExtInt(k);
  }
}

}  // namespace

TEST_CASE("valuations and parsing") {
  CHECK(valuation(0, 3) == ExtInt::pos_inf());
  CHECK(valuation(3, 3) == ExtInt(1));
  CHECK(valuation(q(18, 27), 3) == ExtInt(2 - 3));
  CHECK(valuation(q(5, 4), 2) == ExtInt(-2));
  CHECK(parse_rational("7/p^2", 5) == q(7, 25));
  CHECK(parse_rational(" -3 / 4 ", 2) == q(-3, 4));
  CHECK(parse_rational("1/3^2", 3) == q(1, 9));
  CHECK(format_rational(q(7, 25), 5) == "7/5^2");
  CHECK(format_rational(q(-4), 5) == "-4");
  for (const char* s : {"", "1/", "x", "1/0", "1/p^", "2.5"}) CHECK_THROWS_AS(parse_rational(s, 3), std::invalid_argument);
  CHECK(is_prime(5));
  CHECK(!is_prime(9));
  CHECK(ExtInt::neg_inf() < ExtInt(-100));
  CHECK(ExtInt(100) < ExtInt::pos_inf());
  CHECK(ExtInt::pos_inf() + 3 == ExtInt::pos_inf());
}

TEST_CASE("block matrices") {
  QMatrix u = QMatrix::identity(2);
  u.at(0, 1) = 1;
  CHECK_NOTHROW(BlockMatrix(C(1), 3, u));  // Sp_2 = SL_2
  CHECK_THROWS_AS(BlockMatrix(C(1), 3, QMatrix::diagonal({2, 1})), std::invalid_argument);
  CHECK_NOTHROW(BlockMatrix(A(1), 3, u));
  CHECK_THROWS_AS(BlockMatrix(A(1), 3, QMatrix(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(BlockMatrix(A(1), 4, QMatrix::identity(2)), std::invalid_argument);
  const auto g = BlockMatrix(A(1), 3, u);
  CHECK(g * g.inverse() == identity(A(1), 3));
}

TEST_CASE("gamma") {
  for (int n = 1; n <= 3; ++n)
    for (int p : {2, 3, 5}) {
      CHECK(gamma(A(n), p, 1).matrix().det() == mpq_class(static_cast<long>(std::pow(p, n))));
      const auto g = gamma(C(n), p, 1).matrix();
      CHECK(g.transpose() * symplectic_form(n) * g == symplectic_form(n));
      CHECK(gamma(C(n), p, 2) * gamma(C(n), p, -2) == identity(C(n), p));
      CHECK(gamma(A(n), p, 3) == gamma(A(n), p, 1) * gamma(A(n), p, 1) * gamma(A(n), p, 1));
    }
}

TEST_CASE("h invariant") {
  for (int n = 1; n <= 2; ++n) {
    const QMatrix I = QMatrix::identity(n), Z(n, n);
    CHECK(h_invariant(identity(A(n), 3)) == ExtInt::pos_inf());
    CHECK(h_invariant(BlockMatrix(A(n), 3, with_blocks(n, I, Z, I.scaled(3), I))) == ExtInt(1));
    CHECK(h_invariant(BlockMatrix(A(n), 3, with_blocks(n, Z, I, I, Z))) == ExtInt::neg_inf());
    CHECK(h_invariant(BlockMatrix(A(n), 2, with_blocks(n, I, Z, I.scaled(q(1, 4)), I))) == ExtInt(-2));
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = std::array{2, 3, 5}[trial % 3];
    for (GroupKind kind : {A(2), C(2)}) {
      const auto g = random_element(kind, p, rng);
      const auto h = h_invariant(g);
      for (int k = 0; k <= 3; ++k)
        REQUIRE(h_invariant(g * gamma(kind, p, k)) == h + (kind.is_symplectic() ? 2L * k : k));
      // Left translation by P(Q_p) does not change h.
      REQUIRE(h_invariant(random_block_upper(kind, p, rng) * g) == h);
    }
  }
}

TEST_CASE("congruence subgroups") {
  for (int n = 1; n <= 2; ++n)
    for (int p : {2, 3}) {
      for (int m = 1; m <= 4; ++m)
        for (auto lvl : {Level::Gamma0, Level::Gamma1, Level::GammaFull}) CHECK(in_level(identity(A(n), p), lvl, m));
      QMatrix g = QMatrix::identity(2 * n);
      g.at(0, n) = 1;
      CHECK(in_level(BlockMatrix(A(n), p, g), Level::Gamma1, 2));
      CHECK(!in_level(BlockMatrix(A(n), p, g), Level::GammaFull, 2));
      QMatrix h = QMatrix::identity(2 * n);
      h.at(n, 0) = p;  // p^{m-1} with m = 2
      CHECK(!in_level(BlockMatrix(A(n), p, h), Level::Gamma0, 2));
      CHECK(in_level(BlockMatrix(A(n), p, h), Level::Gamma0, 1));
    }
  CHECK_THROWS_AS(in_level(identity(A(1), 3), Level::Gamma0, 0), std::invalid_argument);
  CHECK_THROWS_AS(in_level(gamma(C(1), 3, 1), Level::Gamma0, 1), std::invalid_argument);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial)
    for (GroupKind kind : {A(2), C(2)}) {
      const int m = 1 + trial % 3;
      const auto g = random_gamma1(kind, 3, m, rng);
      REQUIRE(g.integral());
      REQUIRE(in_level(g, Level::Gamma1, m));
      REQUIRE(in_level(g, Level::Gamma0, m));
      if (in_level(g, Level::GammaFull, m)) REQUIRE(in_level(g, Level::Gamma1, m));
      if (kind.is_symplectic()) REQUIRE(is_symplectic(g.matrix()));
      REQUIRE(in_P_Gamma1(g, m));
      REQUIRE(in_P_Gamma1(random_block_upper(kind, 3, rng), 60));
    }
}

TEST_CASE("factorization") {
  std::mt19937_64 rng(3);
  for (GroupKind kind : {A(2), C(2)}) {
    const auto u = random_block_upper(kind, 5, rng);
    const auto f = factor_P_Gamma1(u, 4);
    CHECK(f.p_part == u);
    CHECK(f.gamma1_part == identity(kind, 5));
  }
  const int n = 2, p = 3, m = 2;
  const QMatrix I = QMatrix::identity(n), Z(n, n);
  QMatrix Bb(n, n);
  Bb.at(0, 1) = 1;
  const QMatrix Cb = I.scaled(9);
  const BlockMatrix g(A(n), p, with_blocks(n, I, Bb, Cb, I));
  const auto f = factor_P_Gamma1(g, m);
  CHECK(f.p_part * f.gamma1_part == g);
  CHECK(f.p_part.A() == I - Bb * Cb);
  CHECK(f.gamma1_part.C() == Cb);
  CHECK(in_level(f.gamma1_part, Level::Gamma1, m));
  CHECK_THROWS_AS(factor_P_Gamma1(g, 3), std::invalid_argument);
}

TEST_CASE("contract lemma on a small grid") {
  for (GroupKind kind : {A(1), A(2), C(1), C(2)})
    for (int p : {2, 3})
      for (int k = 0; k <= 2; ++k) {
        const auto r = contract_check(kind, p, 1, k, 40, 17);
        CAPTURE(r.failure);
        CHECK(r.ok);
        CHECK(r.samples == 40);
      }
}

TEST_CASE("anticanonical radius") {
  const int n = 2;
  std::map<std::vector<int>, ExtInt> vals{{{0, 1}, 3}, {{0, 2}, 3}, {{0, 3}, 3}, {{1, 2}, 3}, {{1, 3}, 3}, {{2, 3}, 0}};
  CHECK(anticanonical_radius(vals, n) == ExtInt(0));
  vals[{2, 3}] = ExtInt::pos_inf();
  CHECK(anticanonical_radius(vals, n) == ExtInt::pos_inf());
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> v(-4, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::map<std::vector<int>, ExtInt> r;
    for (const auto& [J, x] : vals) r[J] = (trial % 7 == 0 && J != std::vector<int>{2, 3}) ? ExtInt::pos_inf() : v(rng);
    const auto k = anticanonical_radius(r, n);
    REQUIRE(k == radius_oracle(r, n));
    // Each γ step lowers the radius by one, down to zero.
    std::map<std::vector<int>, ExtInt> shifted;
    for (const auto& [J, x] : r) {
      long c = 0;
      for (int j : J) c += j < n;
      shifted[J] = x + c;
    }
    REQUIRE(anticanonical_radius(shifted, n) == ExtInt(std::max(0L, k.value() - 1)));
  }
}

TEST_CASE("plucker valuations") {
  QMatrix basis(2, 4);
  basis.at(0, 0) = 1;
  basis.at(1, 1) = 3;
  basis.at(1, 2) = q(1, 9);
  const auto vals = plucker_valuations(basis, 3);
  CHECK(vals.at({0, 1}) == ExtInt(1));
  CHECK(vals.at({0, 2}) == ExtInt(-2));
  CHECK(vals.at({1, 2}) == ExtInt::pos_inf());
  CHECK(vals.at({2, 3}) == ExtInt::pos_inf());
}
