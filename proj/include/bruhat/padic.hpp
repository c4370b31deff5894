#pragma once

// Exact rational 2n×2n matrices viewed p-adically: valuations, the
// h-invariant, congruence-subgroup predicates and the P·Γ₁ factorization.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bruhat/weyl.hpp"

namespace bruhat::padic {

// Z ∪ {-∞, +∞}.
class ExtInt {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtInt(long v = 0) : kind_(Kind::Finite), value_(v) {}  // NOLINT(google-explicit-constructor)
  static ExtInt pos_inf() { return ExtInt(Kind::PosInf); }
  static ExtInt neg_inf() { return ExtInt(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::Finite; }
  long value() const;  // throws unless finite
  std::string str() const;  // "inf", "-inf" or the integer

  ExtInt operator+(long k) const;

  friend bool operator==(const ExtInt&, const ExtInt&) = default;
  friend bool operator<(const ExtInt& a, const ExtInt& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.finite() && a.value_ < b.value_;
  }
  friend bool operator<=(const ExtInt& a, const ExtInt& b) { return !(b < a); }
  friend bool operator>=(const ExtInt& a, const ExtInt& b) { return !(a < b); }
  friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }

 private:
  explicit ExtInt(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  long value_;
};

bool is_prime(int p);

// v_p(x); +∞ for x = 0.
ExtInt valuation(const mpq_class& x, int p);

// "a", "a/b", "a/b^k" or "a/p^k" (literal p).
mpq_class parse_rational(const std::string& s, int p);
// "a" if integral, "a/p^k" (with p written out) for p-power denominators, else "a/b".
std::string format_rational(const mpq_class& x, int p);

class QMatrix {
 public:
  QMatrix(int rows, int cols);
  static QMatrix identity(int m);
  static QMatrix diagonal(const std::vector<mpq_class>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const mpq_class& at(int r, int c) const { return data_[r * cols_ + c]; }
  mpq_class& at(int r, int c) { return data_[r * cols_ + c]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix scaled(const mpq_class& s) const;
  QMatrix transpose() const;
  QMatrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const QMatrix& b);
  mpq_class det() const;
  bool invertible() const { return det() != 0; }
  QMatrix inverse() const;  // throws std::domain_error if singular

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<mpq_class> data_;
};

ExtInt min_valuation(const QMatrix& m, int p);
QMatrix symplectic_form(int n);
bool is_symplectic(const QMatrix& g);

// g = [[A, B], [C, D]] in GL_{2n}(Q) or Sp_{2n}(Q) with a chosen prime p.
class BlockMatrix {
 public:
  BlockMatrix(GroupKind kind, int p, QMatrix g);  // validates invertibility and the symplectic condition

  const GroupKind& kind() const { return kind_; }
  int p() const { return p_; }
  int n() const { return kind_.n; }
  const QMatrix& matrix() const { return g_; }
  QMatrix A() const { return g_.block(0, 0, n(), n()); }
  QMatrix B() const { return g_.block(0, n(), n(), n()); }
  QMatrix C() const { return g_.block(n(), 0, n(), n()); }
  QMatrix D() const { return g_.block(n(), n(), n(), n()); }
  bool integral() const { return min_valuation(g_, p_) >= ExtInt(0); }

  BlockMatrix operator*(const BlockMatrix& o) const;
  BlockMatrix inverse() const;
  friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) { return a.g_ == b.g_; }

 private:
  struct Trusted {};
  BlockMatrix(GroupKind kind, int p, QMatrix g, Trusted) : kind_(kind), p_(p), g_(std::move(g)) {}

  GroupKind kind_;
  int p_;
  QMatrix g_;
};

BlockMatrix identity(GroupKind kind, int p);
// diag(p^(n), 1^(n)) (kind A) or diag(p^(n), p^{-1 (n)}) (kind C), raised to k ∈ Z.
BlockMatrix gamma(GroupKind kind, int p, int k = 1);

// -∞ if D is singular, otherwise min v_p of the entries of D^{-1}C (+∞ if C = 0).
ExtInt h_invariant(const BlockMatrix& g);

enum class Level { Gamma0, Gamma1, GammaFull };
// Block congruences mod p^m; throws std::invalid_argument for non-integral g or m < 1.
bool in_level(const BlockMatrix& g, Level level, int m);

bool in_P_Gamma1(const BlockMatrix& g, int m);

struct Factorization {
  BlockMatrix p_part;       // [[A - B D^{-1} C, B], [0, D]]
  BlockMatrix gamma1_part;  // [[I, 0], [D^{-1} C, I]]
};
// Throws std::invalid_argument if h(g) < m.
Factorization factor_P_Gamma1(const BlockMatrix& g, int m);

bool is_block_upper(const BlockMatrix& g);

// Minimal k >= 0 with v(s_{J0}) <= v(s_J) + k |J ∩ {1..n}| for all J, where
// J0 = {n+1..2n}; +∞ if v(s_{J0}) = +∞. Keys are sorted 0-based column sets.
ExtInt anticanonical_radius(const std::map<std::vector<int>, ExtInt>& vals, int n);

// Valuations of the maximal minors of an n×2n basis matrix.
std::map<std::vector<int>, ExtInt> plucker_valuations(const QMatrix& basis, int p);

// Seeded samplers with small numerators; random_gamma1 is p-integral.
BlockMatrix random_gamma1(GroupKind kind, int p, int m, std::mt19937_64& rng);
BlockMatrix random_block_upper(GroupKind kind, int p, std::mt19937_64& rng);
// An element with finite h and entries possibly carrying p-power denominators.
BlockMatrix random_element(GroupKind kind, int p, std::mt19937_64& rng);

struct ContractReport {
  bool ok = true;
  int samples = 0;
  std::string failure;
};
// For `samples` draws g ∈ Γ₁(p^m): h(g γ^k) >= m + k (A) or m + 2k (C), and
// factor_P_Gamma1(g γ^k, ·) reassembles exactly with valid factors.
ContractReport contract_check(GroupKind kind, int p, int m, int k, int samples, std::uint64_t seed);

}  // namespace bruhat::padic
