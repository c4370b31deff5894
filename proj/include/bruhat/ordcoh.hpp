#pragma once

// Cohomology of Z_p^d with coefficients in Λ = Z/p^r via the Koszul complex,
// corestriction to (p^a Z_p)^d, the Hecke operator h_γ and ordinary projectors.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace bruhat::ordcoh {

class Lambda {
 public:
  Lambda(int p, int r);  // p prime, r >= 1, p^r < 2^31

  int p() const { return p_; }
  int r() const { return r_; }
  std::int64_t modulus() const { return mod_; }
  std::int64_t reduce(std::int64_t x) const;
  std::int64_t pow_p(int e) const;  // p^e mod p^r
  bool is_unit(std::int64_t x) const { return reduce(x) % p_ != 0; }
  std::string str() const;  // "Z/9"

  friend bool operator==(const Lambda&, const Lambda&) = default;

 private:
  int p_;
  int r_;
  std::int64_t mod_;
};

// Matrix over Λ, entries kept in [0, p^r).
class LMatrix {
 public:
  LMatrix(Lambda lam, int rows, int cols);
  static LMatrix identity(Lambda lam, int m);
  static LMatrix diagonal(Lambda lam, const std::vector<std::int64_t>& d);

  const Lambda& lambda() const { return lam_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t at(int r, int c) const { return data_[r * cols_ + c]; }
  void set(int r, int c, std::int64_t v) { data_[r * cols_ + c] = lam_.reduce(v); }

  LMatrix operator*(const LMatrix& o) const;
  LMatrix operator+(const LMatrix& o) const;
  LMatrix operator-(const LMatrix& o) const;
  LMatrix pow(std::uint64_t e) const;
  bool is_zero() const;
  // Rank of the reduction mod p; for an idempotent this is the Λ-rank of its image.
  int rank_mod_p() const;

  friend bool operator==(const LMatrix& a, const LMatrix& b) {
    return a.lam_ == b.lam_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Lambda lam_;
  int rows_;
  int cols_;
  std::vector<std::int64_t> data_;
};

inline constexpr int kMaxRank = 12;

std::uint64_t binomial(int n, int k);
// i-subsets of {0..d-1} as bitmasks, in increasing order.
std::vector<std::uint32_t> exterior_basis(int d, int i);

// Differential C^i -> C^{i+1} of the Koszul cochain complex of Z_p^d acting on Λ
// through the characters chi[j] (the image of the j-th generator). Trivial
// coefficients: chi = (1,...,1).
LMatrix koszul_differential(int d, int i, const Lambda& lam, const std::vector<std::int64_t>& chi);

struct GradedCohomology {
  int d;
  Lambda lambda;
  std::vector<std::vector<std::uint32_t>> bases;  // basis of H^i, one subset mask each
  std::vector<int> ranks() const;
};
// Trivial coefficients; throws std::length_error for d > kMaxRank.
GradedCohomology koszul_cohomology(int d, const Lambda& lam);

// Finite model Map(Z/p^a, Λ) with Δf(x) = f(x+1) - f(x) and cores = sum.
class DeltaModel {
 public:
  DeltaModel(int a, Lambda lam);  // p^a <= 2^20

  int size() const { return size_; }
  const Lambda& lambda() const { return lam_; }
  std::vector<std::int64_t> delta(const std::vector<std::int64_t>& f) const;
  std::int64_t cores(const std::vector<std::int64_t>& f) const;
  // g with Δg = f, if one exists (iff cores(f) = 0).
  std::optional<std::vector<std::int64_t>> delta_preimage(const std::vector<std::int64_t>& f) const;
  std::vector<std::int64_t> constant(std::int64_t c) const;
  std::vector<std::int64_t> dirac(int x) const;

 private:
  int size_;
  Lambda lam_;
};

struct Rank1Cores {
  LMatrix degree0;  // 1x1
  LMatrix degree1;  // 1x1
};
Rank1Cores cores_rank1(int a, const Lambda& lam);

// One diagonal matrix per degree i = 0..d.
std::vector<LMatrix> cores_kunneth(int d, int a, const Lambda& lam);
// h_γ = cores ∘ m_γ with m_γ the identity in the exterior basis.
std::vector<LMatrix> hecke_gamma(int d, int a, const Lambda& lam);

inline constexpr int kProjectorCap = 32;

struct Projector {
  LMatrix e;            // U^{k!}
  LMatrix u_pow_minus;  // U^{k!-1}
  int k;
};
// First k <= kProjectorCap with U^{k!} idempotent; throws std::runtime_error otherwise.
// The cap covers every unit order in GL_m(Z/4) and GL_m(Z/9) for m <= 6.
Projector ordinary_projector(const LMatrix& U);

struct ProjectorChecks {
  bool idempotent;
  bool commutes;
  bool invertible_on_image;      // U · U^{k!-1} e = e
  bool nilpotent_on_complement;  // U^{k!} (1 - e) = 0
  bool all() const { return idempotent && commutes && invertible_on_image && nilpotent_on_complement; }
};
ProjectorChecks check_projector(const LMatrix& U, const Projector& pr);

std::vector<int> ordinary_ranks(int d, int a, const Lambda& lam);

LMatrix random_endo(const Lambda& lam, int size, std::mt19937_64& rng);

}  // namespace bruhat::ordcoh
