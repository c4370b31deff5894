#pragma once

// Dense linear algebra over a prime field F_q with tiny dimensions.

#include <cstdint>
#include <string>
#include <vector>

#include "bruhat/roots.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat::fq {

class Field {
 public:
  explicit Field(int q);  // q must be 2, 3 or 5

  int q() const { return q_; }
  int add(int a, int b) const { return (a + b) % q_; }
  int sub(int a, int b) const { return (a - b + q_) % q_; }
  int mul(int a, int b) const { return (a * b) % q_; }
  int neg(int a) const { return (q_ - a) % q_; }
  int inv(int a) const;
  int generator() const;  // primitive root

 private:
  int q_;
};

class Matrix {
 public:
  Matrix(int rows, int cols);
  static Matrix identity(int m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return data_[r * cols_ + c]; }
  void set(int r, int c, int v) { data_[r * cols_ + c] = static_cast<std::uint8_t>(v); }

  Matrix mul(const Matrix& rhs, const Field& f) const;
  Matrix transpose() const;
  Matrix block(int r0, int c0, int nr, int nc) const;
  std::uint64_t key() const;  // injective for rows*cols <= 21 and q <= 5

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<std::uint8_t> data_;
};

// In-place reduced row echelon form; returns the rank and drops zero rows.
int rref(Matrix& m, const Field& f);
int rank(Matrix m, const Field& f);
int det(Matrix m, const Field& f);
bool invertible(const Matrix& m, const Field& f);

// J_n = [[0, I], [-I, 0]].
Matrix symplectic_form(int n, const Field& f);
bool is_symplectic(const Matrix& g, const Field& f);

// n-dimensional subspace of F_q^{2n}, stored as the row space of its RREF.
class Subspace {
 public:
  Subspace(Matrix basis, const Field& f);  // basis rows must be independent

  const Matrix& basis() const { return basis_; }
  int dim() const { return basis_.rows(); }
  int ambient() const { return basis_.cols(); }
  std::uint64_t key() const { return basis_.key(); }

  // g·U = span{g u}; with rows as vectors this is rows · g^T.
  Subspace act(const Matrix& g, const Field& f) const;
  int intersection_dim(const Subspace& other, const Field& f) const;
  int intersection_dim_coordinate(const std::vector<int>& coords, const Field& f) const;
  bool totally_isotropic(const Field& f) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Matrix basis_;
};

Subspace coordinate_subspace(int ambient, const std::vector<int>& coords, const Field& f);

// Matrices of the root subgroup element x_alpha(1) in G(F_q).
Matrix root_element(const roots::Root& r, const Field& f);
// Generators of the diagonal torus T(F_q).
std::vector<Matrix> torus_generators(GroupKind kind, const Field& f);
// Representative in G(F_q) of a Weyl element (signed permutation in type C).
Matrix weyl_matrix(const weyl::WeylElement& w, const Field& f);

enum class Subgroup { Borel, OppositeBorel, Parabolic, OppositeParabolic, Whole };
std::vector<Matrix> generators(GroupKind kind, Subgroup which, const Field& f);

std::uint64_t group_order(GroupKind kind, int q);
// Every element of G(F_q), by BFS from the identity; throws std::length_error
// when the order exceeds `limit`.
std::vector<Matrix> enumerate_group(GroupKind kind, const Field& f, std::uint64_t limit = 1000000);

}  // namespace bruhat::fq
