#pragma once

// Root systems of GL_{2n} and Sp_{2n} as symbolic tokens.
//
// Every root is stored as an ordered index pair (a,b), a != b, naming the
// character t_a / t_b of the diagonal torus of GL_{2n}. For Sp_{2n} the
// torus is diag(t_1..t_n, t_1^{-1}..t_n^{-1}), so (a,b) and (iota b, iota a)
// name the same character; the lexicographically smaller pair is kept.
// The Weyl action is then (a,b) -> (w a, w b) followed by canonicalization.

#include <set>
#include <string>

#include "bruhat/weyl.hpp"

namespace bruhat::roots {

enum class Shape { Chi, Psi };

class Root {
 public:
  Root(GroupKind kind, int a, int b);  // 0-based pair, canonicalized

  const GroupKind& kind() const { return kind_; }
  int a() const { return a_; }
  int b() const { return b_; }

  bool positive() const;
  bool in_levi() const;  // both indices in the same half

  // Paper-style label: Chi(i,j,sign) or Psi(i,j,sign), 1-based, i<j (i<=j for Psi).
  Shape shape() const;
  int i() const;
  int j() const;
  int sign() const;
  std::string str() const;  // e.g. "chi_{1,2}", "psi_{1,2}^-1"

  friend bool operator==(const Root& x, const Root& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator<(const Root& x, const Root& y) {
    return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
  }

 private:
  GroupKind kind_;
  int a_;
  int b_;
};

Root chi(GroupKind kind, int i, int j, int sign = +1);  // 1-based
Root psi(GroupKind kind, int i, int j, int sign = +1);  // 1-based, type C only

using RootSet = std::set<Root>;

RootSet all_roots(GroupKind kind);
RootSet positive_roots(GroupKind kind);
RootSet negative_roots(GroupKind kind);
RootSet simple_roots(GroupKind kind);

Root weyl_action(const weyl::WeylElement& w, const Root& r);
RootSet weyl_action(const weyl::WeylElement& w, const RootSet& s);

struct ParabolicData {
  RootSet phiI;   // roots of the Levi
  RootSet nI;     // roots of N_I = Φ+ - Φ_I
  RootSet nbarI;  // roots of the opposite unipotent radical
};
ParabolicData parabolic_data(GroupKind kind);

// #((Φ+ ∪ Φ_I) \ w(Φ- ∪ Φ_I)) = dim P̄_I w P_I / P_I.
int opposite_cell_dim(const weyl::WeylElement& w);

// dim P_I w P_I / P_I, via the w0 translation P_I w P_I = w0 P̄_I (w0 w) P_I.
int cell_dim_by_roots(const weyl::WeylElement& w);

// #(w(Φ- ∪ Φ_I) ∩ (Φ- \ Φ_I)) = dim (w P̄_I w^{-1} ∩ N̄_I).
int unipotent_intersection_dim(const weyl::WeylElement& w);

// #(w(Φ+ ∪ Φ_I) ∩ (Φ+ \ Φ_I)) = dim (w P_I w^{-1} ∩ N_I).
int standard_unipotent_intersection_dim(const weyl::WeylElement& w);

// |roots(N_I) ∩ w_J(roots of P_I)|, the Z_p-rank of N_{0,J}.
int n0J_rank(const weyl::SubsetJ& J);

// Dimension of the open cell: n^2 (type A), n(n+1)/2 (type C).
int open_cell_dim(GroupKind kind);

}  // namespace bruhat::roots
