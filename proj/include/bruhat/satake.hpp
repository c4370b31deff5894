#pragma once

// Spherical Hecke generators, the unnormalized Satake maps and the
// characteristic-polynomial factorization for the unitary (GL_{2n}, kind A)
// and real (Sp_{2n}, kind C) cases.

#include <optional>
#include <string>
#include <vector>

#include "bruhat/laurent.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat::satake {

using laurent::SymLaurentPoly;
using laurent::Symmetry;
using laurent::VarList;

Symmetry symmetric_group(int start, int len);      // S_len on a block
Symmetry hyperoctahedral_group(int start, int len);  // S_len ⋉ (Z/2)^len on a block

// Y_1..Y_{2n} (unitary G-side) and X_1..X_n (real G-side).
VarList unitary_g_ring(int n);
VarList real_g_ring(int n);
// W_1..W_n, Z_1..Z_n, c_w, c_wc and W_1..W_n, c_w.
VarList unitary_m_ring(int n);
VarList real_m_ring(int n);
int index_of(const VarList& ring, const std::string& name);

std::vector<SymLaurentPoly> variables(const VarList& ring, int start, int count);

// e_i of the given elements (which may be arbitrary Laurent polynomials).
SymLaurentPoly elementary_symmetric(int i, const VarList& ring, const std::vector<SymLaurentPoly>& elems);

// v^{i(n-i)} e_i over ring[start .. start+n).
SymLaurentPoly t_M(int i, int n, const VarList& ring, int start);
// v^{i(2n-i)} e_i(Y_1..Y_{2n}).
SymLaurentPoly t_G_unitary(int i, int n);
// v^{i(2n+1-i)} e_i of the multiset {X_1^{±1}, ..., X_n^{±1}, 1}.
SymLaurentPoly t_G_real(int i, int n);

// Y_i -> v^{-n} W_i, Y_{n+j} -> v^n Z_j^{-1}, into unitary_m_ring(n).
SymLaurentPoly satake_unitary(const SymLaurentPoly& p);
// X_i -> v^{-(n+1)} W_i, into real_m_ring(n).
SymLaurentPoly satake_real(const SymLaurentPoly& p);

// coeffs[k] is the coefficient of X^k.
struct CharPoly {
  std::vector<SymLaurentPoly> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_monic() const;
  std::string str() const;
  CharPoly operator*(const CharPoly& o) const;
  friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.coeffs == b.coeffs; }
};

// X - a.
CharPoly linear(const SymLaurentPoly& a);
// u·P(X), and P(a·X) for a unit a.
CharPoly scale(const CharPoly& p, const SymLaurentPoly& u);
CharPoly scale_argument(const CharPoly& p, const SymLaurentPoly& a);
// c^n P(c^{-1} X).
CharPoly twist(const CharPoly& p, const SymLaurentPoly& c);

// X^n - T_1 X^{n-1} + ... + (-1)^i q^{i(i-1)/2} T_i X^{n-i} + ... over ring[start..start+n).
CharPoly char_poly_M(int n, const VarList& ring, int start, std::optional<int> twist_var = std::nullopt);
// X^n P(1/X) / P(0); P(0) must be a unit.
CharPoly dual_char_poly(const CharPoly& p);
// Kind A: degree 2n over Y; kind C: degree 2n+1 over X.
CharPoly char_poly_G(GroupKind kind);

struct Verification {
  bool verdict = false;
  CharPoly g_side;
  CharPoly m_side;
  std::string first_difference;  // "X^k: monomial: a vs b", empty when equal
};

// Kind A (unitary): n <= 3; kind C (real): n <= 2.
Verification verify_determinant_factorization(GroupKind kind, bool with_twist = true);

}  // namespace bruhat::satake
