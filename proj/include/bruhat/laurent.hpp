#pragma once

// Multivariate Laurent polynomials over Z[v, v^{-1}] with v^2 = q.
//
// A term is an exponent vector over the named variables together with a
// power of v, and an integer coefficient; terms are kept in a std::map, so
// the monomial order is lexicographic on (exponents, v-power).

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bruhat::laurent {

struct Monomial {
  std::vector<int> exps;
  int vexp = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// A block of consecutive variables permuted by S_len; with_inversion adds the
// sign changes x_i -> x_i^{-1} (hyperoctahedral group S_len ⋉ (Z/2)^len).
struct SymBlock {
  int start;
  int len;
  bool with_inversion = false;
  friend bool operator==(const SymBlock&, const SymBlock&) = default;
};
using Symmetry = std::vector<SymBlock>;

using VarList = std::vector<std::string>;

// "W", 3 -> {"W_1", "W_2", "W_3"}.
VarList indexed_vars(const std::string& prefix, int count);

class SymLaurentPoly {
 public:
  using TermMap = std::map<Monomial, mpz_class>;

  explicit SymLaurentPoly(VarList vars);  // zero
  static SymLaurentPoly constant(const VarList& vars, long c, int vexp = 0);
  static SymLaurentPoly variable(const VarList& vars, int index, int power = 1);
  static SymLaurentPoly term(const VarList& vars, const Monomial& m, const mpz_class& c);

  const VarList& vars() const { return vars_; }
  const Symmetry& symmetry() const { return sym_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_invariant(const Symmetry& sym) const;
  // Copy carrying `sym`; throws std::invalid_argument if not invariant.
  SymLaurentPoly with_symmetry(Symmetry sym) const;

  SymLaurentPoly operator+(const SymLaurentPoly& o) const;
  SymLaurentPoly operator-(const SymLaurentPoly& o) const;
  SymLaurentPoly operator-() const;
  SymLaurentPoly operator*(const SymLaurentPoly& o) const;
  SymLaurentPoly& operator+=(const SymLaurentPoly& o) { return *this = *this + o; }
  SymLaurentPoly& operator*=(const SymLaurentPoly& o) { return *this = *this * o; }
  SymLaurentPoly times_v(int k) const;
  SymLaurentPoly pow(int e) const;  // negative e only for units

  // Single term with coefficient ±1.
  bool is_unit() const;
  SymLaurentPoly inverse_unit() const;

  // Ring map sending variable i to images[i]; each image must be a unit.
  // v is fixed.
  SymLaurentPoly substitute(const std::vector<SymLaurentPoly>& images) const;

  std::string str() const;

  friend bool operator==(const SymLaurentPoly& a, const SymLaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  void require_same_ring(const SymLaurentPoly& o) const;

  VarList vars_;
  Symmetry sym_;
  TermMap terms_;
};

// Sum over the orbit of each term under the declared symmetry.
SymLaurentPoly symmetrize(const SymLaurentPoly& p, const Symmetry& sym);

// First term (in monomial order) at which a and b differ; empty if equal.
std::string first_difference(const SymLaurentPoly& a, const SymLaurentPoly& b);

}  // namespace bruhat::laurent
