#pragma once

// Weyl groups of GL_{2n} (type A_{2n-1}, realized as S_{2n}) and Sp_{2n}
// (type C_n, realized as the centralizer of i <-> i+n inside S_{2n}),
// together with the Siegel parabolic W_I and its coset machinery.
//
// Permutations are stored 0-based; anything printed for humans is 1-based.

#include <cstdint>
#include <string>
#include <vector>

namespace bruhat {

enum class Family { TypeA_GL2n, TypeC_Sp2n };

struct GroupKind {
  Family family;
  int n;  // half-rank; permutations act on 2n points

  GroupKind(Family f, int half_rank);

  int degree() const { return 2 * n; }
  bool is_symplectic() const { return family == Family::TypeC_Sp2n; }
  std::string name() const;  // "A" or "C"

  friend bool operator==(const GroupKind&, const GroupKind&) = default;
};

GroupKind parse_kind(const std::string& letter, int n);

namespace weyl {

// Involution i <-> i+n on {0,...,2n-1}.
inline int iota(int i, int n) { return i < n ? i + n : i - n; }

class WeylElement {
 public:
  explicit WeylElement(GroupKind kind);  // identity
  WeylElement(GroupKind kind, std::vector<int> perm);

  // 1-based transpositions, composed right to left like cycle notation.
  static WeylElement from_transpositions(GroupKind kind,
                                         const std::vector<std::pair<int, int>>& swaps);

  const GroupKind& kind() const { return kind_; }
  const std::vector<int>& perm() const { return perm_; }
  int operator()(int i) const { return perm_[i]; }

  WeylElement operator*(const WeylElement& rhs) const;  // (a*b)(i) = a(b(i))
  WeylElement inverse() const;
  bool is_identity() const;

  std::uint64_t key() const;  // injective for 2n <= 16
  std::string cycles() const;  // 1-based cycle notation, "()" for identity

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.kind_ == b.kind_ && a.perm_ == b.perm_;
  }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    return a.perm_ < b.perm_;
  }

 private:
  GroupKind kind_;
  std::vector<int> perm_;
};

// Subset J of {1,...,2n} of size n, stored 0-based and sorted.
class SubsetJ {
 public:
  SubsetJ(GroupKind kind, std::vector<int> members);

  const GroupKind& kind() const { return kind_; }
  const std::vector<int>& members() const { return members_; }
  bool contains(int i) const;
  int lower_count() const;  // |J ∩ {1..n}|
  std::string str() const;  // 1-based, e.g. "{1,3}"

  friend bool operator==(const SubsetJ&, const SubsetJ&) = default;
  friend bool operator<(const SubsetJ& a, const SubsetJ& b) { return a.members_ < b.members_; }

 private:
  GroupKind kind_;
  std::vector<int> members_;
};

std::vector<WeylElement> simple_reflections(GroupKind kind);

// Simple reflections generating W_I for the Siegel mark I = S - {s_n}.
std::vector<WeylElement> siegel_reflections(GroupKind kind);

// Every element of W, in BFS order from the identity.
const std::vector<WeylElement>& elements(GroupKind kind);

// Every element of W_I.
std::vector<WeylElement> siegel_subgroup(GroupKind kind);

int length(const WeylElement& w);
int inversion_count(const WeylElement& w);
WeylElement longest_element(GroupKind kind);

int tau(const WeylElement& w);
WeylElement sigma(GroupKind kind, int k);  // prod_{i<=k} (i, n+i)
std::vector<WeylElement> double_cosets(GroupKind kind);
WeylElement canonical_rep(const WeylElement& w);
WeylElement delta(const WeylElement& w);

// Brute-force partition of W into W_I-double cosets; each inner vector
// is one orbit, ordered by first appearance in elements(kind).
std::vector<std::vector<WeylElement>> enumerate_double_coset_orbits(GroupKind kind);

bool in_siegel_subgroup(const WeylElement& w);  // w({1..n}) = {1..n}

WeylElement w_J(const SubsetJ& J);
std::vector<SubsetJ> all_subsets(GroupKind kind);  // Σ (type A) or Σ_p (type C)
SubsetJ coset_subset(const WeylElement& w);        // {w(1),...,w(n)}

}  // namespace weyl
}  // namespace bruhat
