#pragma once

// Brute-force F_q-point computations on Gr(n,2n) and the Lagrangian
// Grassmannian: cell censuses, orbit partitions and covering checks.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bruhat/fq.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat::flagfq {

inline constexpr std::uint64_t kPointLimit = 1000000;
inline constexpr std::uint64_t kGroupLimit = 1000000;

// Number of points of Gr(n,2n)(F_q) (type A) or of the Lagrangian
// Grassmannian (type C), from the closed formulas.
std::uint64_t expected_flag_size(GroupKind kind, int q);

// Every point, in canonical RREF, ordered by pivot pattern then entries.
// Throws std::length_error when Gr(n,2n)(F_q) has more than kPointLimit points.
std::vector<fq::Subspace> enumerate_flag(GroupKind kind, const fq::Field& f);

// n - dim(U ∩ span(e_1..e_n)).
int tau_of_point(const fq::Subspace& U, const fq::Field& f);

struct Census {
  std::map<int, std::uint64_t> cells;  // tau -> count
  std::uint64_t total = 0;
  std::uint64_t expected_total = 0;
  std::uint64_t open_cell = 0;           // count at tau = n
  std::uint64_t expected_open_cell = 0;  // q^{open_cell_dim}
  bool ok() const { return total == expected_total && open_cell == expected_open_cell; }
};
Census cell_census(GroupKind kind, const fq::Field& f);

// Orbit partition of the flag points under the subgroup generated by `gens`.
// Returns one orbit id per point of `points` (ids are the smallest member index).
std::vector<std::size_t> orbit_ids(const std::vector<fq::Subspace>& points,
                                   const std::vector<fq::Matrix>& gens, const fq::Field& f);

// True iff the P_I(F_q)-orbits are exactly the tau-fibers.
bool closure_order_check(GroupKind kind, const fq::Field& f);

struct CheckReport {
  bool ok = true;
  std::uint64_t checked = 0;  // elementary verifications performed
  std::string failure;        // first failure, empty if ok
};

// Over every g in G(F_q) and every w in W:
//   g U_0 in the B̄-orbit of w U_0  =>  g ∈ w P̄_I P_I,
//   g U_0 in the B-orbit of w U_0   =>  g ∈ w w0 P_I w0 P_I = w P̄_I P_I,
// and every g lies in some w P̄_I P_I.
CheckReport cover_lemma_check(GroupKind kind, const fq::Field& f);

// For every point x with tau(x) = t, some J ∈ Σ with δ(w_J) = canonical_rep(σ_t w0)
// has the whole B(F_q)-orbit of x inside {U : U ∩ U_J = 0}.
CheckReport finding_J_check(GroupKind kind, const fq::Field& f);

// Every J ∈ Σ with U ∩ U_J = 0 for all U in `orbit`.
std::vector<weyl::SubsetJ> admissible_subsets(const std::vector<fq::Subspace>& orbit, GroupKind kind,
                                              const fq::Field& f);

// Maximal minors of the basis, keyed by sorted 0-based column sets,
// scaled so that the first nonzero minor is 1.
std::map<std::vector<int>, int> plucker(const fq::Subspace& U, const fq::Field& f);

}  // namespace bruhat::flagfq
