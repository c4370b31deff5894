#include <doctest.h>

#include <set>

#include "bruhat/roots.hpp"

using namespace bruhat;
using namespace bruhat::roots;
using weyl::WeylElement;

namespace {

GroupKind A(int n) { return GroupKind(Family::TypeA_GL2n, n); }
GroupKind C(int n) { return GroupKind(Family::TypeC_Sp2n, n); }

// Roots of P_I as raw index pairs: a < b, or a, b in the same half.
// In type C the pair (a,b) and (iota b, iota a) are identified.
std::set<std::pair<int, int>> parabolic_pairs(GroupKind kind) {
  const int n = kind.n, m = 2 * n;
  std::set<std::pair<int, int>> out;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      if (!(a < b || (a < n) == (b < n))) continue;
      std::pair<int, int> r{a, b};
      if (kind.is_symplectic()) r = std::min(r, std::pair{weyl::iota(b, n), weyl::iota(a, n)});
      out.insert(r);
    }
  return out;
}

// dim P w P / P = dim P - dim (P ∩ w P w^{-1}) = |R \ wR|.
int orbit_dim_oracle(const WeylElement& w) {
  const GroupKind kind = w.kind();
  const int n = kind.n;
  const auto R = parabolic_pairs(kind);
  std::set<std::pair<int, int>> wR;
  for (auto [a, b] : R) {
    std::pair<int, int> r{w(a), w(b)};
    if (kind.is_symplectic()) r = std::min(r, std::pair{weyl::iota(r.second, n), weyl::iota(r.first, n)});
    wR.insert(r);
  }
  int c = 0;
  for (const auto& r : R) c += !wR.count(r);
  return c;
}

}  // namespace

TEST_CASE("root systems") {
  CHECK(all_roots(A(1)) == RootSet{chi(A(1), 1, 2), chi(A(1), 2, 1)});
  CHECK(all_roots(C(1)) == RootSet{psi(C(1), 1, 1, +1), psi(C(1), 1, 1, -1)});
  CHECK(positive_roots(C(2)) ==
        RootSet{chi(C(2), 1, 2), psi(C(2), 1, 1), psi(C(2), 1, 2), psi(C(2), 2, 2)});
  for (int n = 1; n <= 4; ++n) {
    CHECK(all_roots(A(n)).size() == static_cast<std::size_t>(2 * n * (2 * n - 1)));
    CHECK(all_roots(C(n)).size() == static_cast<std::size_t>(2 * n * n));
    CHECK(simple_roots(A(n)).size() == static_cast<std::size_t>(2 * n - 1));
    CHECK(simple_roots(C(n)).size() == static_cast<std::size_t>(n));
  }
  CHECK(chi(A(2), 1, 2).str() == "chi_{1,2}");
}

TEST_CASE("weyl action") {
  const auto s = WeylElement::from_transpositions(A(1), {{1, 2}});
  CHECK(weyl_action(WeylElement(A(2)), all_roots(A(2))) == all_roots(A(2)));
  CHECK(weyl_action(s, chi(A(1), 1, 2)) == chi(A(1), 2, 1));
  for (int n = 1; n <= 3; ++n)
    for (GroupKind kind : {A(n), C(n)})
      for (const auto& w : weyl::elements(kind)) REQUIRE(weyl_action(w, all_roots(kind)) == all_roots(kind));
}

TEST_CASE("parabolic data") {
  for (int n = 1; n <= 4; ++n)
    for (GroupKind kind : {A(n), C(n)}) {
      const auto pd = parabolic_data(kind);
      const std::size_t open = kind.is_symplectic() ? n * (n + 1) / 2 : n * n;
      CHECK(pd.nI.size() == open);
      CHECK(pd.nbarI.size() == open);
      CHECK(open_cell_dim(kind) == static_cast<int>(open));
      RootSet all = pd.phiI;
      all.insert(pd.nI.begin(), pd.nI.end());
      all.insert(pd.nbarI.begin(), pd.nbarI.end());
      CHECK(all == all_roots(kind));
      CHECK(pd.phiI.size() + pd.nI.size() + pd.nbarI.size() == all_roots(kind).size());
    }
}

TEST_CASE("cell dimensions") {
  for (int n = 1; n <= 4; ++n)
    for (GroupKind kind : {A(n), C(n)}) {
      CHECK(cell_dim_by_roots(WeylElement(kind)) == 0);
      CHECK(unipotent_intersection_dim(WeylElement(kind)) == open_cell_dim(kind));
      for (int k = 0; k <= n; ++k) {
        const int expected = kind.is_symplectic() ? k * (2 * n - k + 1) / 2 : k * (2 * n - k);
        CHECK(cell_dim_by_roots(weyl::sigma(kind, k)) == expected);
      }
      const auto w0 = weyl::longest_element(kind);
      for (const auto& w : weyl::elements(kind)) {
        REQUIRE(cell_dim_by_roots(w) == orbit_dim_oracle(w));
        REQUIRE(unipotent_intersection_dim(w) == opposite_cell_dim(w));
        REQUIRE(standard_unipotent_intersection_dim(w) == cell_dim_by_roots(w * w0));
      }
      for (int k = 0; k <= n; ++k) {
        const auto w = w0 * weyl::sigma(kind, k) * w0;
        CHECK(cell_dim_by_roots(w) == orbit_dim_oracle(w));
      }
    }
}

TEST_CASE("N_{0,J} ranks") {
  for (int n = 1; n <= 3; ++n)
    for (GroupKind kind : {A(n), C(n)}) {
      std::vector<int> low(n);
      for (int i = 0; i < n; ++i) low[i] = i;
      CHECK(n0J_rank(weyl::SubsetJ(kind, low)) == open_cell_dim(kind));
      const auto w0 = weyl::longest_element(kind);
      for (const auto& J : weyl::all_subsets(kind)) {
        const int r = n0J_rank(J);
        CHECK(r == cell_dim_by_roots(weyl::w_J(J) * w0));
      }
    }
}
