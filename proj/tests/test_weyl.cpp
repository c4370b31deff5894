#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "bruhat/weyl.hpp"

using namespace bruhat;
using namespace bruhat::weyl;

namespace {

GroupKind A(int n) { return GroupKind(Family::TypeA_GL2n, n); }
GroupKind C(int n) { return GroupKind(Family::TypeC_Sp2n, n); }

// |{1..n} ∩ w{1..n}| read straight off the permutation.
int low_overlap(const WeylElement& w) {
  const int n = w.kind().n;
  int c = 0;
  for (int i = 0; i < n; ++i) c += w(i) < n;
  return c;
}

// Word lengths by BFS over the Cayley graph on the simple reflections.
std::map<std::vector<int>, int> bfs_lengths(GroupKind kind) {
  std::map<std::vector<int>, int> dist;
  std::queue<WeylElement> todo;
  const WeylElement id(kind);
  dist[id.perm()] = 0;
  todo.push(id);
  const auto gens = simple_reflections(kind);
  while (!todo.empty()) {
    const WeylElement w = todo.front();
    todo.pop();
    for (const auto& s : gens) {
      const WeylElement x = w * s;
      if (dist.emplace(x.perm(), dist[w.perm()] + 1).second) todo.push(x);
    }
  }
  return dist;
}

std::size_t central_binomial(int n) {
  std::size_t b = 1;
  for (int i = 1; i <= n; ++i) b = b * (n + i) / i;
  return b;
}

std::vector<std::string> cycle_strings(const std::vector<WeylElement>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.cycles());
  return out;
}

}  // namespace

TEST_CASE("simple reflections") {
  CHECK(cycle_strings(simple_reflections(A(1))) == std::vector<std::string>{"(1,2)"});
  CHECK(cycle_strings(simple_reflections(C(1))) == std::vector<std::string>{"(1,2)"});
  CHECK(cycle_strings(simple_reflections(C(2))) == std::vector<std::string>{"(1,2)(3,4)", "(2,4)"});
  CHECK(simple_reflections(A(3)).size() == 5);
  CHECK(simple_reflections(C(3)).size() == 3);
}

TEST_CASE("group orders") {
  const std::map<int, std::size_t> fact{{1, 2}, {2, 24}, {3, 720}, {4, 40320}};
  const std::map<int, std::size_t> hyper{{1, 2}, {2, 8}, {3, 48}, {4, 384}};
  for (int n = 1; n <= 4; ++n) {
    CHECK(elements(A(n)).size() == fact.at(n));
    CHECK(elements(C(n)).size() == hyper.at(n));
    for (const auto& w : elements(C(n)))
      for (int i = 0; i < 2 * n; ++i) REQUIRE(w(iota(i, n)) == iota(w(i), n));
  }
}

TEST_CASE("length") {
  CHECK(length(WeylElement(A(2))) == 0);
  CHECK(length(WeylElement::from_transpositions(A(2), {{1, 2}})) == 1);
  CHECK(length(longest_element(A(2))) == 6);
  for (int n = 1; n <= 3; ++n)
    for (GroupKind kind : {A(n), C(n)}) {
      const auto dist = bfs_lengths(kind);
      int max_len = 0;
      for (const auto& w : elements(kind)) {
        REQUIRE(length(w) == dist.at(w.perm()));
        max_len = std::max(max_len, length(w));
      }
      CHECK(length(longest_element(kind)) == max_len);
    }
}

TEST_CASE("longest element") {
  CHECK(longest_element(A(1)).cycles() == "(1,2)");
  CHECK(longest_element(A(2)).perm() == std::vector<int>{3, 2, 1, 0});
  for (int n = 1; n <= 4; ++n)
    for (GroupKind kind : {A(n), C(n)}) CHECK((longest_element(kind) * longest_element(kind)).is_identity());
}

TEST_CASE("tau") {
  CHECK(tau(WeylElement(A(3))) == 0);
  for (int n = 1; n <= 3; ++n)
    for (GroupKind kind : {A(n), C(n)}) {
      const auto wi = siegel_subgroup(kind);
      for (int k = 0; k <= n; ++k) {
        const auto s = sigma(kind, k);
        CHECK(tau(s) == k);
        for (const auto& u : wi)
          for (const auto& u2 : wi) REQUIRE(tau(u * s * u2) == k);
      }
      for (const auto& w : elements(kind)) REQUIRE(tau(w) == n - low_overlap(w));
    }
}

TEST_CASE("double cosets") {
  CHECK(cycle_strings(double_cosets(A(1))) == std::vector<std::string>{"()", "(1,2)"});
  CHECK(cycle_strings(double_cosets(A(2))) == std::vector<std::string>{"()", "(1,3)", "(1,3)(2,4)"});
  for (int n = 1; n <= 4; ++n)
    for (GroupKind kind : {A(n), C(n)}) {
      // Independent orbit count: close each element under left and right W_I.
      const auto wi = siegel_subgroup(kind);
      std::set<std::vector<int>> seen;
      int orbits = 0;
      for (const auto& w : elements(kind)) {
        if (seen.count(w.perm())) continue;
        ++orbits;
        for (const auto& u : wi)
          for (const auto& u2 : wi) seen.insert((u * w * u2).perm());
      }
      CHECK(orbits == n + 1);
      CHECK(enumerate_double_coset_orbits(kind).size() == static_cast<std::size_t>(n + 1));
    }
}

TEST_CASE("canonical representative") {
  for (int n = 1; n <= 3; ++n)
    for (GroupKind kind : {A(n), C(n)}) {
      const auto wi = siegel_subgroup(kind);
      for (int k = 0; k <= n; ++k) {
        CHECK(canonical_rep(sigma(kind, k)) == sigma(kind, k));
        for (const auto& u : wi) REQUIRE(canonical_rep(u * sigma(kind, k)) == sigma(kind, k));
      }
      for (const auto& orbit : enumerate_double_coset_orbits(kind)) {
        const auto r = canonical_rep(orbit.front());
        for (const auto& w : orbit) REQUIRE(canonical_rep(w) == r);
      }
    }
  for (int n = 1; n <= 4; ++n) CHECK(canonical_rep(longest_element(A(n))) == sigma(A(n), n));
}

TEST_CASE("w_J") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> low(n);
    for (int i = 0; i < n; ++i) low[i] = i;
    CHECK(w_J(SubsetJ(A(n), low)).is_identity());
  }
  CHECK(w_J(SubsetJ(A(2), {2, 3})).cycles() == "(1,3)(2,4)");
  for (int n = 1; n <= 3; ++n)
    for (GroupKind kind : {A(n), C(n)}) {
      const auto wi = siegel_subgroup(kind);
      const auto subsets = all_subsets(kind);
      CHECK(subsets.size() == (kind.is_symplectic() ? (std::size_t{1} << n) : central_binomial(n)));
      std::set<std::vector<int>> cosets;
      for (const auto& J : subsets) {
        const auto w = w_J(J);
        REQUIRE((w * w).is_identity());
        REQUIRE(coset_subset(w) == J);
        std::vector<int> image;
        for (int i = 0; i < n; ++i) image.push_back(w(i));
        std::sort(image.begin(), image.end());
        REQUIRE(image == J.members());
        REQUIRE(delta(w) == sigma(kind, n - J.lower_count()));
        for (const auto& u : wi) REQUIRE(delta(w * u) == delta(w));
        cosets.insert(image);
      }
      // J -> w_J W_I is a bijection onto W / W_I.
      CHECK(cosets.size() == subsets.size());
      CHECK(subsets.size() == elements(kind).size() / wi.size());
    }
  CHECK(delta(WeylElement(C(2))) == sigma(C(2), 0));
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(GroupKind(Family::TypeA_GL2n, 0), std::invalid_argument);
  CHECK_THROWS(parse_kind("B", 2));
  CHECK_THROWS(SubsetJ(A(2), {0}));
}
