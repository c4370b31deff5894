#include "bruhat/flagfq.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "bruhat/roots.hpp"

namespace bruhat::flagfq {

namespace {

constexpr std::uint64_t kSaturate = std::uint64_t{1} << 62;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturate / a) return kSaturate;
  return std::min(a * b, kSaturate);
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r = sat_mul(r, b);
  return r;
}

// Gaussian binomial [m choose k]_q.
std::uint64_t gaussian_binomial(int m, int k, int q) {
  std::vector<std::vector<std::uint64_t>> c(m + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (int i = 0; i <= m; ++i) c[i][0] = 1;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= std::min(i, k); ++j)
      c[i][j] = std::min(kSaturate, c[i - 1][j - 1] + sat_mul(ipow(q, j), c[i - 1][j]));
  return c[m][k];
}

std::vector<std::vector<int>> combinations(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  if (k > m) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == m - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

std::vector<int> lower_coords(int n) {
  std::vector<int> c(n);
  std::iota(c.begin(), c.end(), 0);
  return c;
}

fq::Subspace column_span(const fq::Matrix& g, int n, const fq::Field& f) {
  return fq::Subspace(g.block(0, 0, g.rows(), n).transpose(), f);
}

fq::Matrix inverse_of_weyl(const weyl::WeylElement& w, const fq::Field& f) {
  return fq::weyl_matrix(w.inverse(), f);
}

bool top_left_invertible(const fq::Matrix& g, int n, const fq::Field& f) {
  return fq::invertible(g.block(0, 0, n, n), f);
}

class PointIndex {
 public:
  explicit PointIndex(const std::vector<fq::Subspace>& points) {
    for (std::size_t i = 0; i < points.size(); ++i) index_.emplace(points[i].key(), i);
  }
  std::size_t at(const fq::Subspace& U) const {
    auto it = index_.find(U.key());
    if (it == index_.end()) throw std::logic_error("point missing from flag enumeration");
    return it->second;
  }

 private:
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace

std::uint64_t expected_flag_size(GroupKind kind, int q) {
  if (!kind.is_symplectic()) return gaussian_binomial(2 * kind.n, kind.n, q);
  std::uint64_t total = 1;
  for (int i = 1; i <= kind.n; ++i) total = sat_mul(total, ipow(q, i) + 1);
  return total;
}

std::vector<fq::Subspace> enumerate_flag(GroupKind kind, const fq::Field& f) {
  const int n = kind.n, m = kind.degree(), q = f.q();
  const GroupKind ambient(Family::TypeA_GL2n, n);
  const std::uint64_t work = expected_flag_size(ambient, q);
  if (n > 3 || work > kPointLimit)
    throw std::length_error("Gr(" + std::to_string(n) + "," + std::to_string(m) + ")(F_" + std::to_string(q) +
                            ") exceeds the enumeration limit");
  std::vector<fq::Subspace> out;
  for (const auto& piv : combinations(m, n)) {
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < n; ++r)
      for (int c = piv[r] + 1; c < m; ++c)
        if (!std::binary_search(piv.begin(), piv.end(), c)) free.emplace_back(r, c);
    std::vector<int> digits(free.size(), 0);
    while (true) {
      fq::Matrix b(n, m);
      for (int r = 0; r < n; ++r) b.set(r, piv[r], 1);
      for (std::size_t i = 0; i < free.size(); ++i) b.set(free[i].first, free[i].second, digits[i]);
      fq::Subspace U(std::move(b), f);
      if (!kind.is_symplectic() || U.totally_isotropic(f)) out.push_back(std::move(U));
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  if (out.size() != expected_flag_size(kind, q)) throw std::logic_error("flag enumeration has the wrong size");
  return out;
}

int tau_of_point(const fq::Subspace& U, const fq::Field& f) {
  const int n = U.dim();
  return n - U.intersection_dim_coordinate(lower_coords(n), f);
}

Census cell_census(GroupKind kind, const fq::Field& f) {
  Census c;
  for (int t = 0; t <= kind.n; ++t) c.cells[t] = 0;
  for (const auto& U : enumerate_flag(kind, f)) {
    ++c.cells[tau_of_point(U, f)];
    ++c.total;
  }
  c.expected_total = expected_flag_size(kind, f.q());
  c.open_cell = c.cells[kind.n];
  c.expected_open_cell = ipow(f.q(), roots::open_cell_dim(kind));
  return c;
}

std::vector<std::size_t> orbit_ids(const std::vector<fq::Subspace>& points, const std::vector<fq::Matrix>& gens,
                                   const fq::Field& f) {
  const PointIndex index(points);
  UnionFind uf(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (const auto& g : gens) uf.unite(i, index.at(points[i].act(g, f)));
  std::vector<std::size_t> ids(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) ids[i] = uf.find(i);
  return ids;
}

bool closure_order_check(GroupKind kind, const fq::Field& f) {
  const auto points = enumerate_flag(kind, f);
  const auto ids = orbit_ids(points, fq::generators(kind, fq::Subgroup::Parabolic, f), f);
  std::map<std::size_t, int> orbit_tau;
  std::map<int, std::size_t> tau_orbit;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int t = tau_of_point(points[i], f);
    auto [it, fresh] = orbit_tau.emplace(ids[i], t);
    if (!fresh && it->second != t) return false;
    auto [jt, fresh2] = tau_orbit.emplace(t, ids[i]);
    if (!fresh2 && jt->second != ids[i]) return false;
  }
  return static_cast<int>(tau_orbit.size()) == kind.n + 1;
}

CheckReport cover_lemma_check(GroupKind kind, const fq::Field& f) {
  const int n = kind.n;
  const auto group = fq::enumerate_group(kind, f, kGroupLimit);
  const auto points = enumerate_flag(kind, f);
  const PointIndex index(points);
  const auto b_ids = orbit_ids(points, fq::generators(kind, fq::Subgroup::Borel, f), f);
  const auto bbar_ids = orbit_ids(points, fq::generators(kind, fq::Subgroup::OppositeBorel, f), f);
  const fq::Subspace U0 = fq::coordinate_subspace(2 * n, lower_coords(n), f);
  const auto& W = weyl::elements(kind);
  const weyl::WeylElement w0 = weyl::longest_element(kind);

  struct WeylData {
    fq::Matrix w_inv;
    fq::Matrix ww0_inv;
    std::size_t b_orbit;
    std::size_t bbar_orbit;
  };
  std::vector<WeylData> wd;
  for (const auto& w : W) {
    const std::size_t p = index.at(U0.act(fq::weyl_matrix(w, f), f));
    wd.push_back({inverse_of_weyl(w, f), inverse_of_weyl(w * w0, f), b_ids[p], bbar_ids[p]});
  }

  CheckReport rep;
  auto fail = [&](const std::string& msg) {
    if (rep.ok) rep.failure = msg;
    rep.ok = false;
  };
  for (std::size_t gi = 0; gi < group.size(); ++gi) {
    const auto& g = group[gi];
    const std::size_t p = index.at(column_span(g, n, f));
    bool covered = false, in_some_b = false;
    for (std::size_t k = 0; k < W.size(); ++k) {
      const bool big_cell = top_left_invertible(wd[k].w_inv.mul(g, f), n, f);
      covered = covered || big_cell;
      if (bbar_ids[p] == wd[k].bbar_orbit) {
        ++rep.checked;
        if (!big_cell) fail("B̄wP ⊄ wP̄P at w=" + W[k].cycles() + ", g#" + std::to_string(gi));
      }
      if (b_ids[p] == wd[k].b_orbit) {
        in_some_b = true;
        ++rep.checked;
        const fq::Subspace moved = column_span(wd[k].ww0_inv.mul(g, f), n, f);
        if (!big_cell || moved.intersection_dim(U0, f) != 0)
          fail("BwP ⊄ ww0Pw0P at w=" + W[k].cycles() + ", g#" + std::to_string(gi));
      }
    }
    if (!covered) fail("g#" + std::to_string(gi) + " lies in no translate wP̄P");
    if (!in_some_b) fail("g#" + std::to_string(gi) + " lies in no BwP");
  }
  return rep;
}

std::vector<weyl::SubsetJ> admissible_subsets(const std::vector<fq::Subspace>& orbit, GroupKind kind,
                                              const fq::Field& f) {
  std::vector<weyl::SubsetJ> out;
  for (const auto& J : weyl::all_subsets(kind)) {
    const bool avoids = std::all_of(orbit.begin(), orbit.end(), [&](const fq::Subspace& U) {
      return U.intersection_dim_coordinate(J.members(), f) == 0;
    });
    if (avoids) out.push_back(J);
  }
  return out;
}

CheckReport finding_J_check(GroupKind kind, const fq::Field& f) {
  const auto points = enumerate_flag(kind, f);
  const auto ids = orbit_ids(points, fq::generators(kind, fq::Subgroup::Borel, f), f);
  std::map<std::size_t, std::vector<fq::Subspace>> orbits;
  for (std::size_t i = 0; i < points.size(); ++i) orbits[ids[i]].push_back(points[i]);
  const weyl::WeylElement w0 = weyl::longest_element(kind);

  CheckReport rep;
  for (const auto& [id, orbit] : orbits) {
    const int t = tau_of_point(orbit.front(), f);
    const weyl::WeylElement target = weyl::canonical_rep(weyl::sigma(kind, t) * w0);
    bool found = false;
    for (const auto& J : admissible_subsets(orbit, kind, f))
      if (weyl::delta(weyl::w_J(J)) == target) {
        found = true;
        break;
      }
    rep.checked += orbit.size();
    if (!found && rep.ok) {
      rep.ok = false;
      rep.failure = "no J for the B-orbit of point #" + std::to_string(id) + " (tau=" + std::to_string(t) + ")";
    }
  }
  return rep;
}

std::map<std::vector<int>, int> plucker(const fq::Subspace& U, const fq::Field& f) {
  const fq::Matrix& b = U.basis();
  const int n = b.rows();
  std::map<std::vector<int>, int> out;
  int scale = 0;
  for (const auto& cols : combinations(b.cols(), n)) {
    fq::Matrix minor(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) minor.set(r, c, b.at(r, cols[c]));
    const int d = fq::det(minor, f);
    if (scale == 0 && d != 0) scale = f.inv(d);
    out[cols] = d;
  }
  for (auto& [cols, v] : out) v = f.mul(v, scale);
  return out;
}

}  // namespace bruhat::flagfq
