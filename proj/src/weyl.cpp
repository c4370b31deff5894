#include "bruhat/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace bruhat {

GroupKind::GroupKind(Family f, int half_rank) : family(f), n(half_rank) {
  if (half_rank < 1 || half_rank > 8)
    throw std::invalid_argument("half-rank n must lie in [1, 8]");
}

std::string GroupKind::name() const { return is_symplectic() ? "C" : "A"; }

GroupKind parse_kind(const std::string& letter, int n) {
  if (letter == "A" || letter == "a") return GroupKind(Family::TypeA_GL2n, n);
  if (letter == "C" || letter == "c") return GroupKind(Family::TypeC_Sp2n, n);
  throw std::invalid_argument("kind must be A or C, got '" + letter + "'");
}

namespace weyl {

WeylElement::WeylElement(GroupKind kind) : kind_(kind), perm_(kind.degree()) {
  for (int i = 0; i < kind.degree(); ++i) perm_[i] = i;
}

WeylElement::WeylElement(GroupKind kind, std::vector<int> perm)
    : kind_(kind), perm_(std::move(perm)) {
  const int m = kind_.degree();
  if (static_cast<int>(perm_.size()) != m)
    throw std::invalid_argument("permutation has wrong degree");
  std::vector<bool> seen(m, false);
  for (int x : perm_) {
    if (x < 0 || x >= m || seen[x]) throw std::invalid_argument("not a bijection");
    seen[x] = true;
  }
  if (kind_.is_symplectic()) {
    for (int i = 0; i < m; ++i)
      if (perm_[iota(i, kind_.n)] != iota(perm_[i], kind_.n))
        throw std::invalid_argument("permutation does not commute with i <-> i+n");
  }
}

WeylElement WeylElement::from_transpositions(GroupKind kind,
                                             const std::vector<std::pair<int, int>>& swaps) {
  std::vector<int> p(kind.degree());
  for (int i = 0; i < kind.degree(); ++i) p[i] = i;
  // rightmost factor acts first
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
    const int a = it->first - 1, b = it->second - 1;
    for (int& x : p) {
      if (x == a)
        x = b;
      else if (x == b)
        x = a;
    }
  }
  return WeylElement(kind, std::move(p));
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  if (!(kind_ == rhs.kind_)) throw std::invalid_argument("kind mismatch in product");
  std::vector<int> p(perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = perm_[rhs.perm_[i]];
  WeylElement out(kind_);
  out.perm_ = std::move(p);
  return out;
}

WeylElement WeylElement::inverse() const {
  WeylElement out(kind_);
  for (std::size_t i = 0; i < perm_.size(); ++i) out.perm_[perm_[i]] = static_cast<int>(i);
  return out;
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != static_cast<int>(i)) return false;
  return true;
}

std::uint64_t WeylElement::key() const {
  std::uint64_t k = 0;
  for (int x : perm_) k = (k << 4) | static_cast<std::uint64_t>(x);
  return k;
}

std::string WeylElement::cycles() const {
  std::ostringstream os;
  std::vector<bool> done(perm_.size(), false);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (done[i] || perm_[i] == static_cast<int>(i)) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) os << ',';
      os << j + 1;
      first = false;
      j = static_cast<std::size_t>(perm_[j]);
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

SubsetJ::SubsetJ(GroupKind kind, std::vector<int> members) : kind_(kind), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  const int n = kind_.n;
  if (static_cast<int>(members_.size()) != n) throw std::invalid_argument("|J| must equal n");
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("J has repeated elements");
  for (int x : members_)
    if (x < 0 || x >= 2 * n) throw std::invalid_argument("J element out of range");
  if (kind_.is_symplectic()) {
    // J2 must be exactly {n+i : i not in J1}
    for (int i = 0; i < n; ++i)
      if (contains(i) == contains(i + n))
        throw std::invalid_argument("J is not of the form J1 ⊔ {j : j-n ∉ J1}");
  }
}

bool SubsetJ::contains(int i) const { return std::binary_search(members_.begin(), members_.end(), i); }

int SubsetJ::lower_count() const {
  return static_cast<int>(std::count_if(members_.begin(), members_.end(), [&](int x) { return x < kind_.n; }));
}

std::string SubsetJ::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) os << (i ? "," : "") << members_[i] + 1;
  os << '}';
  return os.str();
}

std::vector<WeylElement> simple_reflections(GroupKind kind) {
  const int n = kind.n;
  std::vector<WeylElement> out;
  if (!kind.is_symplectic()) {
    for (int i = 1; i < 2 * n; ++i) out.push_back(WeylElement::from_transpositions(kind, {{i, i + 1}}));
  } else {
    for (int i = 1; i < n; ++i)
      out.push_back(WeylElement::from_transpositions(kind, {{i, i + 1}, {n + i, n + i + 1}}));
    out.push_back(WeylElement::from_transpositions(kind, {{n, 2 * n}}));
  }
  return out;
}

std::vector<WeylElement> siegel_reflections(GroupKind kind) {
  auto all = simple_reflections(kind);
  // s_n is index n-1 in both realizations
  all.erase(all.begin() + (kind.n - 1));
  return all;
}

namespace {

struct CayleyTable {
  std::vector<WeylElement> elems;
  std::unordered_map<std::uint64_t, int> dist;
};

std::shared_mutex table_mutex;
std::map<std::pair<int, int>, CayleyTable> tables;  // node-based: references stay valid

CayleyTable build_table(GroupKind kind) {
  if (kind.is_symplectic() ? kind.n > 6 : kind.n > 4)
    throw std::length_error("Weyl group too large for exhaustive enumeration");
  CayleyTable t;
  const auto gens = simple_reflections(kind);
  WeylElement id(kind);
  t.elems.push_back(id);
  t.dist.emplace(id.key(), 0);
  for (std::size_t head = 0; head < t.elems.size(); ++head) {
    const WeylElement cur = t.elems[head];
    const int d = t.dist.at(cur.key());
    for (const auto& s : gens) {
      WeylElement nxt = cur * s;
      if (t.dist.emplace(nxt.key(), d + 1).second) t.elems.push_back(std::move(nxt));
    }
  }
  return t;
}

const CayleyTable& table(GroupKind kind) {
  const std::pair<int, int> key{static_cast<int>(kind.family), kind.n};
  {
    std::shared_lock lock(table_mutex);
    auto it = tables.find(key);
    if (it != tables.end()) return it->second;
  }
  CayleyTable built = build_table(kind);
  std::unique_lock lock(table_mutex);
  auto [it, inserted] = tables.emplace(key, std::move(built));
  return it->second;
}

}  // namespace

const std::vector<WeylElement>& elements(GroupKind kind) { return table(kind).elems; }

std::vector<WeylElement> siegel_subgroup(GroupKind kind) {
  std::vector<WeylElement> out;
  for (const auto& w : elements(kind))
    if (in_siegel_subgroup(w)) out.push_back(w);
  return out;
}

int inversion_count(const WeylElement& w) {
  int inv = 0;
  const auto& p = w.perm();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

int length(const WeylElement& w) {
  if (!w.kind().is_symplectic()) return inversion_count(w);
  return table(w.kind()).dist.at(w.key());
}

WeylElement longest_element(GroupKind kind) {
  if (!kind.is_symplectic()) {
    std::vector<int> p(kind.degree());
    for (int i = 0; i < kind.degree(); ++i) p[i] = kind.degree() - 1 - i;
    return WeylElement(kind, std::move(p));
  }
  const auto& t = table(kind);
  // BFS order is by nondecreasing distance, so the last element is maximal;
  // uniqueness is checked rather than assumed.
  const WeylElement& last = t.elems.back();
  const int top = t.dist.at(last.key());
  int count = 0;
  for (const auto& [k, d] : t.dist)
    if (d == top) ++count;
  if (count != 1) throw std::logic_error("longest element is not unique");
  return last;
}

bool in_siegel_subgroup(const WeylElement& w) {
  const int n = w.kind().n;
  for (int i = 0; i < n; ++i)
    if (w(i) >= n) return false;
  return true;
}

int tau(const WeylElement& w) {
  const int n = w.kind().n;
  int stay = 0;
  for (int i = 0; i < n; ++i)
    if (w(i) < n) ++stay;
  return n - stay;
}

WeylElement sigma(GroupKind kind, int k) {
  if (k < 0 || k > kind.n) throw std::invalid_argument("sigma index out of range");
  std::vector<std::pair<int, int>> swaps;
  for (int i = 1; i <= k; ++i) swaps.emplace_back(i, kind.n + i);
  return WeylElement::from_transpositions(kind, swaps);
}

std::vector<WeylElement> double_cosets(GroupKind kind) {
  std::vector<WeylElement> out;
  for (int k = 0; k <= kind.n; ++k) out.push_back(sigma(kind, k));
  return out;
}

WeylElement canonical_rep(const WeylElement& w) { return sigma(w.kind(), tau(w)); }

WeylElement delta(const WeylElement& w) { return canonical_rep(w); }

std::vector<std::vector<WeylElement>> enumerate_double_coset_orbits(GroupKind kind) {
  const auto& all = elements(kind);
  const auto gens = siegel_reflections(kind);
  std::unordered_map<std::uint64_t, int> orbit_of;
  std::vector<std::vector<WeylElement>> orbits;
  for (const auto& start : all) {
    if (orbit_of.count(start.key())) continue;
    const int id = static_cast<int>(orbits.size());
    orbits.emplace_back();
    auto& orbit = orbits.back();
    orbit.push_back(start);
    orbit_of.emplace(start.key(), id);
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const WeylElement cur = orbit[head];
      for (const auto& s : gens) {
        for (WeylElement nxt : {s * cur, cur * s}) {
          if (orbit_of.emplace(nxt.key(), id).second) orbit.push_back(std::move(nxt));
        }
      }
    }
  }
  return orbits;
}

WeylElement w_J(const SubsetJ& J) {
  const GroupKind kind = J.kind();
  const int n = kind.n;
  std::vector<int> lower_missing, upper_present;
  for (int i = 0; i < n; ++i)
    if (!J.contains(i)) lower_missing.push_back(i);
  for (int i = n; i < 2 * n; ++i)
    if (J.contains(i)) upper_present.push_back(i);
  std::vector<int> p(2 * n);
  for (int i = 0; i < 2 * n; ++i) p[i] = i;
  for (std::size_t k = 0; k < lower_missing.size(); ++k) {
    p[lower_missing[k]] = upper_present[k];
    p[upper_present[k]] = lower_missing[k];
  }
  return WeylElement(kind, std::move(p));
}

std::vector<SubsetJ> all_subsets(GroupKind kind) {
  const int n = kind.n;
  std::vector<SubsetJ> out;
  if (kind.is_symplectic()) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> m;
      for (int i = 0; i < n; ++i) m.push_back((mask >> i) & 1 ? i : i + n);
      out.emplace_back(kind, std::move(m));
    }
  } else {
    for (int mask = 0; mask < (1 << (2 * n)); ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != n) continue;
      std::vector<int> m;
      for (int i = 0; i < 2 * n; ++i)
        if ((mask >> i) & 1) m.push_back(i);
      out.emplace_back(kind, std::move(m));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubsetJ coset_subset(const WeylElement& w) {
  std::vector<int> m;
  for (int i = 0; i < w.kind().n; ++i) m.push_back(w(i));
  return SubsetJ(w.kind(), std::move(m));
}

}  // namespace weyl
}  // namespace bruhat
