#include "bruhat/satake.hpp"

#include <algorithm>
#include <stdexcept>

namespace bruhat::satake {

Symmetry symmetric_group(int start, int len) { return {laurent::SymBlock{start, len, false}}; }
Symmetry hyperoctahedral_group(int start, int len) { return {laurent::SymBlock{start, len, true}}; }

namespace {

VarList concat(VarList a, const VarList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Symmetry levi_symmetry(int n) {
  return {laurent::SymBlock{0, n, false}, laurent::SymBlock{n, n, false}};
}

SymLaurentPoly one(const VarList& ring) { return SymLaurentPoly::constant(ring, 1); }

int half_rank_of(const SymLaurentPoly& p, int per_n) {
  const int size = static_cast<int>(p.vars().size());
  if (size == 0 || size % per_n != 0) throw std::invalid_argument("unexpected variable count");
  return size / per_n;
}

}  // namespace

VarList unitary_g_ring(int n) { return laurent::indexed_vars("Y", 2 * n); }
VarList real_g_ring(int n) { return laurent::indexed_vars("X", n); }
VarList unitary_m_ring(int n) {
  return concat(concat(laurent::indexed_vars("W", n), laurent::indexed_vars("Z", n)), {"c_w", "c_wc"});
}
VarList real_m_ring(int n) { return concat(laurent::indexed_vars("W", n), {"c_w"}); }

int index_of(const VarList& ring, const std::string& name) {
  auto it = std::find(ring.begin(), ring.end(), name);
  if (it == ring.end()) throw std::invalid_argument("no variable named " + name);
  return static_cast<int>(it - ring.begin());
}

std::vector<SymLaurentPoly> variables(const VarList& ring, int start, int count) {
  std::vector<SymLaurentPoly> out;
  for (int i = start; i < start + count; ++i) out.push_back(SymLaurentPoly::variable(ring, i));
  return out;
}

SymLaurentPoly elementary_symmetric(int i, const VarList& ring, const std::vector<SymLaurentPoly>& elems) {
  const int m = static_cast<int>(elems.size());
  if (i < 0 || i > m) throw std::invalid_argument("elementary symmetric degree out of range");
  // e[k] after processing a prefix of elems
  std::vector<SymLaurentPoly> e(i + 1, SymLaurentPoly(ring));
  e[0] = one(ring);
  for (const auto& x : elems)
    for (int k = i; k >= 1; --k) e[k] += x * e[k - 1];
  return e[i];
}

SymLaurentPoly t_M(int i, int n, const VarList& ring, int start) {
  return elementary_symmetric(i, ring, variables(ring, start, n)).times_v(i * (n - i));
}

SymLaurentPoly t_G_unitary(int i, int n) {
  const VarList ring = unitary_g_ring(n);
  return elementary_symmetric(i, ring, variables(ring, 0, 2 * n))
      .times_v(i * (2 * n - i))
      .with_symmetry(symmetric_group(0, 2 * n));
}

SymLaurentPoly t_G_real(int i, int n) {
  const VarList ring = real_g_ring(n);
  std::vector<SymLaurentPoly> multiset;
  for (int k = 0; k < n; ++k) {
    multiset.push_back(SymLaurentPoly::variable(ring, k, 1));
    multiset.push_back(SymLaurentPoly::variable(ring, k, -1));
  }
  multiset.push_back(one(ring));
  return elementary_symmetric(i, ring, multiset)
      .times_v(i * (2 * n + 1 - i))
      .with_symmetry(hyperoctahedral_group(0, n));
}

SymLaurentPoly satake_unitary(const SymLaurentPoly& p) {
  const int n = half_rank_of(p, 2);
  if (p.vars() != unitary_g_ring(n)) throw std::invalid_argument("satake_unitary expects Y_1..Y_2n");
  if (!p.is_invariant(symmetric_group(0, 2 * n))) throw std::invalid_argument("input is not S_2n-symmetric");
  const VarList target = unitary_m_ring(n);
  std::vector<SymLaurentPoly> images;
  for (int i = 0; i < n; ++i) images.push_back(SymLaurentPoly::variable(target, i).times_v(-n));
  for (int j = 0; j < n; ++j) images.push_back(SymLaurentPoly::variable(target, n + j, -1).times_v(n));
  return p.substitute(images).with_symmetry(levi_symmetry(n));
}

SymLaurentPoly satake_real(const SymLaurentPoly& p) {
  const int n = half_rank_of(p, 1);
  if (p.vars() != real_g_ring(n)) throw std::invalid_argument("satake_real expects X_1..X_n");
  if (!p.is_invariant(hyperoctahedral_group(0, n)))
    throw std::invalid_argument("input is not invariant under S_n ⋉ (Z/2)^n");
  const VarList target = real_m_ring(n);
  std::vector<SymLaurentPoly> images;
  for (int i = 0; i < n; ++i) images.push_back(SymLaurentPoly::variable(target, i).times_v(-(n + 1)));
  return p.substitute(images).with_symmetry(symmetric_group(0, n));
}

bool CharPoly::is_monic() const {
  return !coeffs.empty() && coeffs.back() == one(coeffs.back().vars());
}

std::string CharPoly::str() const {
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    if (coeffs[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs[k].str() + ")";
    if (k > 0) s += "*X^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

CharPoly CharPoly::operator*(const CharPoly& o) const {
  if (coeffs.empty() || o.coeffs.empty()) throw std::invalid_argument("empty polynomial");
  const VarList& ring = coeffs.front().vars();
  CharPoly r{std::vector<SymLaurentPoly>(coeffs.size() + o.coeffs.size() - 1, SymLaurentPoly(ring))};
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs.size(); ++j) r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  return r;
}

CharPoly linear(const SymLaurentPoly& a) { return CharPoly{{-a, one(a.vars())}}; }

CharPoly scale(const CharPoly& p, const SymLaurentPoly& u) {
  CharPoly r = p;
  for (auto& c : r.coeffs) c = c * u;
  return r;
}

CharPoly scale_argument(const CharPoly& p, const SymLaurentPoly& a) {
  CharPoly r = p;
  for (int k = 0; k <= r.degree(); ++k) r.coeffs[k] = r.coeffs[k] * a.pow(k);
  return r;
}

CharPoly twist(const CharPoly& p, const SymLaurentPoly& c) {
  return scale(scale_argument(p, c.inverse_unit()), c.pow(p.degree()));
}

CharPoly char_poly_M(int n, const VarList& ring, int start, std::optional<int> twist_var) {
  CharPoly p{std::vector<SymLaurentPoly>(n + 1, SymLaurentPoly(ring))};
  for (int i = 0; i <= n; ++i) {
    SymLaurentPoly c = t_M(i, n, ring, start).times_v(i * (i - 1));
    p.coeffs[n - i] = i % 2 == 0 ? c : -c;
  }
  if (twist_var) return twist(p, SymLaurentPoly::variable(ring, *twist_var));
  return p;
}

CharPoly dual_char_poly(const CharPoly& p) {
  if (!p.is_monic()) throw std::invalid_argument("dual_char_poly expects a monic polynomial");
  const SymLaurentPoly inv = p.coeffs.front().inverse_unit();
  CharPoly r = p;
  std::reverse(r.coeffs.begin(), r.coeffs.end());
  return scale(r, inv);
}

CharPoly char_poly_G(GroupKind kind) {
  const int n = kind.n;
  const int deg = kind.is_symplectic() ? 2 * n + 1 : 2 * n;
  const VarList ring = kind.is_symplectic() ? real_g_ring(n) : unitary_g_ring(n);
  CharPoly p{std::vector<SymLaurentPoly>(deg + 1, SymLaurentPoly(ring))};
  for (int i = 0; i <= deg; ++i) {
    SymLaurentPoly t = kind.is_symplectic() ? t_G_real(i, n) : t_G_unitary(i, n);
    t = t.times_v(i * (i - 1));
    p.coeffs[deg - i] = i % 2 == 0 ? t : -t;
  }
  return p;
}

namespace {

std::string first_coefficient_difference(const CharPoly& a, const CharPoly& b) {
  if (a.degree() != b.degree())
    return "degrees " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree());
  for (int k = a.degree(); k >= 0; --k) {
    const std::string d = laurent::first_difference(a.coeffs[k], b.coeffs[k]);
    if (!d.empty()) return "X^" + std::to_string(k) + ": " + d;
  }
  return "";
}

}  // namespace

Verification verify_determinant_factorization(GroupKind kind, bool with_twist) {
  const int n = kind.n;
  const bool real = kind.is_symplectic();
  if ((real && n > 2) || (!real && n > 3))
    throw std::invalid_argument("factorization check supports n <= 3 (unitary) and n <= 2 (real)");

  const VarList ring = real ? real_m_ring(n) : unitary_m_ring(n);
  const SymLaurentPoly c_w = with_twist ? SymLaurentPoly::variable(ring, index_of(ring, "c_w")) : one(ring);
  const SymLaurentPoly c_wc =
      real ? c_w : (with_twist ? SymLaurentPoly::variable(ring, index_of(ring, "c_wc")) : one(ring));

  // G-side: Satake image of the degree-2n (2n+1) polynomial, then the central twist.
  CharPoly g_side = char_poly_G(kind);
  std::vector<SymLaurentPoly> twist_images;
  for (int i = 0; i < static_cast<int>(ring.size()); ++i) twist_images.push_back(SymLaurentPoly::variable(ring, i));
  for (int i = 0; i < n; ++i) twist_images[i] = twist_images[i] * c_w;
  if (!real)
    for (int j = 0; j < n; ++j) twist_images[n + j] = twist_images[n + j] * c_wc;
  for (auto& c : g_side.coeffs) c = (real ? satake_real(c) : satake_unitary(c)).substitute(twist_images);

  // M-side product.
  const CharPoly p_w = char_poly_M(n, ring, 0);
  const CharPoly first = twist(p_w, c_w);
  CharPoly m_side;
  if (!real) {
    const CharPoly dual = dual_char_poly(char_poly_M(n, ring, n));
    const SymLaurentPoly arg = c_wc.times_v(2 * (1 - 2 * n));
    const SymLaurentPoly unit = c_wc.pow(-n).times_v(2 * n * (2 * n - 1));
    m_side = first * scale(scale_argument(dual, arg), unit);
  } else {
    const CharPoly dual = dual_char_poly(p_w);
    const SymLaurentPoly arg = c_w.times_v(-4 * n);
    const SymLaurentPoly unit = c_w.pow(-n).times_v(4 * n * n);
    m_side = first * scale(scale_argument(dual, arg), unit) * linear(one(ring).times_v(2 * n));
  }

  Verification v;
  v.first_difference = first_coefficient_difference(g_side, m_side);
  v.verdict = v.first_difference.empty();
  v.g_side = std::move(g_side);
  v.m_side = std::move(m_side);
  return v;
}

}  // namespace bruhat::satake
