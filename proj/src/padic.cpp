#include "bruhat/padic.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace bruhat::padic {

long ExtInt::value() const {
  if (!finite()) throw std::domain_error("value of an infinite ExtInt");
  return value_;
}

std::string ExtInt::str() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    default: return std::to_string(value_);
  }
}

ExtInt ExtInt::operator+(long k) const {
  if (!finite()) return *this;
  return ExtInt(value_ + k);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

long remove_factor(mpz_class& z, int p) {
  if (z == 0) return 0;
  const mpz_class pz(p);
  return static_cast<long>(mpz_remove(z.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t()));
}

void require_prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

mpz_class zpow(int p, unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), k);
  return r;
}

mpq_class qpow(int p, long k) {
  if (k >= 0) return mpq_class(zpow(p, static_cast<unsigned long>(k)));
  mpq_class r(mpz_class(1), zpow(p, static_cast<unsigned long>(-k)));
  return r;
}

}  // namespace

ExtInt valuation(const mpq_class& x, int p) {
  if (x == 0) return ExtInt::pos_inf();
  mpz_class num = x.get_num(), den = x.get_den();
  return ExtInt(remove_factor(num, p) - remove_factor(den, p));
}

mpq_class parse_rational(const std::string& s, int p) {
  static const std::regex re(R"(^\s*([+-]?\d+)(?:\s*/\s*(\d+|p)(?:\^(\d+))?)?\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("malformed rational \"" + s + "\"");
  mpz_class num(m[1].str());
  mpz_class den(1);
  if (m[2].matched) {
    const mpz_class base = m[2].str() == "p" ? mpz_class(p) : mpz_class(m[2].str());
    const unsigned long e = m[3].matched ? std::stoul(m[3].str()) : 1;
    if (e > 64) throw std::invalid_argument("exponent too large in \"" + s + "\"");
    mpz_pow_ui(den.get_mpz_t(), base.get_mpz_t(), e);
  }
  if (den == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const mpq_class& x, int p) {
  if (x.get_den() == 1) return x.get_num().get_str();
  mpz_class den = x.get_den();
  const long k = remove_factor(den, p);
  if (den == 1) {
    std::string s = x.get_num().get_str() + "/" + std::to_string(p);
    if (k > 1) s += "^" + std::to_string(k);
    return s;
  }
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

QMatrix QMatrix::identity(int m) {
  QMatrix id(m, m);
  for (int i = 0; i < m; ++i) id.at(i, i) = 1;
  return id;
}

QMatrix QMatrix::diagonal(const std::vector<mpq_class>& d) {
  QMatrix out(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) out.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return out;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
  QMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
    }
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch in sum");
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const { return *this + o.scaled(-1); }

QMatrix QMatrix::scaled(const mpq_class& s) const {
  QMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

QMatrix QMatrix::block(int r0, int c0, int nr, int nc) const {
  QMatrix out(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) out.at(i, j) = at(r0 + i, c0 + j);
  return out;
}

void QMatrix::set_block(int r0, int c0, const QMatrix& b) {
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

mpq_class QMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  QMatrix m = *this;
  mpq_class d = 1;
  for (int col = 0; col < rows_; ++col) {
    int piv = col;
    while (piv < rows_ && m.at(piv, col) == 0) ++piv;
    if (piv == rows_) return 0;
    if (piv != col) {
      for (int c = 0; c < cols_; ++c) std::swap(m.at(piv, c), m.at(col, c));
      d = -d;
    }
    d *= m.at(col, col);
    for (int r = col + 1; r < rows_; ++r) {
      if (m.at(r, col) == 0) continue;
      const mpq_class f = m.at(r, col) / m.at(col, col);
      for (int c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return d;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  const int size = rows_;
  QMatrix m = *this, inv = identity(size);
  for (int col = 0; col < size; ++col) {
    int piv = col;
    while (piv < size && m.at(piv, col) == 0) ++piv;
    if (piv == size) throw std::domain_error("matrix is singular");
    for (int c = 0; c < size; ++c) {
      std::swap(m.at(piv, c), m.at(col, c));
      std::swap(inv.at(piv, c), inv.at(col, c));
    }
    const mpq_class s = 1 / m.at(col, col);
    for (int c = 0; c < size; ++c) {
      m.at(col, c) *= s;
      inv.at(col, c) *= s;
    }
    for (int r = 0; r < size; ++r) {
      if (r == col || m.at(r, col) == 0) continue;
      const mpq_class f = m.at(r, col);
      for (int c = 0; c < size; ++c) {
        m.at(r, c) -= f * m.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

ExtInt min_valuation(const QMatrix& m, int p) {
  ExtInt best = ExtInt::pos_inf();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) best = std::min(best, valuation(m.at(i, j), p));
  return best;
}

QMatrix symplectic_form(int n) {
  QMatrix J(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    J.at(i, n + i) = 1;
    J.at(n + i, i) = -1;
  }
  return J;
}

bool is_symplectic(const QMatrix& g) {
  if (g.rows() != g.cols() || g.rows() % 2 != 0) return false;
  const int n = g.rows() / 2;
  mpq_class acc, t;
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i; j < 2 * n; ++j) {
      // (g^T J g)_{ij} = sum_k g_{k,i} g_{n+k,j} - g_{n+k,i} g_{k,j}
      acc = 0;
      for (int k = 0; k < n; ++k) {
        t = g.at(k, i) * g.at(n + k, j);
        acc += t;
        t = g.at(n + k, i) * g.at(k, j);
        acc -= t;
      }
      const int want = (j == i + n) ? 1 : 0;
      if (acc != want) return false;
    }
  return true;
}

BlockMatrix::BlockMatrix(GroupKind kind, int p, QMatrix g) : kind_(kind), p_(p), g_(std::move(g)) {
  require_prime(p);
  if (g_.rows() != kind.degree() || g_.cols() != kind.degree())
    throw std::invalid_argument("matrix must be " + std::to_string(kind.degree()) + "x" +
                                std::to_string(kind.degree()));
  if (!g_.invertible()) throw std::invalid_argument("matrix is not invertible");
  if (kind.is_symplectic() && !is_symplectic(g_)) throw std::invalid_argument("matrix is not symplectic");
}

BlockMatrix BlockMatrix::operator*(const BlockMatrix& o) const {
  if (!(kind_ == o.kind_) || p_ != o.p_) throw std::invalid_argument("mismatched block matrices");
  return BlockMatrix(kind_, p_, g_ * o.g_, Trusted{});
}

BlockMatrix BlockMatrix::inverse() const { return BlockMatrix(kind_, p_, g_.inverse(), Trusted{}); }

BlockMatrix identity(GroupKind kind, int p) { return BlockMatrix(kind, p, QMatrix::identity(kind.degree())); }

BlockMatrix gamma(GroupKind kind, int p, int k) {
  const int n = kind.n;
  std::vector<mpq_class> d(2 * n);
  for (int i = 0; i < n; ++i) {
    d[i] = qpow(p, k);
    d[n + i] = kind.is_symplectic() ? qpow(p, -k) : mpq_class(1);
  }
  return BlockMatrix(kind, p, QMatrix::diagonal(d));
}

ExtInt h_invariant(const BlockMatrix& g) {
  const QMatrix D = g.D();
  if (!D.invertible()) return ExtInt::neg_inf();
  return min_valuation(D.inverse() * g.C(), g.p());
}

namespace {

// x ≡ target mod p^m for p-integral x.
bool congruent(const QMatrix& x, const QMatrix& target, int p, int m) {
  return min_valuation(x - target, p) >= ExtInt(m);
}

}  // namespace

bool in_level(const BlockMatrix& g, Level level, int m) {
  if (m < 1) throw std::invalid_argument("level exponent m must be >= 1");
  if (!g.integral()) throw std::invalid_argument("level predicates need a p-integral matrix");
  const int n = g.n(), p = g.p();
  const QMatrix I = QMatrix::identity(n), Z(n, n);
  if (!congruent(g.C(), Z, p, m)) return false;
  if (level == Level::Gamma0) return true;
  if (!congruent(g.A(), I, p, m) || !congruent(g.D(), I, p, m)) return false;
  if (level == Level::Gamma1) return true;
  return congruent(g.B(), Z, p, m);
}

bool in_P_Gamma1(const BlockMatrix& g, int m) { return h_invariant(g) >= ExtInt(m); }

Factorization factor_P_Gamma1(const BlockMatrix& g, int m) {
  const ExtInt h = h_invariant(g);
  if (h < ExtInt(m)) throw std::invalid_argument("h(g) = " + h.str() + " < m = " + std::to_string(m));
  const int n = g.n();
  const QMatrix Dinv_C = g.D().inverse() * g.C();
  QMatrix upper(2 * n, 2 * n), lower = QMatrix::identity(2 * n);
  upper.set_block(0, 0, g.A() - g.B() * Dinv_C);
  upper.set_block(0, n, g.B());
  upper.set_block(n, n, g.D());
  lower.set_block(n, 0, Dinv_C);
  return Factorization{BlockMatrix(g.kind(), g.p(), std::move(upper)), BlockMatrix(g.kind(), g.p(), std::move(lower))};
}

bool is_block_upper(const BlockMatrix& g) { return g.C() == QMatrix(g.n(), g.n()); }

ExtInt anticanonical_radius(const std::map<std::vector<int>, ExtInt>& vals, int n) {
  std::vector<int> J0(n);
  std::iota(J0.begin(), J0.end(), n);
  if (std::all_of(vals.begin(), vals.end(), [](const auto& kv) { return kv.second == ExtInt::pos_inf(); }))
    throw std::invalid_argument("all Plücker coordinates vanish");
  auto it0 = vals.find(J0);
  if (it0 == vals.end() || it0->second == ExtInt::pos_inf()) return ExtInt::pos_inf();
  const long v0 = it0->second.value();
  long k = 0;
  for (const auto& [J, v] : vals) {
    if (J.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("Plücker index of the wrong size");
    if (!v.finite()) {
      if (v == ExtInt::neg_inf()) throw std::invalid_argument("valuation -inf is not allowed");
      continue;
    }
    const long c = std::count_if(J.begin(), J.end(), [n](int j) { return j < n; });
    if (c == 0) continue;
    const long gap = v0 - v.value();
    if (gap > 0) k = std::max(k, (gap + c - 1) / c);
  }
  return ExtInt(k);
}

std::map<std::vector<int>, ExtInt> plucker_valuations(const QMatrix& basis, int p) {
  const int n = basis.rows(), m = basis.cols();
  std::map<std::vector<int>, ExtInt> out;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    std::vector<int> cols;
    for (int c = 0; c < m; ++c)
      if (pick[c]) cols.push_back(c);
    QMatrix minor(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) minor.at(r, c) = basis.at(r, cols[c]);
    out.emplace(cols, valuation(minor.det(), p));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

namespace {

mpq_class small_int(std::mt19937_64& rng, long bound) {
  return mpq_class(std::uniform_int_distribution<long>(-bound, bound)(rng));
}

// Random entry a / p^e with e in [0, max_e].
mpq_class small_rational(std::mt19937_64& rng, int p, long bound, int max_e) {
  const int e = std::uniform_int_distribution<int>(0, max_e)(rng);
  return small_int(rng, bound) * qpow(p, -e);
}

template <class Entry>
QMatrix random_matrix(int n, Entry entry) {
  QMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = entry();
  return out;
}

template <class Entry>
QMatrix random_symmetric(int n, Entry entry) {
  QMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out.at(i, j) = out.at(j, i) = entry();
  return out;
}

// [[I, 0], [S, I]] · diag(A, A^{-T}) · [[I, T], [0, I]].
QMatrix symplectic_from(const QMatrix& S, const QMatrix& A, const QMatrix& T) {
  const int n = A.rows();
  const QMatrix I = QMatrix::identity(n);
  QMatrix lower = QMatrix::identity(2 * n), levi(2 * n, 2 * n), upper = QMatrix::identity(2 * n);
  lower.set_block(n, 0, S);
  levi.set_block(0, 0, A);
  levi.set_block(n, n, A.inverse().transpose());
  upper.set_block(0, n, T);
  return lower * levi * upper;
}

QMatrix from_blocks(const QMatrix& A, const QMatrix& B, const QMatrix& C, const QMatrix& D) {
  const int n = A.rows();
  QMatrix g(2 * n, 2 * n);
  g.set_block(0, 0, A);
  g.set_block(0, n, B);
  g.set_block(n, 0, C);
  g.set_block(n, n, D);
  return g;
}

}  // namespace

BlockMatrix random_gamma1(GroupKind kind, int p, int m, std::mt19937_64& rng) {
  require_prime(p);
  const int n = kind.n;
  const long bound = static_cast<long>(p) * p;
  const mpq_class pm = qpow(p, m);
  auto entry = [&]() -> mpq_class { return small_int(rng, bound); };
  auto small = [&]() -> mpq_class { return small_int(rng, bound) * pm; };
  const QMatrix I = QMatrix::identity(n);
  if (!kind.is_symplectic())
    return BlockMatrix(kind, p, from_blocks(I + random_matrix(n, small), random_matrix(n, entry),
                                             random_matrix(n, small), I + random_matrix(n, small)));
  return BlockMatrix(kind, p,
                     symplectic_from(random_symmetric(n, small), I + random_matrix(n, small), random_symmetric(n, entry)));
}

BlockMatrix random_block_upper(GroupKind kind, int p, std::mt19937_64& rng) {
  require_prime(p);
  const int n = kind.n;
  auto entry = [&]() -> mpq_class { return small_rational(rng, p, static_cast<long>(p) * p, 2); };
  while (true) {
    const QMatrix A = random_matrix(n, entry);
    if (!A.invertible()) continue;
    if (kind.is_symplectic()) return BlockMatrix(kind, p, symplectic_from(QMatrix(n, n), A, random_symmetric(n, entry)));
    const QMatrix D = random_matrix(n, entry);
    if (!D.invertible()) continue;
    return BlockMatrix(kind, p, from_blocks(A, random_matrix(n, entry), QMatrix(n, n), D));
  }
}

BlockMatrix random_element(GroupKind kind, int p, std::mt19937_64& rng) {
  require_prime(p);
  const int n = kind.n;
  auto entry = [&]() -> mpq_class { return small_rational(rng, p, static_cast<long>(p) * p, 2); };
  while (true) {
    QMatrix g(2 * n, 2 * n);
    if (kind.is_symplectic()) {
      const QMatrix A = random_matrix(n, entry);
      if (!A.invertible()) continue;
      g = symplectic_from(random_symmetric(n, entry), A, random_symmetric(n, entry));
    } else {
      g = from_blocks(random_matrix(n, entry), random_matrix(n, entry), random_matrix(n, entry),
                      random_matrix(n, entry));
    }
    if (!g.invertible() || !g.block(n, n, n, n).invertible()) continue;
    return BlockMatrix(kind, p, std::move(g));
  }
}

ContractReport contract_check(GroupKind kind, int p, int m, int k, int samples, std::uint64_t seed) {
  require_prime(p);
  if (m < 1 || k < 0 || samples < 0) throw std::invalid_argument("contract_check needs m >= 1, k >= 0");
  std::mt19937_64 rng(seed);
  const BlockMatrix gk = gamma(kind, p, k);
  const int shifted = m + (kind.is_symplectic() ? 2 * k : k);
  ContractReport rep;
  auto fail = [&](const std::string& why) {
    if (rep.ok) rep.failure = "sample " + std::to_string(rep.samples) + ": " + why;
    rep.ok = false;
  };
  auto check_factor = [&](const BlockMatrix& x, int level, const char* label) {
    const Factorization f = factor_P_Gamma1(x, level);
    if (!(f.p_part * f.gamma1_part == x)) fail(std::string(label) + " does not reassemble");
    if (!is_block_upper(f.p_part)) fail(std::string(label) + " P-part is not block upper triangular");
    if (!in_level(f.gamma1_part, Level::Gamma1, level)) fail(std::string(label) + " Γ₁-part fails its level");
    if (kind.is_symplectic() && !(is_symplectic(f.p_part.matrix()) && is_symplectic(f.gamma1_part.matrix())))
      fail(std::string(label) + " factor is not symplectic");
  };
  for (int s = 0; s < samples; ++s, ++rep.samples) {
    const BlockMatrix g = random_gamma1(kind, p, m, rng);
    if (!in_level(g, Level::Gamma1, m)) fail("sampler left Γ₁(p^m)");
    if (h_invariant(g) < ExtInt(m)) fail("h(g) < m");
    check_factor(g, m, "g");
    const BlockMatrix x = g * gk;
    if (h_invariant(x) < ExtInt(shifted)) fail("h(g γ^k) = " + h_invariant(x).str() + " < " + std::to_string(shifted));
    else check_factor(x, shifted, "g γ^k");
  }
  return rep;
}

}  // namespace bruhat::padic
