#include "bruhat/ordcoh.hpp"

#include <bit>
#include <stdexcept>

namespace bruhat::ordcoh {

Lambda::Lambda(int p, int r) : p_(p), r_(r), mod_(1) {
  bool prime = p >= 2;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  for (int i = 0; i < r; ++i) {
    mod_ *= p;
    if (mod_ >= (std::int64_t{1} << 31)) throw std::invalid_argument("p^r must be below 2^31");
  }
}

std::int64_t Lambda::reduce(std::int64_t x) const {
  x %= mod_;
  return x < 0 ? x + mod_ : x;
}

std::int64_t Lambda::pow_p(int e) const {
  std::int64_t v = 1;
  for (int i = 0; i < e && v != 0; ++i) v = reduce(v * p_);
  return v;
}

std::string Lambda::str() const { return "Z/" + std::to_string(mod_); }

LMatrix::LMatrix(Lambda lam, int rows, int cols)
    : lam_(lam), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}

LMatrix LMatrix::identity(Lambda lam, int m) {
  LMatrix id(lam, m, m);
  for (int i = 0; i < m; ++i) id.set(i, i, 1);
  return id;
}

LMatrix LMatrix::diagonal(Lambda lam, const std::vector<std::int64_t>& d) {
  const int m = static_cast<int>(d.size());
  LMatrix out(lam, m, m);
  for (int i = 0; i < m; ++i) out.set(i, i, d[i]);
  return out;
}

LMatrix LMatrix::operator*(const LMatrix& o) const {
  if (!(lam_ == o.lam_) || cols_ != o.rows_) throw std::invalid_argument("incompatible Λ-matrices");
  LMatrix out(lam_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < cols_; ++k) s = lam_.reduce(s + at(i, k) * o.at(k, j));
      out.data_[i * o.cols_ + j] = s;
    }
  return out;
}

LMatrix LMatrix::operator+(const LMatrix& o) const {
  if (!(lam_ == o.lam_) || rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("incompatible Λ-matrices");
  LMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = lam_.reduce(data_[i] + o.data_[i]);
  return out;
}

LMatrix LMatrix::operator-(const LMatrix& o) const {
  if (!(lam_ == o.lam_) || rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("incompatible Λ-matrices");
  LMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = lam_.reduce(data_[i] - o.data_[i]);
  return out;
}

LMatrix LMatrix::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("power of a non-square matrix");
  LMatrix result = identity(lam_, rows_), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool LMatrix::is_zero() const {
  for (auto x : data_)
    if (x != 0) return false;
  return true;
}

int LMatrix::rank_mod_p() const {
  const int p = lam_.p();
  std::vector<std::vector<int>> m(rows_, std::vector<int>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m[i][j] = static_cast<int>(at(i, j) % p);
  auto inv = [p](int a) {
    for (int b = 1; b < p; ++b)
      if (a * b % p == 1) return b;
    throw std::logic_error("no inverse mod p");
  };
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int piv = rank;
    while (piv < rows_ && m[piv][col] == 0) ++piv;
    if (piv == rows_) continue;
    std::swap(m[piv], m[rank]);
    const int s = inv(m[rank][col]);
    for (int c = 0; c < cols_; ++c) m[rank][c] = m[rank][c] * s % p;
    for (int r = 0; r < rows_; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const int f = m[r][col];
      for (int c = 0; c < cols_; ++c) m[r][c] = ((m[r][c] - f * m[rank][c]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::vector<std::uint32_t> exterior_basis(int d, int i) {
  if (d < 0 || d > kMaxRank) throw std::length_error("Koszul rank d must be in [0, " + std::to_string(kMaxRank) + "]");
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask)
    if (std::popcount(mask) == i) out.push_back(mask);
  return out;
}

LMatrix koszul_differential(int d, int i, const Lambda& lam, const std::vector<std::int64_t>& chi) {
  if (static_cast<int>(chi.size()) != d) throw std::invalid_argument("one character value per generator");
  const auto src = exterior_basis(d, i), dst = exterior_basis(d, i + 1);
  LMatrix out(lam, static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (std::size_t c = 0; c < src.size(); ++c)
    for (int j = 0; j < d; ++j) {
      if (src[c] & (1u << j)) continue;
      const std::uint32_t target = src[c] | (1u << j);
      // sign of moving e_j past the basis vectors of index < j
      const int sign = (std::popcount(src[c] & ((1u << j) - 1)) % 2 == 0) ? 1 : -1;
      std::size_t r = 0;
      while (dst[r] != target) ++r;
      out.set(static_cast<int>(r), static_cast<int>(c), sign * (chi[j] - 1));
    }
  return out;
}

std::vector<int> GradedCohomology::ranks() const {
  std::vector<int> out;
  for (const auto& b : bases) out.push_back(static_cast<int>(b.size()));
  return out;
}

GradedCohomology koszul_cohomology(int d, const Lambda& lam) {
  GradedCohomology h{d, lam, {}};
  const std::vector<std::int64_t> trivial(d, 1);
  for (int i = 0; i <= d; ++i) {
    // With zero differentials every cochain is a cocycle and no coboundary is nonzero.
    if (i < d && !koszul_differential(d, i, lam, trivial).is_zero())
      throw std::logic_error("Koszul differential is nonzero on trivial coefficients");
    h.bases.push_back(exterior_basis(d, i));
  }
  return h;
}

DeltaModel::DeltaModel(int a, Lambda lam) : size_(1), lam_(lam) {
  if (a < 1) throw std::invalid_argument("subgroup exponent a must be >= 1");
  for (int i = 0; i < a; ++i) {
    size_ *= lam.p();
    if (size_ > (1 << 20)) throw std::length_error("p^a exceeds 2^20");
  }
}

std::vector<std::int64_t> DeltaModel::delta(const std::vector<std::int64_t>& f) const {
  std::vector<std::int64_t> out(size_);
  for (int x = 0; x < size_; ++x) out[x] = lam_.reduce(f[(x + 1) % size_] - f[x]);
  return out;
}

std::int64_t DeltaModel::cores(const std::vector<std::int64_t>& f) const {
  std::int64_t s = 0;
  for (auto v : f) s = lam_.reduce(s + v);
  return s;
}

std::optional<std::vector<std::int64_t>> DeltaModel::delta_preimage(const std::vector<std::int64_t>& f) const {
  if (cores(f) != 0) return std::nullopt;
  std::vector<std::int64_t> g(size_, 0);
  for (int x = 0; x + 1 < size_; ++x) g[x + 1] = lam_.reduce(g[x] + f[x]);
  return g;
}

std::vector<std::int64_t> DeltaModel::constant(std::int64_t c) const {
  return std::vector<std::int64_t>(size_, lam_.reduce(c));
}

std::vector<std::int64_t> DeltaModel::dirac(int x) const {
  std::vector<std::int64_t> out(size_, 0);
  out.at(x) = 1;
  return out;
}

Rank1Cores cores_rank1(int a, const Lambda& lam) {
  const DeltaModel model(a, lam);
  // H^0 = Ker Δ is generated by the constant 1; H^1 = Coker Δ by the class of δ_0.
  const auto one = model.constant(1);
  for (auto v : model.delta(one))
    if (v != 0) throw std::logic_error("constants are not Δ-cocycles");
  return Rank1Cores{LMatrix::diagonal(lam, {model.cores(one)}), LMatrix::diagonal(lam, {model.cores(model.dirac(0))})};
}

std::vector<LMatrix> cores_kunneth(int d, int a, const Lambda& lam) {
  if (d < 0 || d > kMaxRank) throw std::length_error("Koszul rank d must be in [0, " + std::to_string(kMaxRank) + "]");
  const Rank1Cores c = cores_rank1(a, lam);
  std::vector<LMatrix> out;
  for (int i = 0; i <= d; ++i) {
    std::vector<std::int64_t> diag;
    for (auto mask : exterior_basis(d, i)) {
      std::int64_t v = 1;
      for (int j = 0; j < d; ++j) v = lam.reduce(v * ((mask & (1u << j)) ? c.degree1.at(0, 0) : c.degree0.at(0, 0)));
      diag.push_back(v);
    }
    out.push_back(LMatrix::diagonal(lam, diag));
  }
  return out;
}

std::vector<LMatrix> hecke_gamma(int d, int a, const Lambda& lam) {
  std::vector<LMatrix> out;
  for (const auto& c : cores_kunneth(d, a, lam)) out.push_back(c * LMatrix::identity(lam, c.rows()));
  return out;
}

Projector ordinary_projector(const LMatrix& U) {
  if (U.rows() != U.cols()) throw std::invalid_argument("U must be square");
  // E_k = U^{k!} = E_{k-1}^k and F_k = U^{k!-1} = E_{k-1}^{k-1} F_{k-1}.
  LMatrix e = U, f = LMatrix::identity(U.lambda(), U.rows());
  for (int k = 1; k <= kProjectorCap; ++k) {
    if (k > 1) {
      const LMatrix prev = e.pow(static_cast<std::uint64_t>(k - 1));
      f = prev * f;
      e = prev * e;
    }
    if (e * e == e) return Projector{e, f, k};
  }
  throw std::runtime_error("U^{k!} did not become idempotent for k <= " + std::to_string(kProjectorCap));
}

ProjectorChecks check_projector(const LMatrix& U, const Projector& pr) {
  const LMatrix& e = pr.e;
  const LMatrix one = LMatrix::identity(U.lambda(), U.rows());
  ProjectorChecks c{};
  c.idempotent = e * e == e;
  c.commutes = e * U == U * e;
  c.invertible_on_image = U * pr.u_pow_minus * e == e && U * pr.u_pow_minus == e;
  c.nilpotent_on_complement = (e * (one - e)).is_zero();
  return c;
}

std::vector<int> ordinary_ranks(int d, int a, const Lambda& lam) {
  std::vector<int> out;
  for (const auto& h : hecke_gamma(d, a, lam)) out.push_back(ordinary_projector(h).e.rank_mod_p());
  return out;
}

LMatrix random_endo(const Lambda& lam, int size, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, lam.modulus() - 1);
  LMatrix out(lam, size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) out.set(i, j, dist(rng));
  return out;
}

}  // namespace bruhat::ordcoh
