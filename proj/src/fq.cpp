#include "bruhat/fq.hpp"

#include <stdexcept>
#include <unordered_set>

namespace bruhat::fq {

Field::Field(int q) : q_(q) {
  if (q != 2 && q != 3 && q != 5) throw std::invalid_argument("q must be one of 2, 3, 5");
}

int Field::inv(int a) const {
  if (a % q_ == 0) throw std::domain_error("inverse of zero in F_q");
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw std::logic_error("no inverse found");
}

int Field::generator() const {
  switch (q_) {
    case 2: return 1;
    case 3: return 2;
    default: return 2;  // 2 generates F_5^*
  }
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}

Matrix Matrix::identity(int m) {
  Matrix id(m, m);
  for (int i = 0; i < m; ++i) id.set(i, i, 1);
  return id;
}

Matrix Matrix::mul(const Matrix& rhs, const Field& f) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in product");
  Matrix out(rows_, rhs.cols_);
  const int q = f.q();
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rhs.cols_; ++j) {
      int s = 0;
      for (int k = 0; k < cols_; ++k) s += at(i, k) * rhs.at(k, j);
      out.set(i, j, s % q);
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  Matrix out(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) out.set(i, j, at(r0 + i, c0 + j));
  return out;
}

std::uint64_t Matrix::key() const {
  if (data_.size() > 21) throw std::length_error("matrix too large for packed key");
  std::uint64_t k = static_cast<std::uint64_t>(rows_);
  for (auto v : data_) k = (k << 3) | v;
  return k;
}

int rref(Matrix& m, const Field& f) {
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < m.cols(); ++c) {
        const int t = m.at(row, c);
        m.set(row, c, m.at(piv, c));
        m.set(piv, c, t);
      }
    const int s = f.inv(m.at(row, col));
    for (int c = 0; c < m.cols(); ++c) m.set(row, c, f.mul(m.at(row, c), s));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const int factor = m.at(r, col);
      for (int c = 0; c < m.cols(); ++c) m.set(r, c, f.sub(m.at(r, c), f.mul(factor, m.at(row, c))));
    }
    ++row;
  }
  if (row < m.rows()) m = m.block(0, 0, row, m.cols());
  return row;
}

int rank(Matrix m, const Field& f) { return rref(m, f); }

int det(Matrix m, const Field& f) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int size = m.rows();
  int d = 1;
  for (int col = 0; col < size; ++col) {
    int piv = -1;
    for (int r = col; r < size; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int c = 0; c < size; ++c) {
        const int t = m.at(col, c);
        m.set(col, c, m.at(piv, c));
        m.set(piv, c, t);
      }
      d = f.neg(d);
    }
    d = f.mul(d, m.at(col, col));
    const int s = f.inv(m.at(col, col));
    for (int r = col + 1; r < size; ++r) {
      if (m.at(r, col) == 0) continue;
      const int factor = f.mul(m.at(r, col), s);
      for (int c = col; c < size; ++c) m.set(r, c, f.sub(m.at(r, c), f.mul(factor, m.at(col, c))));
    }
  }
  return d;
}

bool invertible(const Matrix& m, const Field& f) { return det(m, f) != 0; }

Matrix symplectic_form(int n, const Field& f) {
  Matrix J(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    J.set(i, n + i, 1);
    J.set(n + i, i, f.neg(1));
  }
  return J;
}

bool is_symplectic(const Matrix& g, const Field& f) {
  const Matrix J = symplectic_form(g.rows() / 2, f);
  return g.transpose().mul(J, f).mul(g, f) == J;
}

Subspace::Subspace(Matrix basis, const Field& f) : basis_(std::move(basis)) {
  const int r = basis_.rows();
  if (rref(basis_, f) != r) throw std::invalid_argument("subspace basis rows are dependent");
}

Subspace Subspace::act(const Matrix& g, const Field& f) const {
  return Subspace(basis_.mul(g.transpose(), f), f);
}

namespace {

Matrix stack(const Matrix& top, const Matrix& bottom) {
  Matrix out(top.rows() + bottom.rows(), top.cols());
  for (int i = 0; i < top.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) out.set(i, j, top.at(i, j));
  for (int i = 0; i < bottom.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) out.set(top.rows() + i, j, bottom.at(i, j));
  return out;
}

}  // namespace

int Subspace::intersection_dim(const Subspace& other, const Field& f) const {
  return dim() + other.dim() - rank(stack(basis_, other.basis_), f);
}

int Subspace::intersection_dim_coordinate(const std::vector<int>& coords, const Field& f) const {
  return intersection_dim(coordinate_subspace(ambient(), coords, f), f);
}

bool Subspace::totally_isotropic(const Field& f) const {
  const Matrix J = symplectic_form(ambient() / 2, f);
  const Matrix form = basis_.mul(J, f).mul(basis_.transpose(), f);
  for (int i = 0; i < form.rows(); ++i)
    for (int j = 0; j < form.cols(); ++j)
      if (form.at(i, j) != 0) return false;
  return true;
}

Subspace coordinate_subspace(int ambient, const std::vector<int>& coords, const Field& f) {
  Matrix b(static_cast<int>(coords.size()), ambient);
  for (std::size_t i = 0; i < coords.size(); ++i) b.set(static_cast<int>(i), coords[i], 1);
  return Subspace(std::move(b), f);
}

Matrix root_element(const roots::Root& r, const Field& f) {
  const GroupKind kind = r.kind();
  const int m = kind.degree();
  Matrix x = Matrix::identity(m);
  x.set(r.a(), r.b(), 1);
  if (!kind.is_symplectic()) return x;
  const int a2 = weyl::iota(r.b(), kind.n), b2 = weyl::iota(r.a(), kind.n);
  if (a2 == r.a() && b2 == r.b()) {
    if (!is_symplectic(x, f)) throw std::logic_error("long root element is not symplectic");
    return x;
  }
  for (int sgn : {1, f.neg(1)}) {
    Matrix y = x;
    y.set(a2, b2, sgn);
    if (is_symplectic(y, f)) return y;
  }
  throw std::logic_error("no symplectic root element found");
}

std::vector<Matrix> torus_generators(GroupKind kind, const Field& f) {
  std::vector<Matrix> out;
  const int g = f.generator();
  if (g == 1) return out;  // T(F_2) is trivial
  const int n = kind.n;
  if (!kind.is_symplectic()) {
    for (int i = 0; i < 2 * n; ++i) {
      Matrix t = Matrix::identity(2 * n);
      t.set(i, i, g);
      out.push_back(t);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      Matrix t = Matrix::identity(2 * n);
      t.set(i, i, g);
      t.set(n + i, n + i, f.inv(g));
      out.push_back(t);
    }
  }
  return out;
}

Matrix weyl_matrix(const weyl::WeylElement& w, const Field& f) {
  const GroupKind kind = w.kind();
  const int m = kind.degree();
  Matrix M(m, m);
  for (int j = 0; j < m; ++j) {
    int s = 1;
    if (kind.is_symplectic() && j >= kind.n && w(j) < kind.n) s = f.neg(1);
    M.set(w(j), j, s);
  }
  return M;
}

std::vector<Matrix> generators(GroupKind kind, Subgroup which, const Field& f) {
  std::vector<Matrix> out = torus_generators(kind, f);
  for (const auto& r : roots::all_roots(kind)) {
    bool take = false;
    switch (which) {
      case Subgroup::Borel: take = r.positive(); break;
      case Subgroup::OppositeBorel: take = !r.positive(); break;
      case Subgroup::Parabolic: take = r.positive() || r.in_levi(); break;
      case Subgroup::OppositeParabolic: take = !r.positive() || r.in_levi(); break;
      case Subgroup::Whole: take = true; break;
    }
    if (take) out.push_back(root_element(r, f));
  }
  return out;
}

std::uint64_t group_order(GroupKind kind, int q) {
  const int n = kind.n;
  auto pw = [](std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  if (!kind.is_symplectic()) {
    const int m = 2 * n;
    std::uint64_t order = 1;
    for (int i = 0; i < m; ++i) order *= pw(q, m) - pw(q, i);
    return order;
  }
  std::uint64_t order = pw(q, n * n);
  for (int i = 1; i <= n; ++i) order *= pw(q, 2 * i) - 1;
  return order;
}

std::vector<Matrix> enumerate_group(GroupKind kind, const Field& f, std::uint64_t limit) {
  if (kind.n > 3) throw std::length_error("group enumeration only for n <= 3");
  const std::uint64_t order = group_order(kind, f.q());
  if (order > limit)
    throw std::length_error("|G(F_q)| = " + std::to_string(order) + " exceeds limit " + std::to_string(limit));
  const auto gens = generators(kind, Subgroup::Whole, f);
  std::vector<Matrix> elems{Matrix::identity(kind.degree())};
  std::unordered_set<std::uint64_t> seen{elems.front().key()};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const Matrix cur = elems[head];
    for (const auto& g : gens) {
      Matrix nxt = cur.mul(g, f);
      if (seen.insert(nxt.key()).second) elems.push_back(std::move(nxt));
    }
  }
  if (elems.size() != order) throw std::logic_error("generated group has unexpected order");
  return elems;
}

}  // namespace bruhat::fq
