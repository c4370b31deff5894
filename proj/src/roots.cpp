#include "bruhat/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace bruhat::roots {

using weyl::iota;

Root::Root(GroupKind kind, int a, int b) : kind_(kind), a_(a), b_(b) {
  const int m = kind.degree();
  if (a < 0 || b < 0 || a >= m || b >= m || a == b) throw std::invalid_argument("invalid root indices");
  if (kind.is_symplectic()) {
    const int a2 = iota(b, kind.n), b2 = iota(a, kind.n);
    if (a2 < a_ || (a2 == a_ && b2 < b_)) {
      a_ = a2;
      b_ = b2;
    }
  }
}

bool Root::positive() const {
  const int n = kind_.n;
  if (!kind_.is_symplectic()) return a_ < b_;
  // canonical pairs never have both indices in the upper half
  if (a_ < n && b_ < n) return a_ < b_;
  return a_ < n;
}

bool Root::in_levi() const { return (a_ < kind_.n) == (b_ < kind_.n); }

Shape Root::shape() const {
  if (!kind_.is_symplectic()) return Shape::Chi;
  return (a_ < kind_.n && b_ < kind_.n) ? Shape::Chi : Shape::Psi;
}

int Root::i() const {
  const int n = kind_.n;
  if (!kind_.is_symplectic()) return std::min(a_, b_) + 1;
  if (shape() == Shape::Chi) return std::min(a_, b_) + 1;
  return std::min(a_ % n, b_ % n) + 1;
}

int Root::j() const {
  const int n = kind_.n;
  if (!kind_.is_symplectic()) return std::max(a_, b_) + 1;
  if (shape() == Shape::Chi) return std::max(a_, b_) + 1;
  return std::max(a_ % n, b_ % n) + 1;
}

int Root::sign() const { return positive() ? +1 : -1; }

std::string Root::str() const {
  std::string s = shape() == Shape::Chi ? "chi_{" : "psi_{";
  if (!kind_.is_symplectic()) return s + std::to_string(a_ + 1) + "," + std::to_string(b_ + 1) + "}";
  s += std::to_string(i()) + "," + std::to_string(j()) + "}";
  if (!positive()) s += "^-1";
  return s;
}

Root chi(GroupKind kind, int i, int j, int sign) {
  if (sign > 0) return Root(kind, i - 1, j - 1);
  return Root(kind, j - 1, i - 1);
}

Root psi(GroupKind kind, int i, int j, int sign) {
  if (!kind.is_symplectic()) throw std::invalid_argument("psi roots exist only in type C");
  const int n = kind.n;
  if (sign > 0) return Root(kind, i - 1, n + j - 1);
  return Root(kind, n + j - 1, i - 1);
}

RootSet all_roots(GroupKind kind) {
  RootSet out;
  for (int a = 0; a < kind.degree(); ++a)
    for (int b = 0; b < kind.degree(); ++b)
      if (a != b) out.insert(Root(kind, a, b));
  return out;
}

RootSet positive_roots(GroupKind kind) {
  RootSet out;
  for (const auto& r : all_roots(kind))
    if (r.positive()) out.insert(r);
  return out;
}

RootSet negative_roots(GroupKind kind) {
  RootSet out;
  for (const auto& r : all_roots(kind))
    if (!r.positive()) out.insert(r);
  return out;
}

RootSet simple_roots(GroupKind kind) {
  RootSet out;
  const int n = kind.n;
  if (!kind.is_symplectic()) {
    for (int i = 1; i < 2 * n; ++i) out.insert(chi(kind, i, i + 1));
  } else {
    for (int i = 1; i < n; ++i) out.insert(chi(kind, i, i + 1));
    out.insert(psi(kind, n, n));
  }
  return out;
}

Root weyl_action(const weyl::WeylElement& w, const Root& r) {
  if (!(w.kind() == r.kind())) throw std::invalid_argument("kind mismatch in Weyl action");
  return Root(r.kind(), w(r.a()), w(r.b()));
}

RootSet weyl_action(const weyl::WeylElement& w, const RootSet& s) {
  RootSet out;
  for (const auto& r : s) out.insert(weyl_action(w, r));
  return out;
}

ParabolicData parabolic_data(GroupKind kind) {
  ParabolicData d;
  for (const auto& r : all_roots(kind)) {
    if (r.in_levi())
      d.phiI.insert(r);
    else if (r.positive())
      d.nI.insert(r);
    else
      d.nbarI.insert(r);
  }
  return d;
}

namespace {

RootSet unite(const RootSet& x, const RootSet& y) {
  RootSet out = x;
  out.insert(y.begin(), y.end());
  return out;
}

int count_minus(const RootSet& x, const RootSet& y) {
  int c = 0;
  for (const auto& r : x)
    if (!y.count(r)) ++c;
  return c;
}

int count_both(const RootSet& x, const RootSet& y) {
  int c = 0;
  for (const auto& r : x)
    if (y.count(r)) ++c;
  return c;
}

}  // namespace

int opposite_cell_dim(const weyl::WeylElement& w) {
  const GroupKind kind = w.kind();
  const auto pd = parabolic_data(kind);
  const RootSet plus_levi = unite(positive_roots(kind), pd.phiI);
  const RootSet minus_levi = unite(negative_roots(kind), pd.phiI);
  return count_minus(plus_levi, weyl_action(w, minus_levi));
}

int cell_dim_by_roots(const weyl::WeylElement& w) {
  return opposite_cell_dim(weyl::longest_element(w.kind()) * w);
}

int unipotent_intersection_dim(const weyl::WeylElement& w) {
  const GroupKind kind = w.kind();
  const auto pd = parabolic_data(kind);
  const RootSet minus_levi = unite(negative_roots(kind), pd.phiI);
  return count_both(weyl_action(w, minus_levi), pd.nbarI);
}

int standard_unipotent_intersection_dim(const weyl::WeylElement& w) {
  const GroupKind kind = w.kind();
  const auto pd = parabolic_data(kind);
  const RootSet plus_levi = unite(positive_roots(kind), pd.phiI);
  return count_both(weyl_action(w, plus_levi), pd.nI);
}

int n0J_rank(const weyl::SubsetJ& J) {
  return standard_unipotent_intersection_dim(weyl::w_J(J));
}

int open_cell_dim(GroupKind kind) {
  return kind.is_symplectic() ? kind.n * (kind.n + 1) / 2 : kind.n * kind.n;
}

}  // namespace bruhat::roots
