#include "bruhat/laurent.hpp"

#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bruhat::laurent {

VarList indexed_vars(const std::string& prefix, int count) {
  VarList out;
  for (int i = 1; i <= count; ++i) out.push_back(prefix + "_" + std::to_string(i));
  return out;
}

SymLaurentPoly::SymLaurentPoly(VarList vars) : vars_(std::move(vars)) {}

SymLaurentPoly SymLaurentPoly::constant(const VarList& vars, long c, int vexp) {
  return term(vars, Monomial{std::vector<int>(vars.size(), 0), vexp}, mpz_class(c));
}

SymLaurentPoly SymLaurentPoly::variable(const VarList& vars, int index, int power) {
  if (index < 0 || index >= static_cast<int>(vars.size())) throw std::out_of_range("variable index");
  Monomial m{std::vector<int>(vars.size(), 0), 0};
  m.exps[index] = power;
  return term(vars, m, 1);
}

SymLaurentPoly SymLaurentPoly::term(const VarList& vars, const Monomial& m, const mpz_class& c) {
  if (m.exps.size() != vars.size()) throw std::invalid_argument("exponent vector has the wrong length");
  SymLaurentPoly p(vars);
  p.add_term(m, c);
  return p;
}

void SymLaurentPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void SymLaurentPoly::require_same_ring(const SymLaurentPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomials live in different rings");
}

namespace {

// Generators of the symmetry group acting on exponent vectors.
std::vector<std::vector<int>> act_generators(const std::vector<int>& e, const Symmetry& sym) {
  std::vector<std::vector<int>> out;
  for (const auto& b : sym) {
    for (int i = b.start; i + 1 < b.start + b.len; ++i) {
      auto f = e;
      std::swap(f[i], f[i + 1]);
      out.push_back(std::move(f));
    }
    if (b.with_inversion && b.len > 0) {
      auto f = e;
      f[b.start] = -f[b.start];
      out.push_back(std::move(f));
    }
  }
  return out;
}

void check_symmetry_fits(const Symmetry& sym, std::size_t nvars) {
  for (const auto& b : sym)
    if (b.start < 0 || b.len < 0 || static_cast<std::size_t>(b.start + b.len) > nvars)
      throw std::invalid_argument("symmetry block outside the variable list");
}

}  // namespace

bool SymLaurentPoly::is_invariant(const Symmetry& sym) const {
  check_symmetry_fits(sym, vars_.size());
  for (const auto& [m, c] : terms_)
    for (auto& e : act_generators(m.exps, sym)) {
      auto it = terms_.find(Monomial{std::move(e), m.vexp});
      if (it == terms_.end() || it->second != c) return false;
    }
  return true;
}

SymLaurentPoly SymLaurentPoly::with_symmetry(Symmetry sym) const {
  if (!is_invariant(sym)) throw std::invalid_argument("polynomial is not invariant under the declared symmetry");
  SymLaurentPoly p = *this;
  p.sym_ = std::move(sym);
  return p;
}

SymLaurentPoly SymLaurentPoly::operator+(const SymLaurentPoly& o) const {
  require_same_ring(o);
  SymLaurentPoly p = *this;
  for (const auto& [m, c] : o.terms_) p.add_term(m, c);
  if (sym_ != o.sym_) p.sym_.clear();
  return p;
}

SymLaurentPoly SymLaurentPoly::operator-() const {
  SymLaurentPoly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

SymLaurentPoly SymLaurentPoly::operator-(const SymLaurentPoly& o) const { return *this + (-o); }

SymLaurentPoly SymLaurentPoly::operator*(const SymLaurentPoly& o) const {
  require_same_ring(o);
  SymLaurentPoly p(vars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m{m1.exps, m1.vexp + m2.vexp};
      for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += m2.exps[i];
      p.add_term(m, c1 * c2);
    }
  if (sym_ == o.sym_) p.sym_ = sym_;
  return p;
}

SymLaurentPoly SymLaurentPoly::times_v(int k) const {
  SymLaurentPoly p(vars_);
  p.sym_ = sym_;
  for (const auto& [m, c] : terms_) p.terms_.emplace(Monomial{m.exps, m.vexp + k}, c);
  return p;
}

SymLaurentPoly SymLaurentPoly::pow(int e) const {
  if (e < 0) return inverse_unit().pow(-e);
  SymLaurentPoly r = constant(vars_, 1);
  r.sym_ = sym_;
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool SymLaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

SymLaurentPoly SymLaurentPoly::inverse_unit() const {
  if (!is_unit()) throw std::domain_error("not a unit of the Laurent ring: " + str());
  const auto& [m, c] = *terms_.begin();
  Monomial inv{m.exps, -m.vexp};
  for (auto& x : inv.exps) x = -x;
  SymLaurentPoly p = term(vars_, inv, c);
  p.sym_ = sym_;
  return p;
}

SymLaurentPoly SymLaurentPoly::substitute(const std::vector<SymLaurentPoly>& images) const {
  if (images.size() != vars_.size()) throw std::invalid_argument("one image per variable required");
  if (images.empty()) throw std::invalid_argument("substitution needs a target ring");
  const VarList& target = images.front().vars();
  std::vector<SymLaurentPoly> inverses;
  for (const auto& im : images) {
    if (im.vars() != target) throw std::invalid_argument("images live in different rings");
    inverses.push_back(im.inverse_unit());
  }
  SymLaurentPoly out(target);
  for (const auto& [m, c] : terms_) {
    SymLaurentPoly t = term(target, Monomial{std::vector<int>(target.size(), 0), m.vexp}, c);
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      const auto& base = m.exps[i] >= 0 ? images[i] : inverses[i];
      for (int k = 0; k < std::abs(m.exps[i]); ++k) t = t * base;
    }
    out += t;
  }
  return out;
}

namespace {

std::string monomial_str(const VarList& vars, const Monomial& m, const mpz_class& c) {
  std::ostringstream os;
  os << c.get_str();
  if (m.vexp != 0) os << "*v^" << m.vexp;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (m.exps[i] == 0) continue;
    os << "*" << vars[i];
    if (m.exps[i] != 1) os << "^" << m.exps[i];
  }
  return os.str();
}

}  // namespace

std::string SymLaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += monomial_str(vars_, m, c);
  }
  return s;
}

SymLaurentPoly symmetrize(const SymLaurentPoly& p, const Symmetry& sym) {
  SymLaurentPoly out(p.vars());
  for (const auto& [m, c] : p.terms()) {
    std::set<std::vector<int>> orbit{m.exps};
    std::vector<std::vector<int>> frontier{m.exps};
    while (!frontier.empty()) {
      const auto e = frontier.back();
      frontier.pop_back();
      for (auto& f : act_generators(e, sym))
        if (orbit.insert(f).second) frontier.push_back(std::move(f));
    }
    for (const auto& e : orbit) out += SymLaurentPoly::term(p.vars(), Monomial{e, m.vexp}, c);
  }
  return out.with_symmetry(sym);
}

std::string first_difference(const SymLaurentPoly& a, const SymLaurentPoly& b) {
  if (a.vars() != b.vars()) return "different variable lists";
  const auto d = a - b;
  if (d.is_zero()) return "";
  const auto& [m, c] = *d.terms().begin();
  auto coeff = [&](const SymLaurentPoly& p) {
    auto it = p.terms().find(m);
    return it == p.terms().end() ? mpz_class(0) : it->second;
  };
  return monomial_str(a.vars(), m, 1) + ": " + coeff(a).get_str() + " vs " + coeff(b).get_str();
}

}  // namespace bruhat::laurent
