#pragma once

#include <complex>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symspec/gaussian.hpp"

namespace symspec {

/// Declared variable families of a polynomial ring, e.g. z[0..n], w[0..n] or
/// matrix entries z[i,j]. Shared immutably between polynomials; two
/// polynomials are compatible iff their tables declare the same families.
class VarTable {
 public:
  struct FamilyDecl {
    std::string name;
    int arity = 0;
    int rows = 0;  // rows*cols == arity for matrix-shaped families, else 0
    int cols = 0;

    bool operator==(const FamilyDecl& o) const {
      return name == o.name && arity == o.arity && rows == o.rows && cols == o.cols;
    }
  };

  static std::shared_ptr<const VarTable> make(std::vector<FamilyDecl> families) {
    auto t = std::shared_ptr<VarTable>(new VarTable());
    int offset = 0;
    for (auto& f : families) {
      if (f.arity < 1) throw std::invalid_argument("VarTable: family arity must be >= 1");
      if (f.rows != 0 && f.rows * f.cols != f.arity)
        throw std::invalid_argument("VarTable: rows*cols must equal arity");
      t->offsets_.push_back(offset);
      offset += f.arity;
    }
    t->families_ = std::move(families);
    t->total_ = offset;
    return t;
  }

  static std::shared_ptr<const VarTable> make_flat(
      std::initializer_list<std::pair<std::string, int>> fams) {
    std::vector<FamilyDecl> decls;
    for (const auto& [name, arity] : fams) decls.push_back({name, arity, 0, 0});
    return make(std::move(decls));
  }

  static std::shared_ptr<const VarTable> make_matrix(
      std::initializer_list<std::pair<std::string, int>> fams) {
    std::vector<FamilyDecl> decls;
    for (const auto& [name, n] : fams) decls.push_back({name, n * n, n, n});
    return make(std::move(decls));
  }

  int total() const { return total_; }

  const FamilyDecl* find(std::string_view name) const {
    for (const auto& f : families_)
      if (f.name == name) return &f;
    return nullptr;
  }

  int slot(std::string_view family, int i) const {
    for (size_t fi = 0; fi < families_.size(); ++fi) {
      if (families_[fi].name == family) {
        if (i < 0 || i >= families_[fi].arity)
          throw std::out_of_range("VarTable: index out of range for family " + std::string(family));
        return offsets_[fi] + i;
      }
    }
    throw std::invalid_argument("VarTable: unknown variable family '" + std::string(family) + "'");
  }

  int slot(std::string_view family, int i, int j) const {
    for (size_t fi = 0; fi < families_.size(); ++fi) {
      if (families_[fi].name == family) {
        const auto& f = families_[fi];
        if (f.rows == 0) throw std::invalid_argument("VarTable: family is not matrix-shaped");
        if (i < 0 || i >= f.rows || j < 0 || j >= f.cols)
          throw std::out_of_range("VarTable: matrix index out of range");
        return offsets_[fi] + i * f.cols + j;
      }
    }
    throw std::invalid_argument("VarTable: unknown variable family '" + std::string(family) + "'");
  }

  std::string var_name(int slot) const {
    for (size_t fi = 0; fi < families_.size(); ++fi) {
      if (slot >= offsets_[fi] && slot < offsets_[fi] + families_[fi].arity) {
        const auto& f = families_[fi];
        int local = slot - offsets_[fi];
        std::ostringstream out;
        out << f.name << "[";
        if (f.rows != 0) {
          out << (local / f.cols) << "," << (local % f.cols);
        } else {
          out << local;
        }
        out << "]";
        return out.str();
      }
    }
    throw std::out_of_range("VarTable: slot out of range");
  }

  bool same_as(const VarTable& o) const { return families_ == o.families_; }

  const std::vector<FamilyDecl>& families() const { return families_; }

 private:
  VarTable() = default;
  std::vector<FamilyDecl> families_;
  std::vector<int> offsets_;
  int total_ = 0;
};

using VarTablePtr = std::shared_ptr<const VarTable>;
using Monomial = std::vector<unsigned char>;  // exponent per slot

/// Sparse multivariate polynomial over the Gaussian rationals. Stored in
/// canonical form: monomials keyed and ordered lexicographically over the
/// slot exponents, no zero coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, GaussianRational>;

  Polynomial() = default;

  static Polynomial zero(VarTablePtr vars) { return Polynomial(std::move(vars)); }

  static Polynomial constant(VarTablePtr vars, GaussianRational c) {
    Polynomial p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Monomial(p.vars_->total(), 0), std::move(c));
    return p;
  }

  static Polynomial variable(VarTablePtr vars, std::string_view family, int i) {
    Polynomial p(std::move(vars));
    Monomial m(p.vars_->total(), 0);
    m[p.vars_->slot(family, i)] = 1;
    p.terms_.emplace(std::move(m), GaussianRational(1));
    return p;
  }

  static Polynomial variable(VarTablePtr vars, std::string_view family, int i, int j) {
    Polynomial p(std::move(vars));
    Monomial m(p.vars_->total(), 0);
    m[p.vars_->slot(family, i, j)] = 1;
    p.terms_.emplace(std::move(m), GaussianRational(1));
    return p;
  }

  const VarTablePtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (unsigned char e : terms_.begin()->first)
      if (e) return false;
    return true;
  }

  GaussianRational constant_term() const {
    if (terms_.empty()) return GaussianRational(0);
    Monomial m(vars_->total(), 0);
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational(0) : it->second;
  }

  int total_degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
      int d = 0;
      for (unsigned char e : m) d += e;
      deg = std::max(deg, d);
    }
    return deg;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.vars_);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    const Polynomial& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const Polynomial& big = a.terms_.size() <= b.terms_.size() ? b : a;
    const int total = a.vars_->total();
    Monomial key(total);
    for (const auto& [ms, cs] : small.terms_) {
      for (const auto& [mb, cb] : big.terms_) {
        for (int i = 0; i < total; ++i) key[i] = static_cast<unsigned char>(ms[i] + mb[i]);
        out.add_term(key, cs * cb);
      }
    }
    return out;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  Polynomial& operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  friend Polynomial operator*(Polynomial p, const GaussianRational& c) { return p *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial p) { return p *= c; }
  friend Polynomial operator-(Polynomial p) { return p *= GaussianRational(-1); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_->same_as(*b.vars_) && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned m) const {
    Polynomial acc = constant(vars_, GaussianRational(1));
    for (unsigned i = 0; i < m; ++i) acc = acc * *this;
    return acc;
  }

  /// Exact formal partial derivative with respect to one variable slot.
  Polynomial derive_slot(int slot) const {
    if (slot < 0 || slot >= vars_->total()) throw std::invalid_argument("derive: unknown variable");
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) {
      if (m[slot] == 0) continue;
      Monomial m2 = m;
      m2[slot] -= 1;
      out.terms_.emplace(std::move(m2), c * GaussianRational(m[slot]));
    }
    return out;
  }

  Polynomial derive(std::string_view family, int i) const { return derive_slot(vars_->slot(family, i)); }
  Polynomial derive(std::string_view family, int i, int j) const {
    return derive_slot(vars_->slot(family, i, j));
  }

  /// Substitute every variable by a polynomial over a (possibly different)
  /// table; `images[slot]` is the image of that variable.
  Polynomial subst(const VarTablePtr& target, const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != vars_->total())
      throw std::invalid_argument("subst: one image per source variable required");
    for (const auto& img : images)
      if (!img.vars()->same_as(*target)) throw std::invalid_argument("subst: image over wrong table");
    Polynomial out = zero(target);
    // lazily grown power cache per slot
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](int slot, int e) -> const Polynomial& {
      auto& cache = powers[slot];
      if (cache.empty()) cache.push_back(constant(target, GaussianRational(1)));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[slot]);
      return cache[e];
    };
    for (const auto& [m, c] : terms_) {
      Polynomial term = constant(target, c);
      for (size_t s = 0; s < m.size(); ++s)
        if (m[s]) term = term * power(static_cast<int>(s), m[s]);
      out += term;
    }
    return out;
  }

  /// Exact or numeric evaluation; `point[slot]` is the variable value.
  template <typename T>
  T eval(const std::vector<T>& point) const {
    if (static_cast<int>(point.size()) != vars_->total())
      throw std::invalid_argument("eval: one value per variable required");
    std::vector<std::vector<T>> powers(point.size());
    auto power = [&](size_t slot, int e) -> const T& {
      auto& cache = powers[slot];
      if (cache.empty()) cache.push_back(T(1));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * point[slot]);
      return cache[e];
    };
    T acc(0);
    for (const auto& [m, c] : terms_) {
      T term = coeff_cast<T>(c);
      for (size_t s = 0; s < m.size(); ++s)
        if (m[s]) term = term * power(s, m[s]);
      acc = acc + term;
    }
    return acc;
  }

  /// Canonical text form: monomials in lexicographic slot order, coefficients
  /// as "(a+bi)". Bit-exact across runs. See docs/polynomial_format.md.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      out << "(" << c.str() << ")";
      for (size_t s = 0; s < m.size(); ++s) {
        if (!m[s]) continue;
        out << "*" << vars_->var_name(static_cast<int>(s));
        if (m[s] > 1) out << "^" << static_cast<int>(m[s]);
      }
    }
    return out.str();
  }

 private:
  explicit Polynomial(VarTablePtr vars) : vars_(std::move(vars)) {}

  template <typename T>
  static T coeff_cast(const GaussianRational& c);

  void check_compatible(const Polynomial& o) const {
    if (vars_.get() == o.vars_.get()) return;
    if (!vars_ || !o.vars_ || !vars_->same_as(*o.vars_))
      throw std::invalid_argument("polynomial arithmetic: mismatched variable families");
  }

  void add_term(const Monomial& m, GaussianRational c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  VarTablePtr vars_;
  TermMap terms_;
};

template <>
inline GaussianRational Polynomial::coeff_cast<GaussianRational>(const GaussianRational& c) {
  return c;
}

template <>
inline std::complex<double> Polynomial::coeff_cast<std::complex<double>>(const GaussianRational& c) {
  return to_complex(c);
}

}  // namespace symspec
