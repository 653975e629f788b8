#pragma once

#include <stdexcept>
#include <vector>

#include "symspec/gaussian.hpp"
#include "symspec/rational.hpp"

namespace symspec {

using RationalVec = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVec>;

inline Rational dot(const RationalVec& a, const RationalVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational acc(0);
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline RationalVec add(const RationalVec& a, const RationalVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  RationalVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline RationalVec sub(const RationalVec& a, const RationalVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
  RationalVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline RationalVec scale(const RationalVec& a, const Rational& c) {
  RationalVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

inline bool is_zero(const RationalVec& a) {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

/// Exact inverse of a square rational matrix (Gauss-Jordan).
inline RationalMatrix invert(RationalMatrix m) {
  const size_t n = m.size();
  RationalMatrix inv(n, RationalVec(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("invert: singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = m[col][col];
    for (size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (size_t row = 0; row < n; ++row) {
      if (row == col || sgn(m[row][col]) == 0) continue;
      Rational f = m[row][col];
      for (size_t j = 0; j < n; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Gaussian integer a + bi, the working type of the fraction-free rank path.
struct GaussianInt {
  Integer re;
  Integer im;

  GaussianInt() : re(0), im(0) {}
  explicit GaussianInt(long r) : re(r), im(0) {}
  GaussianInt(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return {a.re + b.re, a.im + b.im};
  }

  /// Exact division in Z[i]; the quotient must be integral (Bareiss guarantee).
  static GaussianInt divexact(const GaussianInt& a, const GaussianInt& b) {
    Integer norm = b.re * b.re + b.im * b.im;
    Integer nre = a.re * b.re + a.im * b.im;
    Integer nim = a.im * b.re - a.re * b.im;
    GaussianInt out;
    mpz_divexact(out.re.get_mpz_t(), nre.get_mpz_t(), norm.get_mpz_t());
    mpz_divexact(out.im.get_mpz_t(), nim.get_mpz_t(), norm.get_mpz_t());
    return out;
  }
};

using GaussianIntMatrix = std::vector<std::vector<GaussianInt>>;

/// Exact rank over Q(i) of an integer matrix: fraction-free Bareiss
/// elimination, which keeps entries as minors instead of growing fractions.
inline int rank_fraction_free(GaussianIntMatrix m) {
  if (m.empty() || m[0].empty()) return 0;
  const size_t rows = m.size();
  const size_t cols = m[0].size();
  GaussianInt prev(1);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && m[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    const GaussianInt pivot = m[row][col];
    for (size_t i = row + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j)
        m[i][j] = GaussianInt::divexact(m[i][j] * pivot - m[i][col] * m[row][j], prev);
      m[i][col] = GaussianInt(0);
    }
    prev = pivot;
    ++row;
  }
  return static_cast<int>(row);
}

/// Exact basis of the null space of a single linear functional sum_i g_i x_i.
/// Division-free: pivot entry g_p != 0 gives vectors g_p e_i - g_i e_p.
inline std::vector<GaussianVec> null_basis_of_functional(const GaussianVec& g) {
  size_t pivot = g.size();
  for (size_t i = 0; i < g.size(); ++i) {
    if (!g[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  std::vector<GaussianVec> basis;
  if (pivot == g.size()) {  // zero functional: whole space
    for (size_t i = 0; i < g.size(); ++i) {
      GaussianVec e(g.size(), GaussianRational(0));
      e[i] = GaussianRational(1);
      basis.push_back(std::move(e));
    }
    return basis;
  }
  for (size_t i = 0; i < g.size(); ++i) {
    if (i == pivot) continue;
    GaussianVec v(g.size(), GaussianRational(0));
    v[i] = g[pivot];
    v[pivot] = -g[i];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace symspec
