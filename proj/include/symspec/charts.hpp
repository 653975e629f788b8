#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symspec/rng.hpp"

namespace symspec {

using ComplexVec = std::vector<std::complex<double>>;

/// Chart tolerances: inputs are gated at in_tol, outputs must verify at out_tol.
struct ChartTolerances {
  double in_tol = 1e-10;
  double out_tol = 1e-9;
};

class ChartError : public std::runtime_error {
 public:
  ChartError(const std::string& what, std::vector<double> residuals)
      : std::runtime_error(what), residuals_(std::move(residuals)) {}
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<double> residuals_;
};

namespace detail {

inline double norm2(const ComplexVec& v) {
  double acc = 0;
  for (const auto& x : v) acc += std::norm(x);
  return acc;
}

inline std::complex<double> dot_herm(const ComplexVec& a, const ComplexVec& b) {
  std::complex<double> acc(0.0, 0.0);
  for (size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

inline std::complex<double> dot_bilin(const ComplexVec& a, const ComplexVec& b) {
  std::complex<double> acc(0.0, 0.0);
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

/// Adjacent-pair symplectic form z0 w1 - z1 w0 + z2 w3 - z3 w2 + ...
inline std::complex<double> symplectic_adjacent(const ComplexVec& z, const ComplexVec& w) {
  std::complex<double> acc(0.0, 0.0);
  for (size_t k = 0; 2 * k + 1 < z.size(); ++k)
    acc += z[2 * k] * w[2 * k + 1] - z[2 * k + 1] * w[2 * k];
  return acc;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Complex chart: T*_0 CP^n as {(u,v): ||u|| = 1, u . conj(v) = 0, v != 0}
// mapped onto {(z,w): <z,z> = <w,w> != 0, z . w = 0}.
// ---------------------------------------------------------------------------

/// Residuals of the input constraints, in order: | ||u||-1 |, |u . conj(v)|, 1/||v||.
inline std::vector<double> chart_complex_in_residuals(const ComplexVec& u, const ComplexVec& v) {
  double nu = std::sqrt(detail::norm2(u));
  double nv = std::sqrt(detail::norm2(v));
  // u . conj(v) = sum u_k conj(v_k) = dot_herm(v, u)
  return {std::fabs(nu - 1.0), std::abs(detail::dot_herm(v, u)), nv == 0.0 ? 1.0 : 0.0};
}

/// Residuals of the target constraints: | <z,z> - <w,w> |, |z . w|.
inline std::vector<double> chart_complex_out_residuals(const ComplexVec& z, const ComplexVec& w) {
  return {std::fabs(detail::norm2(z) - detail::norm2(w)), std::abs(detail::dot_bilin(z, w))};
}

/// z_k = (||v|| u_k + i v_k) / sqrt(2),  w_k = (conj(v_k) - i ||v|| conj(u_k)) / sqrt(2).
inline std::pair<ComplexVec, ComplexVec> chart_complex(const ComplexVec& u, const ComplexVec& v,
                                                       ChartTolerances tol = {}) {
  if (u.size() != v.size() || u.empty())
    throw std::invalid_argument("chart_complex: u, v must have equal positive length");
  auto in_res = chart_complex_in_residuals(u, v);
  if (in_res[0] > tol.in_tol || in_res[1] > tol.in_tol || in_res[2] > 0.5)
    throw ChartError("chart_complex: input constraints violated", in_res);
  const std::complex<double> I(0.0, 1.0);
  const double s = std::sqrt(detail::norm2(v));
  const double r2 = std::sqrt(2.0);
  ComplexVec z(u.size()), w(u.size());
  for (size_t k = 0; k < u.size(); ++k) {
    z[k] = (s * u[k] + I * v[k]) / r2;
    w[k] = (std::conj(v[k]) - I * s * std::conj(u[k])) / r2;
  }
  return {std::move(z), std::move(w)};
}

// ---------------------------------------------------------------------------
// Quaternionic chart. Inputs (u, v) in C^{2n+2} encode quaternionic vectors
// p_k = u_{2k} + u_{2k+1} j, q_k = v_{2k} + v_{2k+1} j. Gate: ||u|| = 1 and
// the four real moment conditions <p,q>_H = 0. Target constraints:
// ||z|| = ||w||, <z,w>_C = 0, I(z,w) = 0 with the adjacent-pair form.
// ---------------------------------------------------------------------------

/// Residuals, in order: | ||u||-1 |, complex part |sum conj(a)c + b conj(d)|,
/// j part |sum conj(a)d - b conj(c)|, 1/||v|| marker.
inline std::vector<double> chart_quaternionic_in_residuals(const ComplexVec& u, const ComplexVec& v) {
  double nu = std::sqrt(detail::norm2(u));
  double nv = std::sqrt(detail::norm2(v));
  std::complex<double> m1(0.0, 0.0), m2(0.0, 0.0);
  for (size_t k = 0; 2 * k + 1 < u.size(); ++k) {
    const auto a = u[2 * k], b = u[2 * k + 1], c = v[2 * k], d = v[2 * k + 1];
    m1 += std::conj(a) * c + b * std::conj(d);
    m2 += std::conj(a) * d - b * std::conj(c);
  }
  return {std::fabs(nu - 1.0), std::abs(m1), std::abs(m2), nv == 0.0 ? 1.0 : 0.0};
}

/// Residuals of the target constraints: | ||z||^2 - ||w||^2 |, |<z,w>|, |I(z,w)|.
inline std::vector<double> chart_quaternionic_out_residuals(const ComplexVec& z, const ComplexVec& w) {
  return {std::fabs(detail::norm2(z) - detail::norm2(w)), std::abs(detail::dot_herm(z, w)),
          std::abs(detail::symplectic_adjacent(z, w))};
}

/// The coordinate transformation, per quaternionic slot k (s = ||v||):
///   z_{2k}   = ( s u_{2k}        + i v_{2k}        ) / sqrt(2)
///   z_{2k+1} = (-s conj(u_{2k+1}) - i conj(v_{2k+1})) / sqrt(2)
///   w_{2k}   = ( v_{2k+1} - i s u_{2k+1} ) / sqrt(2)
///   w_{2k+1} = ( conj(v_{2k}) - i s conj(u_{2k}) ) / sqrt(2)
inline std::pair<ComplexVec, ComplexVec> chart_quaternionic(const ComplexVec& u, const ComplexVec& v,
                                                            ChartTolerances tol = {}) {
  if (u.size() != v.size() || u.size() < 4 || u.size() % 2 != 0)
    throw std::invalid_argument("chart_quaternionic: u, v must have equal even length >= 4");
  auto in_res = chart_quaternionic_in_residuals(u, v);
  if (in_res[0] > tol.in_tol || in_res[1] > tol.in_tol || in_res[2] > tol.in_tol || in_res[3] > 0.5)
    throw ChartError("chart_quaternionic: input constraints violated", in_res);
  const std::complex<double> I(0.0, 1.0);
  const double s = std::sqrt(detail::norm2(v));
  const double r2 = std::sqrt(2.0);
  ComplexVec z(u.size()), w(u.size());
  for (size_t k = 0; 2 * k + 1 < u.size(); ++k) {
    const auto a = u[2 * k], b = u[2 * k + 1], c = v[2 * k], d = v[2 * k + 1];
    z[2 * k] = (s * a + I * c) / r2;
    z[2 * k + 1] = (-s * std::conj(b) - I * std::conj(d)) / r2;
    w[2 * k] = (d - I * s * b) / r2;
    w[2 * k + 1] = (std::conj(c) - I * s * std::conj(a)) / r2;
  }
  return {std::move(z), std::move(w)};
}

// ---------------------------------------------------------------------------
// Admissible input sampling
// ---------------------------------------------------------------------------

/// Random (u, v) with ||u|| = 1, u . conj(v) = 0, v != 0.
inline std::pair<ComplexVec, ComplexVec> random_admissible_complex(SplitMix64& rng, int n) {
  const int len = n + 1;
  while (true) {
    ComplexVec u(len), v(len);
    for (int i = 0; i < len; ++i) {
      u[i] = {rng.next_sym(), rng.next_sym()};
      v[i] = {rng.next_sym(), rng.next_sym()};
    }
    double nu = std::sqrt(detail::norm2(u));
    if (nu < 0.1) continue;
    for (auto& x : u) x /= nu;
    std::complex<double> overlap = detail::dot_herm(u, v);  // sum conj(u) v
    for (int i = 0; i < len; ++i) v[i] -= overlap * u[i];
    if (detail::norm2(v) < 1e-4) continue;
    return {std::move(u), std::move(v)};
  }
}

/// Random (u, v) in C^{2n+2} with ||u|| = 1 and <p,q>_H = 0 exactly (to
/// rounding): v is projected against the four real moment gradients.
inline std::pair<ComplexVec, ComplexVec> random_admissible_quaternionic(SplitMix64& rng, int n) {
  const int len = 2 * n + 2;
  while (true) {
    ComplexVec u(len), v(len);
    for (int i = 0; i < len; ++i) {
      u[i] = {rng.next_sym(), rng.next_sym()};
      v[i] = {rng.next_sym(), rng.next_sym()};
    }
    double nu = std::sqrt(detail::norm2(u));
    if (nu < 0.1) continue;
    for (auto& x : u) x /= nu;
    // Quaternionic projection: q -= p <p,q>_H (componentwise over H).
    // <p,q>_H = (m1) + (m2) j with m1 = sum conj(a)c + b conj(d), m2 = sum conj(a)d - b conj(c).
    std::complex<double> m1(0.0, 0.0), m2(0.0, 0.0);
    for (int k = 0; 2 * k + 1 < len; ++k) {
      const auto a = u[2 * k], b = u[2 * k + 1], c = v[2 * k], d = v[2 * k + 1];
      m1 += std::conj(a) * c + b * std::conj(d);
      m2 += std::conj(a) * d - b * std::conj(c);
    }
    // p * (m1 + m2 j): per slot (a + bj)(m1 + m2 j) = (a m1 - b conj(m2)) + (a m2 + b conj(m1)) j
    for (int k = 0; 2 * k + 1 < len; ++k) {
      const auto a = u[2 * k], b = u[2 * k + 1];
      v[2 * k] -= a * m1 - b * std::conj(m2);
      v[2 * k + 1] -= a * m2 + b * std::conj(m1);
    }
    if (detail::norm2(v) < 1e-4) continue;
    return {std::move(u), std::move(v)};
  }
}

}  // namespace symspec
