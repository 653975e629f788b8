#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "symspec/linalg.hpp"
#include "symspec/polynomial.hpp"
#include "symspec/rng.hpp"

namespace symspec {

/// The holomorphic-section operator on pairs (U, V) of arity 2n+2:
///   box = sum_i (d^2/dU_i dV_{n+1+i} - d^2/dV_i dU_{n+1+i}),  i = 0..n.
/// Its kernel picks out sections over the isotropic Grassmannian.
inline Polynomial apply_box(const Polynomial& p, int n) {
  const auto& vars = p.vars();
  const VarTable::FamilyDecl* fu = vars->find("U");
  const VarTable::FamilyDecl* fv = vars->find("V");
  if (!fu || !fv || fu->arity != 2 * n + 2 || fv->arity != 2 * n + 2)
    throw std::invalid_argument("apply_box: requires families U, V of arity 2n+2");
  Polynomial acc = Polynomial::zero(vars);
  for (int i = 0; i <= n; ++i) {
    acc += p.derive("U", i).derive("V", n + 1 + i);
    acc -= p.derive("V", i).derive("U", n + 1 + i);
  }
  return acc;
}

/// Apply p as a constant-coefficient differential operator to q (variable x_s
/// acts as d/dx_s; the bilinear form fixing the identification is the identity).
inline Polynomial apply_diff(const Polynomial& p, const Polynomial& q) {
  if (!p.vars()->same_as(*q.vars()))
    throw std::invalid_argument("apply_diff: mismatched variable families");
  Polynomial acc = Polynomial::zero(q.vars());
  for (const auto& [m, c] : p.terms()) {
    Polynomial cur = q;
    for (size_t s = 0; s < m.size() && !cur.is_zero(); ++s)
      for (int rep = 0; rep < m[s]; ++rep) cur = cur.derive_slot(static_cast<int>(s));
    acc += cur * c;
  }
  return acc;
}

/// <<p, q>> = (del(P) q)(0): only matching monomials survive, each weighted by
/// the factorial of its exponent vector. Symmetric, exact.
inline GaussianRational pairing(const Polynomial& p, const Polynomial& q) {
  if (!p.vars()->same_as(*q.vars()))
    throw std::invalid_argument("pairing: mismatched variable families");
  const Polynomial& small = p.num_terms() <= q.num_terms() ? p : q;
  const Polynomial& big = p.num_terms() <= q.num_terms() ? q : p;
  GaussianRational acc;
  for (const auto& [m, c] : small.terms()) {
    auto it = big.terms().find(m);
    if (it == big.terms().end()) continue;
    Integer fact(1);
    for (unsigned char e : m)
      if (e > 1) fact *= factorial(e);
    acc += c * it->second * GaussianRational(Rational(fact));
  }
  return acc;
}

// Rank certificates evaluate at deterministic pseudo-random points whose real
// and imaginary numerators lie in [-99, 99] with denominator 1, drawn from
// SplitMix64 seeded explicitly.

namespace detail {

/// Polynomial with coefficient denominators cleared (row scaling preserves
/// rank), ready for pure Gaussian-integer evaluation.
struct IntegerTerms {
  std::vector<std::pair<Monomial, GaussianInt>> terms;

  static IntegerTerms from(const Polynomial& p) {
    Integer lcm(1);
    for (const auto& [m, c] : p.terms()) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re.get_den().get_mpz_t());
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im.get_den().get_mpz_t());
    }
    IntegerTerms out;
    for (const auto& [m, c] : p.terms()) {
      Rational re = c.re * lcm;
      Rational im = c.im * lcm;
      out.terms.emplace_back(m, GaussianInt(re.get_num(), im.get_num()));
    }
    return out;
  }

  GaussianInt eval(const std::vector<GaussianInt>& point,
                   std::vector<std::vector<GaussianInt>>& power_cache) const {
    GaussianInt acc;
    for (const auto& [m, c] : terms) {
      GaussianInt term = c;
      for (size_t s = 0; s < m.size(); ++s) {
        if (!m[s]) continue;
        auto& cache = power_cache[s];
        if (cache.empty()) cache.push_back(GaussianInt(1));
        while (cache.size() <= m[s]) cache.push_back(cache.back() * point[s]);
        term = term * cache[m[s]];
      }
      acc = acc + term;
    }
    return acc;
  }
};

}  // namespace detail

/// Exact rank of the span of `polys`, certified by evaluation at pseudo-random
/// points. Starts at N = 2|polys| points and extends until two successive
/// rounds agree (the rank is monotone non-decreasing in N).
inline int span_rank(const std::vector<Polynomial>& polys, uint64_t sample_seed) {
  if (polys.empty()) return 0;
  const auto& vars = polys.front().vars();
  for (const auto& p : polys)
    if (!p.vars()->same_as(*vars)) throw std::invalid_argument("span_rank: mismatched variable families");

  std::vector<detail::IntegerTerms> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) rows.push_back(detail::IntegerTerms::from(p));

  SplitMix64 rng(sample_seed);
  const int P = static_cast<int>(polys.size());
  std::vector<std::vector<GaussianInt>> columns;  // columns[j][i] = polys[i](point_j)
  auto extend_to = [&](int n_points) {
    while (static_cast<int>(columns.size()) < n_points) {
      std::vector<GaussianInt> point;
      point.reserve(vars->total());
      for (int s = 0; s < vars->total(); ++s)
        point.emplace_back(Integer(rng.next_in(-99, 99)), Integer(rng.next_in(-99, 99)));
      std::vector<std::vector<GaussianInt>> power_cache(vars->total());
      std::vector<GaussianInt> col(P);
      for (int i = 0; i < P; ++i) col[i] = rows[i].eval(point, power_cache);
      columns.push_back(std::move(col));
    }
  };
  auto rank_now = [&]() {
    GaussianIntMatrix m(P, std::vector<GaussianInt>(columns.size()));
    for (size_t j = 0; j < columns.size(); ++j)
      for (int i = 0; i < P; ++i) m[i][j] = columns[j][i];
    return rank_fraction_free(std::move(m));
  };

  int n_points = 2 * P;
  extend_to(n_points);
  int r = rank_now();
  while (r < P) {
    n_points += P;
    extend_to(n_points);
    int r2 = rank_now();
    if (r2 == r) break;
    r = r2;
  }
  return r;
}

}  // namespace symspec
