#pragma once

#include <algorithm>
#include <complex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symspec/eigenfunctions.hpp"
#include "symspec/gaussian.hpp"
#include "symspec/polynomial.hpp"
#include "symspec/rng.hpp"
#include "symspec/spectrum.hpp"

namespace symspec {

using GaussianMatrixNxN = std::vector<GaussianVec>;

/// Element of su(n) (skew-Hermitian, traceless) or so(n) (real skew-symmetric).
struct LieAlgebraElement {
  int n = 0;
  GaussianMatrixNxN entries;

  static LieAlgebraElement su(int n, GaussianMatrixNxN m) {
    LieAlgebraElement x{n, std::move(m)};
    x.check_shape();
    GaussianRational trace;
    for (int i = 0; i < n; ++i) {
      trace += x.entries[i][i];
      for (int j = 0; j < n; ++j)
        if (!(x.entries[i][j] + x.entries[j][i].conj()).is_zero())
          throw std::invalid_argument("LieAlgebraElement: matrix is not skew-Hermitian");
    }
    if (!trace.is_zero()) throw std::invalid_argument("LieAlgebraElement: matrix has nonzero trace");
    return x;
  }

  static LieAlgebraElement so(int n, GaussianMatrixNxN m) {
    LieAlgebraElement x{n, std::move(m)};
    x.check_shape();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!x.entries[i][j].is_real())
          throw std::invalid_argument("LieAlgebraElement: so(n) entries must be real");
        if (!(x.entries[i][j] + x.entries[j][i]).is_zero())
          throw std::invalid_argument("LieAlgebraElement: matrix is not skew-symmetric");
      }
    return x;
  }

  void check_shape() const {
    if (static_cast<int>(entries.size()) != n)
      throw std::invalid_argument("LieAlgebraElement: wrong row count");
    for (const auto& row : entries)
      if (static_cast<int>(row.size()) != n)
        throw std::invalid_argument("LieAlgebraElement: wrong column count");
  }
};

/// g-orthogonal basis for g(Z,W) = Re Tr(Z conj(W)^T), with the squared norm
/// of each element recorded. Keeping norms separate (instead of dividing by
/// sqrt(2)) preserves exact arithmetic; the Casimir divides by them.
struct LieBasisElement {
  LieAlgebraElement X;
  Rational norm_sq;
};

inline std::vector<LieBasisElement> su_orthogonal_basis(int n) {
  std::vector<LieBasisElement> basis;
  auto zero = [&]() { return GaussianMatrixNxN(n, GaussianVec(n, GaussianRational(0))); };
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      auto m = zero();
      m[j][k] = GaussianRational(1);
      m[k][j] = GaussianRational(-1);
      basis.push_back({LieAlgebraElement::su(n, std::move(m)), Rational(2)});
      auto m2 = zero();
      m2[j][k] = gauss_i();
      m2[k][j] = gauss_i();
      basis.push_back({LieAlgebraElement::su(n, std::move(m2)), Rational(2)});
    }
  }
  for (int l = 1; l < n; ++l) {
    auto m = zero();
    for (int i = 0; i < l; ++i) m[i][i] = gauss_i();
    m[l][l] = gauss(0, -l);
    basis.push_back({LieAlgebraElement::su(n, std::move(m)), Rational(l * (l + 1))});
  }
  return basis;  // n^2 - 1 elements
}

inline std::vector<LieBasisElement> so_orthogonal_basis(int n) {
  std::vector<LieBasisElement> basis;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      GaussianMatrixNxN m(n, GaussianVec(n, GaussianRational(0)));
      m[j][k] = GaussianRational(1);
      m[k][j] = GaussianRational(-1);
      basis.push_back({LieAlgebraElement::so(n, std::move(m)), Rational(2)});
    }
  }
  return basis;  // n(n-1)/2 elements
}

/// Right-translation derivative d/dt f(z exp(tX)) at t = 0:
///   sum_ij (zX)_ij df/dz_ij + (conj(z) conj(X))_ij df/dzbar_ij, exact.
inline Polynomial lie_derivative(const LieAlgebraElement& X, const Polynomial& f) {
  const auto& vars = f.vars();
  const auto* fz = vars->find("z");
  const auto* fzb = vars->find("zbar");
  if (!fz || !fzb || fz->rows != X.n || fzb->rows != X.n)
    throw std::invalid_argument("lie_derivative: polynomial is not over size-" + std::to_string(X.n) +
                                " matrix families z, zbar");
  const int n = X.n;
  Polynomial acc = Polynomial::zero(vars);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Polynomial df = f.derive("z", i, j);
      if (!df.is_zero()) {
        Polynomial coeff = Polynomial::zero(vars);  // (zX)_ij = sum_k z_ik X_kj
        for (int k = 0; k < n; ++k) {
          if (X.entries[k][j].is_zero()) continue;
          coeff += Polynomial::variable(vars, "z", i, k) * X.entries[k][j];
        }
        acc += coeff * df;
      }
      Polynomial dfb = f.derive("zbar", i, j);
      if (!dfb.is_zero()) {
        Polynomial coeff = Polynomial::zero(vars);  // (zbar conj(X))_ij
        for (int k = 0; k < n; ++k) {
          GaussianRational xc = X.entries[k][j].conj();
          if (xc.is_zero()) continue;
          coeff += Polynomial::variable(vars, "zbar", i, k) * xc;
        }
        acc += coeff * dfb;
      }
    }
  }
  return acc;
}

/// Laplace-Beltrami operator of the bi-invariant metric, realized as
/// -sum_a L_{X_a}^2 / |X_a|^2 over a g-orthogonal basis of su(n). The sign
/// makes eigenvalues of eigenfunctions nonnegative.
inline Polynomial casimir(const Polynomial& f, int n) {
  Polynomial acc = Polynomial::zero(f.vars());
  for (const auto& [X, norm_sq] : su_orthogonal_basis(n)) {
    Polynomial second = lie_derivative(X, lie_derivative(X, f));
    acc += second * GaussianRational(Rational(-1) / norm_sq);
  }
  return acc;
}

/// Carre du champ by defect: k(f,g) = casimir(fg) - f casimir(g) - g casimir(f).
inline Polynomial carre_du_champ(const Polynomial& f, const Polynomial& g, int n) {
  return casimir(f * g, n) - f * casimir(g, n) - g * casimir(f, n);
}

/// True iff L_X f is the zero polynomial for every so(n) basis element;
/// exact vanishing in the free ring, not merely on the group.
inline bool so_invariance(const Polynomial& f, int n) {
  for (const auto& [X, norm_sq] : so_orthogonal_basis(n)) {
    (void)norm_sq;
    if (!lie_derivative(X, f).is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Numerical evaluation on the group
// ---------------------------------------------------------------------------

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

namespace detail {

inline std::complex<double> det(ComplexMatrix m) {
  const int n = static_cast<int>(m.size());
  std::complex<double> d(1.0, 0.0);
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    for (int r = c; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
    if (std::abs(m[pivot][c]) < 1e-300) return {0.0, 0.0};
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      std::complex<double> f = m[r][c] / m[c][c];
      for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return d;
}

}  // namespace detail

/// Deterministic pseudo-random special-unitary matrices. Sample 0 is the
/// identity; the rest are two-pass Gram-Schmidt orthonormalizations of random
/// complex matrices with the determinant phase pushed into the first column.
inline std::vector<ComplexMatrix> unitary_samples(int n, int count, uint64_t seed) {
  if (count < 1) throw std::invalid_argument("unitary_samples: count must be >= 1");
  std::vector<ComplexMatrix> samples;
  samples.reserve(count);
  ComplexMatrix id(n, std::vector<std::complex<double>>(n, {0.0, 0.0}));
  for (int i = 0; i < n; ++i) id[i][i] = 1.0;
  samples.push_back(id);
  SplitMix64 rng(seed);
  while (static_cast<int>(samples.size()) < count) {
    ComplexMatrix m(n, std::vector<std::complex<double>>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = {rng.next_sym(), rng.next_sym()};
    // orthonormalize columns, two passes
    for (int pass = 0; pass < 2; ++pass) {
      for (int c = 0; c < n; ++c) {
        for (int prev = 0; prev < c; ++prev) {
          std::complex<double> proj(0.0, 0.0);
          for (int r = 0; r < n; ++r) proj += std::conj(m[r][prev]) * m[r][c];
          for (int r = 0; r < n; ++r) m[r][c] -= proj * m[r][prev];
        }
        double norm = 0;
        for (int r = 0; r < n; ++r) norm += std::norm(m[r][c]);
        norm = std::sqrt(norm);
        if (norm < 1e-8) goto resample;
        for (int r = 0; r < n; ++r) m[r][c] /= norm;
      }
    }
    {
      std::complex<double> d = detail::det(m);
      for (int r = 0; r < n; ++r) m[r][0] *= std::conj(d);  // |d| = 1
      samples.push_back(std::move(m));
    }
  resample:;
  }
  return samples;
}

/// Evaluate a polynomial over matrix families z, zbar at a group element.
inline std::complex<double> eval_on_group(const Polynomial& f, const ComplexMatrix& u) {
  const auto& vars = f.vars();
  const int n = static_cast<int>(u.size());
  std::vector<std::complex<double>> point(vars->total(), {0.0, 0.0});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      point[vars->slot("z", i, j)] = u[i][j];
      point[vars->slot("zbar", i, j)] = std::conj(u[i][j]);
    }
  return f.eval(point);
}

/// Eigenvalue report for casimir(f) against f: exact ratio when f divides
/// casimir(f) in the free ring, otherwise a least-squares estimate over the
/// sample set with the worst residual.
struct EigenReport {
  std::optional<Rational> exact;  // set when casimir(f) == lambda f exactly
  double numeric = 0.0;
  double max_residual = 0.0;
};

inline EigenReport casimir_eigen_report(const Polynomial& f, int n,
                                        const std::vector<ComplexMatrix>& samples) {
  if (f.is_zero()) throw std::invalid_argument("casimir_eigen_report: zero function");
  Polynomial cf = casimir(f, n);
  EigenReport report;

  // exact path
  const auto& [m0, c0] = *f.terms().begin();
  auto it = cf.terms().find(m0);
  if (!cf.is_zero() && it != cf.terms().end()) {
    GaussianRational ratio = it->second / c0;
    if (ratio.is_real() && (cf - f * ratio).is_zero()) report.exact = ratio.re;
  } else if (cf.is_zero()) {
    report.exact = Rational(0);
  }

  std::complex<double> num(0.0, 0.0);
  double den = 0.0;
  std::vector<std::complex<double>> fv, cv;
  for (const auto& u : samples) {
    fv.push_back(eval_on_group(f, u));
    cv.push_back(eval_on_group(cf, u));
    num += cv.back() * std::conj(fv.back());
    den += std::norm(fv.back());
  }
  std::complex<double> lambda = report.exact ? std::complex<double>(to_double(*report.exact), 0.0)
                                             : (den > 0 ? num / den : std::complex<double>(0.0, 0.0));
  report.numeric = lambda.real();
  for (size_t i = 0; i < fv.size(); ++i)
    report.max_residual = std::max(report.max_residual, std::abs(cv[i] - lambda * fv[i]));
  return report;
}

// ---------------------------------------------------------------------------
// SU(3)/SO(3) family verification
// ---------------------------------------------------------------------------

/// Runs the constraint gate, exact SO(n)-invariance, on-group Casimir
/// eigen-residuals, the carre-du-champ identity, the span-rank comparison and
/// the Casimir-vs-energy normalization for the family phi_a^p phi~_b^q.
inline VerificationReport verify_family_su3(const SymmetricSpaceDescriptor& space, long p, long q,
                                            uint64_t seed = 1) {
  if (space.id != "SU3/SO3")
    throw std::invalid_argument("verify_family_su3: space must be SU3/SO3");
  if (p < 0 || q < 0 || p + q == 0)
    throw std::invalid_argument("verify_family_su3: need p, q >= 0 with p + q > 0");
  const int n = 3;
  VerificationReport report;
  report.space_id = space.id;
  report.level = "p=" + std::to_string(p) + ",q=" + std::to_string(q);

  {
    bool rejected = false;
    GaussianVec a = {gauss(1), gauss(0), gauss(0)};
    try {
      sun_family(a, a, p, q, n);
    } catch (const ConstraintViolation& e) {
      rejected = !e.residual().is_zero();
    }
    report.checks.push_back({"constraint_gate", rejected, "violating parameters rejected with residual"});
  }

  // Unit-bounded parameters keep |f| small on the group, so the double
  // precision residual checks have headroom under the 1e-9 gate.
  SplitMix64 rng(seed);
  auto [a, b] = sample_orthogonal_pair(rng, n, 1);
  Polynomial f = sun_family(a, b, p, q, n);
  while (f.is_zero()) {
    std::tie(a, b) = sample_orthogonal_pair(rng, n, 1);
    f = sun_family(a, b, p, q, n);
  }

  report.checks.push_back(
      {"so_invariance", so_invariance(f, n), "L_X f = 0 exactly for every so(3) basis element"});

  auto samples = unitary_samples(n, 200, seed + 1);
  EigenReport eig = casimir_eigen_report(f, n, samples);
  {
    std::ostringstream msg;
    msg << "max residual " << eig.max_residual << (eig.exact ? " (exact ratio)" : " (least squares)");
    report.checks.push_back({"casimir_eigen_residual", eig.max_residual < 1e-9, msg.str()});
  }

  {
    // With (a,b) = 0 the gradient pairing of phi_a and phi~_b collapses to a
    // multiple of the product: k(phi_a, phi~_b) = (8/n) phi_a phi~_b on the
    // group, the constant fixed by the Re Tr metric behind casimir().
    Polynomial phi = sun_phi(a, n);
    Polynomial phit = sun_phi_tilde(b, n);
    Polynomial k = carre_du_champ(phi, phit, n);
    Polynomial rhs = phi * phit * GaussianRational(make_rational(8, n));
    double worst = 0;
    for (const auto& u : samples)
      worst = std::max(worst, std::abs(eval_on_group(k, u) - eval_on_group(rhs, u)));
    std::ostringstream msg;
    msg << "k = (8/n) phi phi~, max residual " << worst;
    report.checks.push_back({"carre_du_champ_identity", worst < 1e-9, msg.str()});
  }

  {
    Integer target = multiplicity_weyl(space, p, q);
    auto family = sun_family_samples(n, p, q, detail::generator_count(target), seed);
    int r = span_rank(family, seed);
    std::ostringstream msg;
    msg << "span rank " << r << " vs dim L(2q L1 + 2p L2) = " << target.get_str();
    report.checks.push_back({"span_rank_vs_weyl_dim", Integer(r) == target, msg.str()});
  }

  {
    // One rational constant relates the quadratic-form eigenvalue to the
    // Casimir of the bi-invariant metric; it is fixed by (p,q) = (1,0).
    Polynomial phi = sun_phi(a, n);
    auto base = casimir_eigen_report(phi, n, samples);
    bool ok = base.exact.has_value() && sgn(*base.exact) > 0;
    std::ostringstream msg;
    if (ok) {
      Rational k1_base = make_rational(2, 3), k2_base = make_rational(4, 3);  // weight 2 L2
      Rational c = su3_form_eigenvalue(k1_base, k2_base) / *base.exact;
      Rational k1 = (Rational(4 * q + 2 * p)) / 3;
      Rational k2 = (Rational(2 * q + 4 * p)) / 3;
      Rational expected = su3_form_eigenvalue(k1, k2) / c;
      double resid = std::abs(eig.numeric - to_double(expected));
      ok = resid < 1e-6 * std::max(1.0, std::abs(to_double(expected)));
      msg << "constant " << to_string(c) << ", eigenvalue " << eig.numeric << " vs "
          << to_string(expected);
    } else {
      msg << "no exact base eigenvalue";
    }
    report.checks.push_back({"casimir_energy_normalization", ok, msg.str()});
  }

  detail::sort_checks(report);
  return report;
}

}  // namespace symspec
