#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symspec/catalog.hpp"
#include "symspec/errors.hpp"
#include "symspec/operators.hpp"
#include "symspec/polynomial.hpp"
#include "symspec/rng.hpp"
#include "symspec/spectrum.hpp"

namespace symspec {

// ---------------------------------------------------------------------------
// Variable tables
// ---------------------------------------------------------------------------

inline VarTablePtr cpn_section_vars(int n) {
  return VarTable::make_flat({{"z", n + 1}, {"w", n + 1}});
}

inline VarTablePtr cpn_restricted_vars(int n) {
  return VarTable::make_flat({{"z", n + 1}, {"zbar", n + 1}});
}

inline VarTablePtr hpn_section_vars(int n) {
  return VarTable::make_flat({{"U", 2 * n + 2}, {"V", 2 * n + 2}});
}

inline VarTablePtr hpn_restricted_vars(int n) {
  return VarTable::make_flat({{"z", n + 1}, {"w", n + 1}, {"zbar", n + 1}, {"wbar", n + 1}});
}

inline VarTablePtr sun_matrix_vars(int n) {
  return VarTable::make_matrix({{"z", n}, {"zbar", n}});
}

// ---------------------------------------------------------------------------
// Section families
// ---------------------------------------------------------------------------

namespace detail {

inline Polynomial linear_form(const VarTablePtr& vars, std::string_view family, const GaussianVec& a) {
  Polynomial acc = Polynomial::zero(vars);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    acc += Polynomial::variable(vars, family, static_cast<int>(i)) * a[i];
  }
  return acc;
}

}  // namespace detail

/// Section polynomial (a,z)^k (b,w)^k of the complex projective family.
/// Requires the exact isotropy constraint (a,b) = 0.
inline Polynomial cpn_section(const GaussianVec& a, const GaussianVec& b, long k) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("cpn_section: parameter vectors must have equal positive length");
  if (k < 1) throw std::invalid_argument("cpn_section: k must be >= 1");
  GaussianRational residual = dot_bilinear(a, b);
  if (!residual.is_zero()) throw ConstraintViolation("cpn_section: (a,b) != 0", residual);
  int n = static_cast<int>(a.size()) - 1;
  auto vars = cpn_section_vars(n);
  Polynomial az = detail::linear_form(vars, "z", a);
  Polynomial bw = detail::linear_form(vars, "w", b);
  return az.pow(static_cast<unsigned>(k)) * bw.pow(static_cast<unsigned>(k));
}

/// Pullback substitution w -> conj(z): polynomial in z, zbar.
inline Polynomial restrict_conjugate(const Polynomial& p) {
  const auto& vars = p.vars();
  const auto* fz = vars->find("z");
  const auto* fw = vars->find("w");
  if (!fz || !fw || fz->arity != fw->arity)
    throw std::invalid_argument("restrict_conjugate: requires families z, w of equal arity");
  int n = fz->arity - 1;
  auto target = cpn_restricted_vars(n);
  std::vector<Polynomial> images(vars->total(), Polynomial::zero(target));
  for (int i = 0; i <= n; ++i) {
    images[vars->slot("z", i)] = Polynomial::variable(target, "z", i);
    images[vars->slot("w", i)] = Polynomial::variable(target, "zbar", i);
  }
  return p.subst(target, images);
}

/// I(A,B) = (a,d) - (b,c) for half-split vectors A = {a,b}, B = {c,d}.
inline GaussianRational isotropy_form(const GaussianVec& A, const GaussianVec& B) {
  if (A.size() != B.size() || A.size() % 2 != 0)
    throw std::invalid_argument("isotropy_form: vectors must have equal even length");
  size_t half = A.size() / 2;
  GaussianRational acc;
  for (size_t i = 0; i < half; ++i) acc += A[i] * B[half + i] - A[half + i] * B[i];
  return acc;
}

/// l_AB(U,V) = (A,U)(B,V) - (B,U)(A,V), the quaternionic section kernel.
inline Polynomial hpn_l_ab(const GaussianVec& A, const GaussianVec& B) {
  int n = static_cast<int>(A.size()) / 2 - 1;
  auto vars = hpn_section_vars(n);
  Polynomial au = detail::linear_form(vars, "U", A);
  Polynomial bv = detail::linear_form(vars, "V", B);
  Polynomial bu = detail::linear_form(vars, "U", B);
  Polynomial av = detail::linear_form(vars, "V", A);
  return au * bv - bu * av;
}

/// Section polynomial l_AB(U,V)^k; requires I(A,B) = 0 exactly.
inline Polynomial hpn_section(const GaussianVec& A, const GaussianVec& B, long k) {
  if (A.size() != B.size() || A.size() % 2 != 0 || A.size() < 4)
    throw std::invalid_argument("hpn_section: parameters must be equal-length vectors of even arity >= 4");
  if (k < 1) throw std::invalid_argument("hpn_section: k must be >= 1");
  GaussianRational residual = isotropy_form(A, B);
  if (!residual.is_zero()) throw ConstraintViolation("hpn_section: I(A,B) != 0", residual);
  return hpn_l_ab(A, B).pow(static_cast<unsigned>(k));
}

/// Pullback substitution U = (z, w), V = jU = (wbar, -zbar).
///
/// At k = 1 the restricted sections span the quadratic right-invariant
/// harmonics; up to normalization that span is generated by
/// (a,z)(b,zbar) + (a,w)(b,wbar) and (a,z)(b,w) - (a,w)(b,z) over (a,b) = 0.
inline Polynomial hpn_restrict(const Polynomial& p) {
  const auto& vars = p.vars();
  const auto* fu = vars->find("U");
  const auto* fv = vars->find("V");
  if (!fu || !fv || fu->arity != fv->arity || fu->arity % 2 != 0)
    throw std::invalid_argument("hpn_restrict: requires families U, V of equal even arity");
  int n = fu->arity / 2 - 1;
  auto target = hpn_restricted_vars(n);
  std::vector<Polynomial> images(vars->total(), Polynomial::zero(target));
  for (int i = 0; i <= n; ++i) {
    images[vars->slot("U", i)] = Polynomial::variable(target, "z", i);
    images[vars->slot("U", n + 1 + i)] = Polynomial::variable(target, "w", i);
    images[vars->slot("V", i)] = Polynomial::variable(target, "wbar", i);
    images[vars->slot("V", n + 1 + i)] = -Polynomial::variable(target, "zbar", i);
  }
  return p.subst(target, images);
}

/// phi_a = Tr(z^T a a^T z) = sum_i (sum_j a_j z[j,i])^2 on SU(n) matrix entries.
inline Polynomial sun_phi(const GaussianVec& a, int n) {
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("sun_phi: parameter arity must be n");
  auto vars = sun_matrix_vars(n);
  Polynomial acc = Polynomial::zero(vars);
  for (int i = 0; i < n; ++i) {
    Polynomial xi = Polynomial::zero(vars);
    for (int j = 0; j < n; ++j) {
      if (a[j].is_zero()) continue;
      xi += Polynomial::variable(vars, "z", j, i) * a[j];
    }
    acc += xi * xi;
  }
  return acc;
}

/// phi~_b: the same quadratic form on the conjugate entries.
inline Polynomial sun_phi_tilde(const GaussianVec& b, int n) {
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("sun_phi_tilde: parameter arity must be n");
  auto vars = sun_matrix_vars(n);
  Polynomial acc = Polynomial::zero(vars);
  for (int i = 0; i < n; ++i) {
    Polynomial xi = Polynomial::zero(vars);
    for (int j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      xi += Polynomial::variable(vars, "zbar", j, i) * b[j];
    }
    acc += xi * xi;
  }
  return acc;
}

/// phi_a^p phi~_b^q with the exact gate (a,b) = 0.
inline Polynomial sun_family(const GaussianVec& a, const GaussianVec& b, long p, long q, int n) {
  if (p < 0 || q < 0) throw std::invalid_argument("sun_family: powers must be >= 0");
  GaussianRational residual = dot_bilinear(a, b);
  if (!residual.is_zero()) throw ConstraintViolation("sun_family: (a,b) != 0", residual);
  return sun_phi(a, n).pow(static_cast<unsigned>(p)) * sun_phi_tilde(b, n).pow(static_cast<unsigned>(q));
}

// ---------------------------------------------------------------------------
// Admissible parameter sampling: b is drawn from the exact null space of the
// pairing with a, so constraints hold with zero residual by construction.
// ---------------------------------------------------------------------------

inline std::pair<GaussianVec, GaussianVec> sample_orthogonal_pair(SplitMix64& rng, int len, long bound) {
  while (true) {
    GaussianVec a = random_gaussian_vec(rng, len, bound);
    auto basis = null_basis_of_functional(a);
    GaussianVec b(len, GaussianRational(0));
    for (const auto& v : basis) {
      GaussianRational t = random_gaussian_int(rng, bound);
      for (int i = 0; i < len; ++i) b[i] += t * v[i];
    }
    bool bz = std::all_of(b.begin(), b.end(), [](const GaussianRational& x) { return x.is_zero(); });
    if (!bz) return {std::move(a), std::move(b)};
  }
}

/// (A, B) with I(A,B) = 0 exactly, arity 2n+2 each.
inline std::pair<GaussianVec, GaussianVec> sample_isotropic_pair(SplitMix64& rng, int n, long bound) {
  int len = 2 * n + 2;
  while (true) {
    GaussianVec A = random_gaussian_vec(rng, len, bound);
    // I(A,B) = sum_j g_j B_j with g = (-A_half.., A_first..)
    GaussianVec g(len);
    for (int i = 0; i <= n; ++i) {
      g[i] = -A[n + 1 + i];
      g[n + 1 + i] = A[i];
    }
    auto basis = null_basis_of_functional(g);
    GaussianVec B(len, GaussianRational(0));
    for (const auto& v : basis) {
      GaussianRational t = random_gaussian_int(rng, bound);
      for (int i = 0; i < len; ++i) B[i] += t * v[i];
    }
    bool bz = std::all_of(B.begin(), B.end(), [](const GaussianRational& x) { return x.is_zero(); });
    if (!bz) return {std::move(A), std::move(B)};
  }
}

// ---------------------------------------------------------------------------
// Family verification
// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::string space_id;
  std::string level;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

namespace detail {

inline void sort_checks(VerificationReport& report) {
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

inline Polynomial mixed_laplacian(const Polynomial& p, int n) {
  Polynomial acc = Polynomial::zero(p.vars());
  for (int i = 0; i <= n; ++i) acc += p.derive("z", i).derive("w", i);
  return acc;
}

inline Polynomial euclidean_laplacian_zzbar(const Polynomial& p, int n) {
  Polynomial acc = Polynomial::zero(p.vars());
  for (int i = 0; i <= n; ++i) acc += p.derive("z", i).derive("zbar", i);
  return acc * GaussianRational(4);
}

/// Generators per the oversampling policy: five times the target dimension.
inline int generator_count(const Integer& target) {
  return 5 * static_cast<int>(target.get_si());
}

}  // namespace detail

/// Build the restricted generator family used for the span-rank certificates.
inline std::vector<Polynomial> cpn_restricted_family(int n, long k, int count, uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Polynomial> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    auto [a, b] = sample_orthogonal_pair(rng, n + 1, 3);
    out.push_back(restrict_conjugate(cpn_section(a, b, k)));
  }
  return out;
}

inline std::vector<Polynomial> hpn_restricted_family(int n, long k, int count, uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Polynomial> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    auto [A, B] = sample_isotropic_pair(rng, n, 3);
    Polynomial l = hpn_l_ab(A, B);
    if (l.is_zero()) continue;  // degenerate draw (B proportional to A)
    out.push_back(hpn_restrict(l.pow(static_cast<unsigned>(k))));
  }
  return out;
}

inline std::vector<Polynomial> sun_family_samples(int n, long p, long q, int count, uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Polynomial> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    auto [a, b] = sample_orthogonal_pair(rng, n, 3);
    Polynomial f = sun_family(a, b, p, q, n);
    if (f.is_zero()) continue;
    out.push_back(std::move(f));
  }
  return out;
}

/// Constraint gate + exact annihilation identities + span-rank-vs-multiplicity
/// for the CP^n and HP^n families. SU(3)/SO(3) verification (which also runs
/// the group-differential checks) lives in lie_diff.hpp.
inline VerificationReport verify_family(const SymmetricSpaceDescriptor& space, long k,
                                        uint64_t seed = 1) {
  VerificationReport report;
  report.space_id = space.id;
  report.level = "k=" + std::to_string(k);
  const int n = space.n;

  if (space.id != "CP^n" && space.id != "HP^n")
    throw std::invalid_argument("verify_family: no explicit polynomial family for " + space.id);
  if (k < 0) throw std::invalid_argument("verify_family: k must be >= 0");

  if (k == 0) {  // constants
    report.checks.push_back({"span_rank_vs_multiplicity",
                             true,
                             "rank 1 (constant family) == multiplicity 1"});
    detail::sort_checks(report);
    return report;
  }

  Integer target = multiplicity_closed(space, k);
  int count = detail::generator_count(target);

  // Constraint gate: a violating parameter pair must be rejected.
  {
    bool rejected = false;
    GaussianVec a(space.id == "CP^n" ? n + 1 : 2 * n + 2, GaussianRational(0));
    GaussianVec b = a;
    a[0] = GaussianRational(1);
    b[0] = GaussianRational(1);
    if (space.id == "HP^n") {
      // I(A,B) = 1 for A = e_0, B = e_{n+1}
      b[0] = GaussianRational(0);
      b[n + 1] = GaussianRational(1);
    }
    try {
      if (space.id == "CP^n")
        cpn_section(a, b, k);
      else
        hpn_section(a, b, k);
    } catch (const ConstraintViolation& e) {
      rejected = !e.residual().is_zero();
    }
    report.checks.push_back({"constraint_gate", rejected, "violating parameters rejected with residual"});
  }

  std::vector<Polynomial> family;
  if (space.id == "CP^n") {
    SplitMix64 rng(seed);
    std::vector<Polynomial> sections;
    for (int i = 0; i < count; ++i) {
      auto [a, b] = sample_orthogonal_pair(rng, n + 1, 3);
      sections.push_back(cpn_section(a, b, k));
    }
    bool annihilated = std::all_of(sections.begin(), sections.end(), [&](const Polynomial& s) {
      return detail::mixed_laplacian(s, n).is_zero();
    });
    report.checks.push_back(
        {"mixed_laplacian_annihilation", annihilated, "sum d^2/dz_i dw_i kills every section, exactly"});

    for (const auto& s : sections) family.push_back(restrict_conjugate(s));
    bool harmonic = std::all_of(family.begin(), family.end(), [&](const Polynomial& f) {
      return detail::euclidean_laplacian_zzbar(f, n).is_zero();
    });
    report.checks.push_back(
        {"restriction_harmonic", harmonic, "4 sum d^2/dz_i dzbar_i kills every restriction, exactly"});
  } else {
    SplitMix64 rng(seed);
    std::vector<Polynomial> sections;
    while (static_cast<int>(sections.size()) < count) {
      auto [A, B] = sample_isotropic_pair(rng, n, 3);
      Polynomial l = hpn_l_ab(A, B);
      if (l.is_zero()) continue;
      sections.push_back(l.pow(static_cast<unsigned>(k)));
    }
    bool annihilated = std::all_of(sections.begin(), sections.end(), [&](const Polynomial& s) {
      return apply_box(s, n).is_zero();
    });
    report.checks.push_back({"box_annihilation", annihilated, "box operator kills every section, exactly"});
    for (const auto& s : sections) family.push_back(hpn_restrict(s));
  }

  int r = span_rank(family, seed);
  {
    std::ostringstream msg;
    msg << "span rank " << r << " vs multiplicity " << target.get_str();
    report.checks.push_back({"span_rank_vs_multiplicity", Integer(r) == target, msg.str()});
  }
  detail::sort_checks(report);
  return report;
}

}  // namespace symspec
