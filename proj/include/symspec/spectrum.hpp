#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symspec/catalog.hpp"
#include "symspec/rational.hpp"
#include "symspec/root_system.hpp"

namespace symspec {

/// One spectrum row of a rank-one space.
struct SpectralLine {
  long k = 0;
  Rational energy;      // c_k = (N_M + 2k)^2 / 2
  Rational eigenvalue;  // unit-metric Laplace eigenvalue
  Integer multiplicity;
  Weight weight;
};

namespace detail {

inline void require_rank_one(const SymmetricSpaceDescriptor& space, const char* op) {
  if (space.rank() != 1)
    throw std::domain_error(std::string(op) + ": " + space.id +
                            " has rank > 1; use the su3_* operations instead");
}

}  // namespace detail

/// Quantized energy level c_k = (N_M + 2k)^2 / 2.
inline Rational energy_level(const SymmetricSpaceDescriptor& space, long k) {
  detail::require_rank_one(space, "energy_level");
  if (k < 0) throw std::invalid_argument("energy_level: k must be >= 0");
  Rational base(space.N_M + 2 * k);
  return base * base / 2;
}

/// Unit-metric Laplace-Beltrami eigenvalue ((N_M + 2k)^2 - N_M^2) / sigma.
inline Rational laplace_eigenvalue(const SymmetricSpaceDescriptor& space, long k) {
  detail::require_rank_one(space, "laplace_eigenvalue");
  if (k < 0) throw std::invalid_argument("laplace_eigenvalue: k must be >= 0");
  Rational base(space.N_M + 2 * k);
  Rational nm(space.N_M);
  return (base * base - nm * nm) / space.sigma;
}

/// Closed-form multiplicities for S^n, CP^n, HP^n.
inline Integer multiplicity_closed(const SymmetricSpaceDescriptor& space, long k) {
  if (k < 0) throw std::invalid_argument("multiplicity_closed: k must be >= 0");
  const long n = space.n;
  if (space.id == "S^n") {
    // harmonic polynomial count
    return binomial(n + k, k) - binomial(n + k - 2, k - 2);
  }
  if (space.id == "CP^n") {
    Integer a = binomial(n + k, k);
    Integer b = binomial(n + k - 1, k - 1);
    return a * a - b * b;
  }
  if (space.id == "HP^n") {
    Rational m = Rational(2 * n + 2 * k + 1) / Rational((k + 1) * (2 * n + 1));
    Rational prod = m * Rational(binomial(2 * n + k, k)) * Rational(binomial(2 * n + k - 1, k));
    if (!is_integer(prod)) throw std::logic_error("multiplicity_closed: non-integer HP^n value");
    return prod.get_num();
  }
  throw std::domain_error("multiplicity_closed: no closed form for " + space.id +
                          "; use multiplicity_weyl");
}

/// Weyl-dimension multiplicity dim L(highest_weight(k)).
inline Integer multiplicity_weyl(const SymmetricSpaceDescriptor& space, long k) {
  if (k < 0) throw std::invalid_argument("multiplicity_weyl: k must be >= 0");
  return weyl_dim(space.group(), space.highest_weight(k));
}

inline Integer multiplicity_weyl(const SymmetricSpaceDescriptor& space, long k1, long k2) {
  return weyl_dim(space.group(), space.highest_weight(k1, k2));
}

/// SU(3)/SO(3) eigenvalue data evaluated from the quadratic form
/// 6 (x^2 - xy + y^2) at x = k1+1, y = k2+1.
struct Su3Eigenvalue {
  Integer norm_value;   // squared norm of the shifted weight
  Rational eigenvalue;  // norm_value minus the form at x = y = 1
  bool dominant;        // strict dominance k1 < 2 k2 < 4 k1
};

inline Su3Eigenvalue su3_eigenvalue(long k1, long k2) {
  Integer x(k1 + 1), y(k2 + 1);
  Integer norm = 6 * (x * x - x * y + y * y);
  bool dominant = (k1 < 2 * k2) && (2 * k2 < 4 * k1);
  return Su3Eigenvalue{norm, Rational(norm - 6), dominant};
}

/// The same quadratic form on rational weight coordinates; used to compare
/// Casimir eigenvalues of weights that sit off the integer (k1, k2) grid.
inline Rational su3_form_eigenvalue(const Rational& k1, const Rational& k2) {
  Rational x = k1 + 1, y = k2 + 1;
  return 6 * (x * x - x * y + y * y) - 6;
}

/// All strictly dominant solutions of x^2 - xy + y^2 = Q, x = k1+1, y = k2+1.
/// The form and the dominance sector are both symmetric under swapping x, y,
/// so solutions are counted unordered and returned as k1 <= k2
/// representatives (this is the module count of the splitting).
struct SplittingSolution {
  long Q = 0;
  std::vector<std::pair<long, long>> pairs;  // lexicographically sorted, k1 <= k2
};

inline SplittingSolution splitting_count(long Q) {
  if (Q < 1) throw std::invalid_argument("splitting_count: Q must be >= 1");
  SplittingSolution sol;
  sol.Q = Q;
  // x^2 - xy + y^2 >= x^2/4 gives the provably complete bound x <= 2 sqrt(Q).
  long bound = static_cast<long>(std::ceil(2.0 * std::sqrt(static_cast<double>(Q))));
  while (bound * bound < 4 * Q) ++bound;
  for (long x = 2; x <= bound; ++x) {
    for (long y = x; y <= bound; ++y) {
      if (x * x - x * y + y * y != Q) continue;
      long k1 = x - 1, k2 = y - 1;
      if (k1 < 2 * k2 && 2 * k2 < 4 * k1) sol.pairs.emplace_back(k1, k2);
    }
  }
  return sol;
}

/// Spectrum rows k = 0..k_max for a rank-one space.
inline std::vector<SpectralLine> spectral_lines(const SymmetricSpaceDescriptor& space, long k_max) {
  detail::require_rank_one(space, "spectral_lines");
  std::vector<SpectralLine> rows;
  rows.reserve(k_max + 1);
  for (long k = 0; k <= k_max; ++k) {
    SpectralLine line;
    line.k = k;
    line.energy = energy_level(space, k);
    line.eigenvalue = laplace_eigenvalue(space, k);
    line.weight = space.highest_weight(k);
    line.multiplicity = weyl_dim(space.group(), line.weight);
    rows.push_back(std::move(line));
  }
  return rows;
}

}  // namespace symspec
