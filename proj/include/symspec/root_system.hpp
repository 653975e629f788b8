#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symspec/linalg.hpp"
#include "symspec/rational.hpp"

namespace symspec {

enum class Family { A, B, C, D, F4 };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::F4: return "F4";
  }
  return "?";
}

inline Family family_from_name(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "F4") return Family::F4;
  throw std::invalid_argument("unknown root-system family '" + s + "'");
}

/// Finite root system in its standard ambient realization. Positive roots are
/// generated from the simple ones by reflection closure, which doubles as a
/// consistency check against the classical counts.
struct RootSystem {
  Family family;
  int rank;
  std::vector<RationalVec> simple_roots;
  std::vector<RationalVec> positive_roots;
  /// Expansion of each positive root over the simple roots (nonnegative integers).
  std::vector<std::vector<long>> positive_coeffs;
  std::vector<RationalVec> fundamental;

  int ambient_dim() const { return static_cast<int>(simple_roots.at(0).size()); }
};

/// Dominant integral weight, stored in both bases the formulas need.
struct Weight {
  std::vector<long> coeffs;  // fundamental-weight coordinates, all >= 0
  RationalVec ambient;
};

namespace detail {

inline std::vector<RationalVec> simple_roots_for(Family family, int rank) {
  auto e = [&](int i, int dim) {
    RationalVec v(dim, Rational(0));
    v[i] = 1;
    return v;
  };
  std::vector<RationalVec> roots;
  switch (family) {
    case Family::A: {
      if (rank < 1) throw std::invalid_argument("family A requires rank >= 1");
      int dim = rank + 1;
      for (int i = 0; i < rank; ++i) {
        RationalVec v(dim, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
      }
      break;
    }
    case Family::B: {
      if (rank < 1) throw std::invalid_argument("family B requires rank >= 1");
      for (int i = 0; i + 1 < rank; ++i) {
        RationalVec v(rank, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
      }
      roots.push_back(e(rank - 1, rank));
      break;
    }
    case Family::C: {
      if (rank < 1) throw std::invalid_argument("family C requires rank >= 1");
      for (int i = 0; i + 1 < rank; ++i) {
        RationalVec v(rank, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
      }
      roots.push_back(scale(e(rank - 1, rank), Rational(2)));
      break;
    }
    case Family::D: {
      // D_2 is the reducible {e1-e2, e1+e2} system; it backs the so(4) entry
      // of the sphere catalog, so rank 2 is accepted here.
      if (rank < 2) throw std::invalid_argument("family D requires rank >= 2");
      for (int i = 0; i + 1 < rank; ++i) {
        RationalVec v(rank, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
      }
      RationalVec v(rank, Rational(0));
      v[rank - 2] = 1;
      v[rank - 1] = 1;
      roots.push_back(v);
      break;
    }
    case Family::F4: {
      if (rank != 4) throw std::invalid_argument("family F4 requires rank 4");
      RationalVec a1(4, Rational(0)), a2(4, Rational(0)), a3(4, Rational(0)), a4(4, Rational(0));
      a1[1] = 1;
      a1[2] = -1;
      a2[2] = 1;
      a2[3] = -1;
      a3[3] = 1;
      a4[0] = make_rational(1, 2);
      a4[1] = make_rational(-1, 2);
      a4[2] = make_rational(-1, 2);
      a4[3] = make_rational(-1, 2);
      roots = {a1, a2, a3, a4};
      break;
    }
  }
  return roots;
}

inline size_t classical_positive_count(Family family, int rank) {
  switch (family) {
    case Family::A: return static_cast<size_t>(rank) * (rank + 1) / 2;
    case Family::B:
    case Family::C: return static_cast<size_t>(rank) * rank;
    case Family::D: return static_cast<size_t>(rank) * (rank - 1);
    case Family::F4: return 24;
  }
  return 0;
}

}  // namespace detail

/// Standard ambient realization of A_n, B_n, C_n, D_n (n >= 2), F_4.
inline RootSystem build_root_system(Family family, int rank) {
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.simple_roots = detail::simple_roots_for(family, rank);

  // Cartan integers 2<b,a_i>/<a_i,a_i> for reflection closure.
  std::vector<Rational> simple_norms;
  for (const auto& a : rs.simple_roots) simple_norms.push_back(dot(a, a));

  // Closure of the simple roots under simple reflections, restricted to the
  // positive cone (all expansion coefficients >= 0).
  std::map<std::vector<long>, RationalVec> positives;
  std::vector<std::pair<std::vector<long>, RationalVec>> frontier;
  for (int i = 0; i < rank; ++i) {
    std::vector<long> c(rank, 0);
    c[i] = 1;
    positives.emplace(c, rs.simple_roots[i]);
    frontier.emplace_back(c, rs.simple_roots[i]);
  }
  while (!frontier.empty()) {
    auto [c, v] = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < rank; ++i) {
      Rational pairing = Rational(2) * dot(v, rs.simple_roots[i]) / simple_norms[i];
      if (!is_integer(pairing))
        throw std::logic_error("root reflection produced a non-integer Cartan pairing");
      long n = pairing.get_num().get_si();
      if (n == 0) continue;
      std::vector<long> c2 = c;
      c2[i] -= n;
      bool nonneg = true, nonzero = false;
      for (long x : c2) {
        if (x < 0) nonneg = false;
        if (x != 0) nonzero = true;
      }
      if (!nonneg || !nonzero) continue;
      if (positives.count(c2)) continue;
      RationalVec v2 = sub(v, scale(rs.simple_roots[i], pairing));
      positives.emplace(c2, v2);
      frontier.emplace_back(c2, v2);
    }
  }

  if (positives.size() != detail::classical_positive_count(family, rank))
    throw std::logic_error("positive-root closure does not match the classical count for " +
                           family_name(family) + std::to_string(rank));

  for (auto& [c, v] : positives) {
    rs.positive_coeffs.push_back(c);
    rs.positive_roots.push_back(v);
  }

  // Fundamental weights: solve sum_j c_ij * 2<a_j,a_m>/<a_m,a_m> = delta_im.
  RationalMatrix k(rank, RationalVec(rank, Rational(0)));
  for (int j = 0; j < rank; ++j)
    for (int m = 0; m < rank; ++m)
      k[j][m] = Rational(2) * dot(rs.simple_roots[j], rs.simple_roots[m]) / simple_norms[m];
  RationalMatrix cmat = invert(k);  // row i = coordinates of w_i over the simple roots
  for (int i = 0; i < rank; ++i) {
    RationalVec w(rs.ambient_dim(), Rational(0));
    for (int j = 0; j < rank; ++j) w = add(w, scale(rs.simple_roots[j], cmat[i][j]));
    rs.fundamental.push_back(w);
  }
  return rs;
}

inline RootSystem build_root_system(const std::string& family, int rank) {
  return build_root_system(family_from_name(family), rank);
}

/// Half sum of the positive roots.
inline RationalVec rho(const RootSystem& rs) {
  RationalVec acc(rs.ambient_dim(), Rational(0));
  for (const auto& r : rs.positive_roots) acc = add(acc, r);
  return scale(acc, make_rational(1, 2));
}

inline const std::vector<RationalVec>& fundamental_weights(const RootSystem& rs) {
  return rs.fundamental;
}

/// Weight from fundamental-weight coordinates.
inline Weight weight_from_coeffs(const RootSystem& rs, std::vector<long> coeffs) {
  if (static_cast<int>(coeffs.size()) != rs.rank)
    throw std::invalid_argument("weight_from_coeffs: wrong number of coordinates");
  RationalVec ambient(rs.ambient_dim(), Rational(0));
  for (int i = 0; i < rs.rank; ++i) ambient = add(ambient, scale(rs.fundamental[i], Rational(coeffs[i])));
  return Weight{std::move(coeffs), std::move(ambient)};
}

/// Weight from an ambient vector; requires integral nonnegative pairings
/// against every simple root (i.e. a dominant integral weight).
inline Weight weight_from_ambient(const RootSystem& rs, RationalVec ambient) {
  std::vector<long> coeffs(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    Rational p = Rational(2) * dot(ambient, rs.simple_roots[i]) / dot(rs.simple_roots[i], rs.simple_roots[i]);
    if (!is_integer(p) || sgn(p) < 0)
      throw std::invalid_argument("weight_from_ambient: vector is not dominant integral");
    coeffs[i] = p.get_num().get_si();
  }
  return Weight{std::move(coeffs), std::move(ambient)};
}

inline bool is_dominant(const Weight& w) {
  return std::all_of(w.coeffs.begin(), w.coeffs.end(), [](long c) { return c >= 0; });
}

/// Weyl dimension formula: prod_{a>0} <lam+rho,a>/<rho,a>, exact.
inline Integer weyl_dim(const RootSystem& rs, const Weight& lam) {
  if (!is_dominant(lam)) throw std::domain_error("weyl_dim: weight is not dominant");
  RationalVec r = rho(rs);
  RationalVec lam_rho = add(lam.ambient, r);
  Rational prod(1);
  for (const auto& a : rs.positive_roots) prod *= dot(lam_rho, a) / dot(r, a);
  if (!is_integer(prod)) throw std::logic_error("weyl_dim: non-integer dimension");
  return prod.get_num();
}

/// Spherical ("even") weight test: <lam,a>/<a,a> must be a nonnegative
/// integer for every positive restricted root a.
inline bool cartan_helgason_even(const RootSystem& restricted, const Weight& lam) {
  if (!is_dominant(lam)) throw std::domain_error("cartan_helgason_even: weight is not dominant");
  for (const auto& a : restricted.positive_roots) {
    Rational q = dot(lam.ambient, a) / dot(a, a);
    if (!is_integer(q) || sgn(q) < 0) return false;
  }
  return true;
}

}  // namespace symspec
