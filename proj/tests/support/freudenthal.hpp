#pragma once

// Test-only dimension oracle: enumerate the dominant weights of L(lambda),
// compute their multiplicities with Freudenthal's recursion, and sum over
// Weyl orbits. Independent of weyl_dim (which is a closed-form product).

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "symspec/root_system.hpp"

namespace symspec::testing {

namespace detail {

inline std::vector<long> pairing_coords(const RootSystem& rs, const RationalVec& v) {
  std::vector<long> out(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    Rational p = Rational(2) * dot(v, rs.simple_roots[i]) / dot(rs.simple_roots[i], rs.simple_roots[i]);
    if (!is_integer(p)) throw std::logic_error("freudenthal: non-integral weight encountered");
    out[i] = p.get_num().get_si();
  }
  return out;
}

/// Reflect to the dominant chamber; multiplicities are Weyl-invariant.
inline RationalVec dominant_rep(const RootSystem& rs, RationalVec v) {
  while (true) {
    bool moved = false;
    for (int i = 0; i < rs.rank; ++i) {
      Rational p =
          Rational(2) * dot(v, rs.simple_roots[i]) / dot(rs.simple_roots[i], rs.simple_roots[i]);
      if (sgn(p) < 0) {
        v = sub(v, scale(rs.simple_roots[i], p));
        moved = true;
      }
    }
    if (!moved) return v;
  }
}

/// Expansion of a root-lattice-cone vector over the simple roots (exact,
/// via normal equations; the simple roots are linearly independent).
inline std::vector<Rational> cone_coords(const RootSystem& rs, const RationalVec& v) {
  const int r = rs.rank;
  RationalMatrix gram(r, RationalVec(r));
  RationalVec rhs(r);
  for (int i = 0; i < r; ++i) {
    rhs[i] = dot(rs.simple_roots[i], v);
    for (int j = 0; j < r; ++j) gram[i][j] = dot(rs.simple_roots[i], rs.simple_roots[j]);
  }
  RationalMatrix inv = invert(gram);
  std::vector<Rational> x(r, Rational(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) x[i] += inv[i][j] * rhs[j];
  return x;
}

/// Order of the Weyl group of one connected subdiagram component.
inline Integer component_order(const RootSystem& rs, const std::vector<int>& nodes) {
  const size_t k = nodes.size();
  auto connected = [&](int a, int b) { return sgn(dot(rs.simple_roots[a], rs.simple_roots[b])) != 0; };
  if (rs.family == Family::F4 && k == 4) return 1152;
  bool fork = false, mixed_lengths = false;
  for (int a : nodes) {
    int neighbors = 0;
    for (int b : nodes)
      if (a != b && connected(a, b)) ++neighbors;
    if (neighbors >= 3) fork = true;
    for (int b : nodes)
      if (a != b && connected(a, b) &&
          dot(rs.simple_roots[a], rs.simple_roots[a]) != dot(rs.simple_roots[b], rs.simple_roots[b]))
        mixed_lengths = true;
  }
  if (fork) {
    Integer out = factorial(k);
    for (size_t i = 0; i + 1 < k; ++i) out *= 2;
    return out;  // D_k: 2^(k-1) k!
  }
  if (mixed_lengths) {
    Integer out = factorial(k);
    for (size_t i = 0; i < k; ++i) out *= 2;
    return out;  // B_k / C_k: 2^k k!
  }
  return factorial(k + 1);  // A_k
}

inline Integer subdiagram_group_order(const RootSystem& rs, const std::vector<int>& nodes) {
  std::vector<bool> seen(nodes.size(), false);
  auto connected = [&](int a, int b) { return sgn(dot(rs.simple_roots[a], rs.simple_roots[b])) != 0; };
  Integer order(1);
  for (size_t s = 0; s < nodes.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp = {nodes[s]};
    seen[s] = true;
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t t = 0; t < nodes.size(); ++t)
        if (!seen[t] && connected(comp[i], nodes[t])) {
          seen[t] = true;
          comp.push_back(nodes[t]);
        }
    order *= component_order(rs, comp);
  }
  return order;
}

inline Integer weyl_group_order(const RootSystem& rs) {
  std::vector<int> all(rs.rank);
  for (int i = 0; i < rs.rank; ++i) all[i] = i;
  return subdiagram_group_order(rs, all);
}

/// |W . mu| = |W| / |W_mu| for dominant mu; the stabilizer is generated by the
/// simple reflections orthogonal to mu.
inline Integer orbit_size(const RootSystem& rs, const RationalVec& mu, const Integer& group_order) {
  std::vector<int> zero_nodes;
  for (int i = 0; i < rs.rank; ++i)
    if (sgn(dot(mu, rs.simple_roots[i])) == 0) zero_nodes.push_back(i);
  Integer stab = subdiagram_group_order(rs, zero_nodes);
  Integer orbit = group_order / stab;
  if (orbit * stab != group_order) throw std::logic_error("freudenthal: orbit size not integral");
  return orbit;
}

}  // namespace detail

/// dim L(lambda) by dominant-weight enumeration + Freudenthal multiplicities.
inline Integer freudenthal_dimension(const RootSystem& rs, const Weight& lambda) {
  const RationalVec r = rho(rs);
  const RationalVec lam_rho = add(lambda.ambient, r);
  const Rational bound = dot(lam_rho, lam_rho);

  // Every weight mu of L(lambda) satisfies w0.lambda <= mu <= lambda in the
  // simple-root cone order, so the cone coefficients of lambda - mu live in
  // the box bounded by the coefficients of lambda + (-lambda reflected
  // dominant). Enumerate that box exactly.
  RationalVec lambda_dual = detail::dominant_rep(rs, scale(lambda.ambient, Rational(-1)));
  std::vector<Rational> box = detail::cone_coords(rs, add(lambda.ambient, lambda_dual));
  std::vector<long> box_max(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    if (sgn(box[i]) < 0) throw std::logic_error("freudenthal: negative box bound");
    box_max[i] = static_cast<long>(box[i].get_d() + 1.5);
  }

  struct Entry {
    std::vector<long> cone;
    RationalVec mu;
    long height;
  };
  std::vector<Entry> dominants;
  std::vector<long> c(rs.rank, 0);
  while (true) {
    RationalVec mu = lambda.ambient;
    long height = 0;
    for (int i = 0; i < rs.rank; ++i) {
      if (c[i]) mu = sub(mu, scale(rs.simple_roots[i], Rational(c[i])));
      height += c[i];
    }
    bool dominant = true;
    for (int i = 0; i < rs.rank && dominant; ++i)
      if (sgn(dot(mu, rs.simple_roots[i])) < 0) dominant = false;
    if (dominant) {
      RationalVec mu_rho = add(mu, r);
      if (dot(mu_rho, mu_rho) <= bound) dominants.push_back({c, mu, height});
    }
    int pos = 0;
    while (pos < rs.rank) {
      if (++c[pos] <= box_max[pos]) break;
      c[pos] = 0;
      ++pos;
    }
    if (pos == rs.rank) break;
  }
  std::sort(dominants.begin(), dominants.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.cone < b.cone;
  });

  std::map<std::vector<long>, Integer> mult;  // keyed by pairing coords of dominant mu
  auto key_of = [&](const RationalVec& mu) { return detail::pairing_coords(rs, mu); };
  mult[key_of(lambda.ambient)] = 1;

  for (const auto& entry : dominants) {
    if (entry.height == 0) continue;  // lambda itself
    const RationalVec& mu = entry.mu;
    RationalVec mu_rho = add(mu, r);
    Rational denom = bound - dot(mu_rho, mu_rho);
    if (sgn(denom) <= 0) throw std::logic_error("freudenthal: vanishing denominator");
    Rational rhs(0);
    for (size_t ai = 0; ai < rs.positive_roots.size(); ++ai) {
      const RationalVec& alpha = rs.positive_roots[ai];
      const std::vector<long>& acoeff = rs.positive_coeffs[ai];
      // mu + j alpha leaves the cone box once any coefficient of
      // lambda - (mu + j alpha) would go negative.
      long jmax = -1;  // -1: unbounded (cannot happen: acoeff != 0)
      for (int i = 0; i < rs.rank; ++i) {
        if (acoeff[i] == 0) continue;
        long allowed = entry.cone[i] / acoeff[i];
        jmax = (jmax < 0) ? allowed : std::min(jmax, allowed);
      }
      for (long j = 1; j <= jmax; ++j) {
        RationalVec nu = add(mu, scale(alpha, Rational(j)));
        RationalVec dom = detail::dominant_rep(rs, nu);
        auto it = mult.find(key_of(dom));
        if (it != mult.end()) rhs += Rational(it->second) * dot(nu, alpha);
      }
    }
    Rational m = Rational(2) * rhs / denom;
    if (!is_integer(m) || sgn(m) < 0) throw std::logic_error("freudenthal: non-integral multiplicity");
    if (sgn(m) > 0) mult[key_of(mu)] = m.get_num();
  }

  Integer group_order = detail::weyl_group_order(rs);
  Integer dim(0);
  for (const auto& entry : dominants) {
    auto it = mult.find(key_of(entry.mu));
    if (it == mult.end()) continue;
    dim += it->second * detail::orbit_size(rs, entry.mu, group_order);
  }
  return dim;
}

}  // namespace symspec::testing
