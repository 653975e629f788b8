#include <catch2/catch.hpp>

#include "symspec/eigenfunctions.hpp"
#include "symspec/operators.hpp"
#include "symspec/polynomial.hpp"

using namespace symspec;

namespace {

Polynomial var(const VarTablePtr& t, const char* fam, int i) { return Polynomial::variable(t, fam, i); }

Polynomial variable_by_slot(const VarTablePtr& t, int slot) {
  int off = 0;
  for (const auto& f : t->families()) {
    if (slot < off + f.arity) return Polynomial::variable(t, f.name, slot - off);
    off += f.arity;
  }
  throw std::logic_error("slot out of range");
}

/// Random polynomial with small Gaussian-integer coefficients.
Polynomial random_poly(const VarTablePtr& t, SplitMix64& rng, int max_degree, int n_terms) {
  Polynomial acc = Polynomial::zero(t);
  for (int i = 0; i < n_terms; ++i) {
    Polynomial term = Polynomial::constant(t, random_gaussian_int(rng, 4));
    int deg = static_cast<int>(rng.next_in(0, max_degree));
    for (int d = 0; d < deg; ++d)
      term = term * variable_by_slot(t, static_cast<int>(rng.next_in(0, t->total() - 1)));
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
  auto t = VarTable::make_flat({{"z", 2}, {"w", 2}});
  Polynomial z0 = var(t, "z", 0), w0 = var(t, "w", 0);

  SECTION("(z0 + w0)(z0 - w0) = z0^2 - w0^2") {
    Polynomial lhs = (z0 + w0) * (z0 - w0);
    Polynomial rhs = z0 * z0 - w0 * w0;
    CHECK(lhs == rhs);
  }
  SECTION("pow(z0, 0) = 1") {
    CHECK(z0.pow(0) == Polynomial::constant(t, GaussianRational(1)));
  }
  SECTION("((1,i),z)^2 = z0^2 + 2i z0 z1 - z1^2") {
    Polynomial z1 = var(t, "z", 1);
    Polynomial form = z0 + z1 * gauss_i();
    Polynomial sq = form.pow(2);
    Polynomial expected = z0 * z0 + z0 * z1 * gauss(0, 2) - z1 * z1;
    CHECK(sq == expected);
  }
  SECTION("mismatched variable families are rejected") {
    auto t2 = VarTable::make_flat({{"z", 3}});
    CHECK_THROWS_AS(z0 + var(t2, "z", 0), std::invalid_argument);
    CHECK_THROWS_AS(z0 * var(t2, "z", 0), std::invalid_argument);
  }
}

TEST_CASE("derivatives") {
  auto t = VarTable::make_flat({{"z", 2}, {"w", 2}});
  Polynomial z0 = var(t, "z", 0), w1 = var(t, "w", 1);

  SECTION("d/dz0 (z0^2 w1) = 2 z0 w1") {
    CHECK((z0 * z0 * w1).derive("z", 0) == z0 * w1 * gauss(2));
  }
  SECTION("derivative of a constant is zero") {
    CHECK(Polynomial::constant(t, gauss(5, -2)).derive("z", 1).is_zero());
  }
  SECTION("unknown variable rejected") {
    CHECK_THROWS_AS(z0.derive("y", 0), std::invalid_argument);
    CHECK_THROWS_AS(z0.derive("z", 7), std::out_of_range);
  }
  SECTION("symbolic derivative matches the t-substitution oracle at random points") {
    // oracle: g(s) = p(P + s e_x), derivative at 0 = linear coefficient of g
    SplitMix64 rng(99);
    auto ts = VarTable::make_flat({{"t", 1}});
    Polynomial p = random_poly(t, rng, 3, 3);
    for (int trial = 0; trial < 5; ++trial) {
      GaussianVec point;
      for (int i = 0; i < t->total(); ++i) point.push_back(random_gaussian_int(rng, 9));
      for (int slot = 0; slot < t->total(); ++slot) {
        std::vector<Polynomial> images;
        for (int j = 0; j < t->total(); ++j) {
          Polynomial img = Polynomial::constant(ts, point[j]);
          if (j == slot) img += Polynomial::variable(ts, "t", 0);
          images.push_back(img);
        }
        Polynomial g = p.subst(ts, images);
        // linear coefficient of g
        Monomial lin(1, 1);
        auto it = g.terms().find(lin);
        GaussianRational oracle = it == g.terms().end() ? GaussianRational(0) : it->second;
        CHECK(p.derive_slot(slot).eval(point) == oracle);
      }
    }
  }
}

TEST_CASE("box operator") {
  const int n = 1;
  SECTION("box(l_AB) = 2 I(A,B) for concrete parameters") {
    // A = (1,0,i,0), B = (0,1,0,2): I(A,B) = (a,d) - (b,c) = 2i - 0... compute
    GaussianVec A = {gauss(1), gauss(0), gauss(0, 1), gauss(0)};
    GaussianVec B = {gauss(0), gauss(1), gauss(0), gauss(2)};
    GaussianRational iab = isotropy_form(A, B);
    Polynomial l = hpn_l_ab(A, B);
    Polynomial boxed = apply_box(l, n);
    REQUIRE(boxed.is_constant());
    CHECK(boxed.constant_term() == iab * gauss(2));
  }
  SECTION("box of a constant is zero") {
    auto t = hpn_section_vars(n);
    CHECK(apply_box(Polynomial::constant(t, gauss(3)), n).is_zero());
  }
  SECTION("box(l_AB^k) = (k^2+k) l^{k-1} I(A,B) with symbolic parameters") {
    // symbolic A, B: extra families in the same ring
    for (int nn = 1; nn <= 2; ++nn) {
      const int arity = 2 * nn + 2;
      auto t = VarTable::make_flat({{"U", arity}, {"V", arity}, {"A", arity}, {"B", arity}});
      Polynomial au = Polynomial::zero(t), bv = Polynomial::zero(t), bu = Polynomial::zero(t),
                 av = Polynomial::zero(t);
      for (int i = 0; i < arity; ++i) {
        au += var(t, "A", i) * var(t, "U", i);
        bv += var(t, "B", i) * var(t, "V", i);
        bu += var(t, "B", i) * var(t, "U", i);
        av += var(t, "A", i) * var(t, "V", i);
      }
      Polynomial l = au * bv - bu * av;
      Polynomial iab = Polynomial::zero(t);
      for (int i = 0; i <= nn; ++i)
        iab += var(t, "A", i) * var(t, "B", nn + 1 + i) - var(t, "A", nn + 1 + i) * var(t, "B", i);
      for (unsigned k = 1; k <= (nn == 1 ? 4u : 2u); ++k) {
        Polynomial lhs = apply_box(l.pow(k), nn);
        Polynomial rhs = l.pow(k - 1) * iab * gauss(static_cast<long>(k) * k + k);
        INFO("n=" << nn << " k=" << k);
        CHECK((lhs - rhs).is_zero());
      }
    }
  }
  SECTION("arity mismatch rejected") {
    auto t = VarTable::make_flat({{"U", 4}, {"V", 4}});
    CHECK_THROWS_AS(apply_box(Polynomial::constant(t, gauss(1)), 3), std::invalid_argument);
  }
}

TEST_CASE("pairing") {
  auto t = VarTable::make_flat({{"x", 1}});
  Polynomial x = var(t, "x", 0);

  CHECK(pairing(x, x) == gauss(1));
  CHECK(pairing(x * x, x * x) == gauss(2));
  CHECK(pairing(x, x * x) == gauss(0));

  SECTION("symmetry and positivity on real polynomials") {
    SplitMix64 rng(5);
    auto t3 = VarTable::make_flat({{"x", 3}});
    for (int trial = 0; trial < 10; ++trial) {
      Polynomial p = random_poly(t3, rng, 3, 4);
      Polynomial q = random_poly(t3, rng, 3, 4);
      CHECK(pairing(p, q) == pairing(q, p));
    }
    Polynomial real_poly = var(t3, "x", 0) * var(t3, "x", 1) * gauss(3) + var(t3, "x", 2).pow(2);
    GaussianRational self = pairing(real_poly, real_poly);
    CHECK(self.is_real());
    CHECK(sgn(self.re) > 0);
  }

  SECTION("duality <<p, qr>> = <<del(Q) p, r>> on random triples") {
    SplitMix64 rng(17);
    auto t2 = VarTable::make_flat({{"x", 2}, {"y", 2}});
    for (int trial = 0; trial < 50; ++trial) {
      Polynomial p = random_poly(t2, rng, 3, 3);
      Polynomial q = random_poly(t2, rng, 2, 2);
      Polynomial r = random_poly(t2, rng, 2, 3);
      CHECK(pairing(p, q * r) == pairing(apply_diff(q, p), r));
    }
  }
}

TEST_CASE("span_rank") {
  auto t = VarTable::make_flat({{"x", 1}});
  Polynomial one = Polynomial::constant(t, gauss(1));
  Polynomial x = var(t, "x", 0);

  CHECK(span_rank({}, 1) == 0);
  CHECK(span_rank({one, x, x * x}, 1) == 3);
  CHECK(span_rank({x, x * gauss(2)}, 1) == 1);

  SECTION("CP^2 level-1 family has rank 8 over 40 admissible parameter pairs") {
    auto family = cpn_restricted_family(2, 1, 40, 11);
    CHECK(span_rank(family, 11) == 8);
  }
  SECTION("stabilized rank is seed independent") {
    auto family = cpn_restricted_family(1, 2, 25, 3);
    int r1 = span_rank(family, 101);
    int r2 = span_rank(family, 202);
    int r3 = span_rank(family, 303);
    CHECK(r1 == 5);
    CHECK(r1 == r2);
    CHECK(r2 == r3);
  }
}

TEST_CASE("canonical text form") {
  auto t = VarTable::make_flat({{"z", 2}, {"w", 2}});
  Polynomial p = var(t, "z", 0).pow(2) * var(t, "w", 1) * gauss(3, -1) + var(t, "z", 1) * make_rational(1, 2);
  CHECK(p.str() == "(1/2+0i)*z[1] + (3-1i)*z[0]^2*w[1]");
  CHECK(Polynomial::zero(t).str() == "0");
  CHECK(p.str() == p.str());  // deterministic

  auto tm = VarTable::make_matrix({{"z", 2}});
  CHECK(Polynomial::variable(tm, "z", 0, 1).str() == "(1+0i)*z[0,1]");
}
