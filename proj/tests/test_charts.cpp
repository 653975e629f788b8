#include <catch2/catch.hpp>

#include <complex>

#include "symspec/charts.hpp"

using namespace symspec;

namespace {
const std::complex<double> I(0.0, 1.0);
}

TEST_CASE("chart_complex on the standard basis point") {
  // u = e1, v = e2 (n = 1): z = (1, i)/sqrt2, w = (-i, 1)/sqrt2
  ComplexVec u = {1.0, 0.0};
  ComplexVec v = {0.0, 1.0};
  auto [z, w] = chart_complex(u, v);
  const double r2 = std::sqrt(2.0);
  CHECK(std::abs(z[0] - 1.0 / r2) < 1e-14);
  CHECK(std::abs(z[1] - I / r2) < 1e-14);
  CHECK(std::abs(w[0] + I / r2) < 1e-14);
  CHECK(std::abs(w[1] - 1.0 / r2) < 1e-14);
  auto res = chart_complex_out_residuals(z, w);
  CHECK(res[0] < 1e-14);
  CHECK(res[1] < 1e-14);
}

TEST_CASE("chart_complex scales consistently with v") {
  ComplexVec u = {1.0, 0.0};
  ComplexVec v = {0.0, 2.0};
  auto [z, w] = chart_complex(u, v);
  // the image of the energy level ||v||^2/2 = c has norm sqrt(2c) = ||v||
  double nz = 0, nw = 0;
  for (auto x : z) nz += std::norm(x);
  for (auto x : w) nw += std::norm(x);
  CHECK(std::fabs(nz - 4.0) < 1e-12);
  CHECK(std::fabs(nw - 4.0) < 1e-12);
  auto res = chart_complex_out_residuals(z, w);
  CHECK(res[0] < 1e-12);
  CHECK(res[1] < 1e-12);
}

TEST_CASE("chart_complex rejects inadmissible input") {
  ComplexVec u = {1.0, 0.0};
  SECTION("u . conj(v) != 0") {
    ComplexVec v = {0.5, 0.0};
    CHECK_THROWS_AS(chart_complex(u, v), ChartError);
  }
  SECTION("||u|| != 1") {
    ComplexVec u2 = {2.0, 0.0};
    ComplexVec v = {0.0, 1.0};
    try {
      chart_complex(u2, v);
      FAIL("expected ChartError");
    } catch (const ChartError& e) {
      REQUIRE(!e.residuals().empty());
      CHECK(e.residuals()[0] == Approx(1.0));
    }
  }
}

TEST_CASE("chart_complex: 100 random admissible points satisfy the target constraints") {
  SplitMix64 rng(555);
  for (int n = 1; n <= 3; ++n) {
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
      auto [u, v] = random_admissible_complex(rng, n);
      auto [z, w] = chart_complex(u, v);
      for (double r : chart_complex_out_residuals(z, w)) worst = std::max(worst, r);
    }
    INFO("n=" << n);
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("chart_complex respects the circle equivalence") {
  // (e^{it} u, e^{it} v) represents the same class; the invariants of the
  // image class [[z, w]] under (z, w) ~ (e^{is} z, e^{-is} w) must agree.
  SplitMix64 rng(777);
  auto [u, v] = random_admissible_complex(rng, 2);
  auto [z1, w1] = chart_complex(u, v);
  std::complex<double> phase = std::exp(I * 0.7);
  ComplexVec u2 = u, v2 = v;
  for (auto& x : u2) x *= phase;
  for (auto& x : v2) x *= phase;
  auto [z2, w2] = chart_complex(u2, v2);

  for (size_t k = 0; k < z1.size(); ++k) {
    CHECK(std::abs(std::abs(z1[k]) - std::abs(z2[k])) < 1e-9);  // |z_k| invariant
    CHECK(std::abs(std::abs(w1[k]) - std::abs(w2[k])) < 1e-9);
    for (size_t l = 0; l < z1.size(); ++l)
      CHECK(std::abs(z1[k] * w1[l] - z2[k] * w2[l]) < 1e-9);  // bilinear products invariant
  }
}

TEST_CASE("chart_quaternionic on a hand-picked admissible point") {
  // p = (1, 0), q = (0, 1) quaternionically, n = 1
  ComplexVec u = {1.0, 0.0, 0.0, 0.0};
  ComplexVec v = {0.0, 0.0, 1.0, 0.0};
  auto [z, w] = chart_quaternionic(u, v);
  auto res = chart_quaternionic_out_residuals(z, w);
  CHECK(res[0] < 1e-9);
  CHECK(res[1] < 1e-9);
  CHECK(res[2] < 1e-9);
}

TEST_CASE("chart_quaternionic rejects inadmissible input") {
  SECTION("||u|| = 2") {
    ComplexVec u = {2.0, 0.0, 0.0, 0.0};
    ComplexVec v = {0.0, 0.0, 1.0, 0.0};
    CHECK_THROWS_AS(chart_quaternionic(u, v), ChartError);
  }
  SECTION("nonzero quaternionic pairing") {
    ComplexVec u = {1.0, 0.0, 0.0, 0.0};
    ComplexVec v = {1.0, 0.0, 0.0, 0.0};
    try {
      chart_quaternionic(u, v);
      FAIL("expected ChartError");
    } catch (const ChartError& e) {
      REQUIRE(e.residuals().size() >= 2);
      CHECK(e.residuals()[1] > 0.5);
    }
  }
}

TEST_CASE("chart_quaternionic: batches of random admissible points") {
  SplitMix64 rng(999);
  for (int n = 1; n <= 2; ++n) {
    double worst_in = 0, worst_out = 0;
    for (int trial = 0; trial < 100; ++trial) {
      auto [u, v] = random_admissible_quaternionic(rng, n);
      for (double r : chart_quaternionic_in_residuals(u, v))
        if (r < 0.5) worst_in = std::max(worst_in, r);
      auto [z, w] = chart_quaternionic(u, v);
      for (double r : chart_quaternionic_out_residuals(z, w)) worst_out = std::max(worst_out, r);
    }
    INFO("n=" << n);
    CHECK(worst_in < 1e-10);
    CHECK(worst_out < 1e-9);
  }
}
