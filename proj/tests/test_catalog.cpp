#include <catch2/catch.hpp>

#include "symspec/catalog.hpp"
#include "symspec/spectrum.hpp"

using namespace symspec;

TEST_CASE("embedded energy constants") {
  CHECK(lookup("CP^n", 2).N_M == 2);
  CHECK(lookup("HP^n", 1).N_M == 3);
  CHECK(lookup("S^n", 3).N_M == 2);
  CHECK(lookup("CaP2").N_M == 11);
}

TEST_CASE("lookup rejects unknown spaces and bad parameters") {
  CHECK_THROWS_AS(lookup("T^2", 1), std::invalid_argument);
  CHECK_THROWS_AS(lookup("S^n", 1), std::invalid_argument);
  CHECK_THROWS_AS(lookup("CP^n", 0), std::invalid_argument);
  CHECK_THROWS_AS(lookup("CaP2", 3), std::invalid_argument);
}

TEST_CASE("sphere groups alternate between B and D") {
  CHECK(lookup("S^n", 2).group_family == Family::B);
  CHECK(lookup("S^n", 2).group_rank == 1);
  CHECK(lookup("S^n", 3).group_family == Family::D);
  CHECK(lookup("S^n", 3).group_rank == 2);
  CHECK(lookup("S^n", 6).group_family == Family::B);
  CHECK(lookup("S^n", 6).group_rank == 3);
}

TEST_CASE("highest weights are dominant and scale with the level") {
  for (const auto& d : {lookup("S^n", 4), lookup("CP^n", 2), lookup("HP^n", 1), lookup("CaP2")}) {
    INFO(d.id);
    for (long k = 0; k <= 3; ++k) {
      Weight w = d.highest_weight(k);
      CHECK(is_dominant(w));
      CHECK(w.ambient == scale(d.highest_weight(1).ambient, Rational(k)));
    }
  }
  Weight su3 = lookup("SU3/SO3").highest_weight(1, 2);
  CHECK(su3.coeffs == std::vector<long>{4, 2});  // 2 k2 L1 + 2 k1 L2
}

TEST_CASE("rank-one multiplicities: closed form equals Weyl dimension") {
  for (int n = 2; n <= 4; ++n) {
    auto s = lookup("S^n", n);
    auto cp = lookup("CP^n", n);
    auto hp = lookup("HP^n", n);
    for (long k = 0; k <= 6; ++k) {
      INFO("n=" << n << " k=" << k);
      CHECK(multiplicity_closed(s, k) == multiplicity_weyl(s, k));
      CHECK(multiplicity_closed(cp, k) == multiplicity_weyl(cp, k));
      CHECK(multiplicity_closed(hp, k) == multiplicity_weyl(hp, k));
    }
  }
}

TEST_CASE("descriptor serialization round-trips") {
  for (const auto& d : {lookup("S^n", 5), lookup("CP^n", 2), lookup("HP^n", 2), lookup("CaP2"),
                        lookup("SU3/SO3")}) {
    SymmetricSpaceDescriptor back = load_descriptor(serialize(d));
    CHECK(back == d);
  }
}

TEST_CASE("loaded CP^2 descriptor equals the embedded one") {
  std::string text = R"(# complex projective plane
schema_version = 1
id = CP^n
n = 2
group_family = A
group_rank = 2
restricted_family = A
restricted_rank = 1
N_M = 2
sigma = 1
satake_painting = [white, black]
satake_arrows = []
highest_weight_rule = cpn
)";
  CHECK(load_descriptor(text) == lookup("CP^n", 2));
}

TEST_CASE("descriptor rejection paths") {
  const std::string base = R"(schema_version = 1
id = X
n = 2
group_family = A
group_rank = 2
restricted_family = A
restricted_rank = 1
satake_painting = [white, black]
satake_arrows = []
)";
  SECTION("N_M = 0 violates the invariant") {
    CHECK_THROWS_WITH(load_descriptor(base + "N_M = 0\nsigma = 1\nhighest_weight_rule = cpn\n"),
                      Catch::Contains("N_M"));
  }
  SECTION("nonpositive sigma") {
    CHECK_THROWS_WITH(load_descriptor(base + "N_M = 2\nsigma = -1/2\nhighest_weight_rule = cpn\n"),
                      Catch::Contains("sigma"));
  }
  SECTION("non-dominant linear highest-weight rule at k = 1") {
    CHECK_THROWS_AS(load_descriptor(base + "N_M = 2\nsigma = 1\nhighest_weight_rule = linear\n" +
                                    "highest_weight_coeffs = [1, -1]\n"),
                    std::invalid_argument);
  }
  SECTION("unknown keys are rejected") {
    CHECK_THROWS_WITH(load_descriptor(base + "N_M = 2\nsigma = 1\nhighest_weight_rule = cpn\nfoo = 1\n"),
                      Catch::Contains("unknown key"));
  }
  SECTION("missing schema version") {
    CHECK_THROWS_WITH(load_descriptor("id = X\n"), Catch::Contains("schema_version"));
  }
  SECTION("duplicate keys") {
    CHECK_THROWS_WITH(load_descriptor(base + "N_M = 2\nN_M = 3\nsigma = 1\nhighest_weight_rule = cpn\n"),
                      Catch::Contains("duplicate"));
  }
  SECTION("parse diagnostics carry the line number") {
    CHECK_THROWS_WITH(load_descriptor("schema_version = 1\nbad line\n"), Catch::Contains("line 2"));
  }
}

TEST_CASE("linear rule descriptors work end to end") {
  std::string text = R"(schema_version = 1
id = custom
n = 0
group_family = C
group_rank = 2
restricted_family = A
restricted_rank = 1
N_M = 3
sigma = 1
satake_painting = [black, white]
satake_arrows = []
highest_weight_rule = linear
highest_weight_coeffs = [0, 1]
)";
  SymmetricSpaceDescriptor d = load_descriptor(text);
  CHECK(d.highest_weight(2).coeffs == std::vector<long>{0, 2});
  // same weight rule as HP^1, so the same dimensions
  CHECK(multiplicity_weyl(d, 1) == 5);
}
