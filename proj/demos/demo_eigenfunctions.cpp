// Build a CP^1 section, restrict it, and certify the span of the level-1 family.

#include <iostream>

#include "symspec/eigenfunctions.hpp"

int main() {
  using namespace symspec;
  SplitMix64 rng(7);
  auto [a, b] = sample_orthogonal_pair(rng, 2, 3);
  Polynomial section = cpn_section(a, b, 1);
  std::cout << "section  = " << section.str() << "\n";
  std::cout << "restrict = " << restrict_conjugate(section).str() << "\n";

  auto family = cpn_restricted_family(1, 1, 15, 42);
  std::cout << "span rank of the CP^1 level-1 family: " << span_rank(family, 42) << "\n";

  auto report = verify_family(lookup("CP^n", 2), 1);
  for (const auto& c : report.checks)
    std::cout << (c.passed ? "[pass] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
  return 0;
}
