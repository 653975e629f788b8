// Print the first few spectrum rows of CP^2 and HP^1, then a splitting example.

#include <iostream>

#include "symspec/spectrum.hpp"

int main() {
  using namespace symspec;
  for (const char* id : {"CP^n", "HP^n"}) {
    auto space = lookup(id, id[0] == 'C' ? 2 : 1);
    std::cout << space.id << " (n = " << space.n << "), N_M = " << space.N_M << "\n";
    for (const auto& line : spectral_lines(space, 4)) {
      std::cout << "  k=" << line.k << "  energy=" << to_string(line.energy)
                << "  eigenvalue=" << to_string(line.eigenvalue)
                << "  multiplicity=" << line.multiplicity.get_str() << "\n";
    }
  }
  auto sol = splitting_count(8281);
  std::cout << "x^2-xy+y^2 = 8281 has " << sol.pairs.size() << " dominant solutions:\n";
  for (auto [k1, k2] : sol.pairs) std::cout << "  (k1,k2) = (" << k1 << "," << k2 << ")\n";
  return 0;
}
