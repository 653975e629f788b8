#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symspec/root_system.hpp"

namespace symspec {

/// Dynkin diagram with black/white painting and arrows joining white nodes.
/// Adjacency is implied by family + rank; nodes are 0-based in code and
/// rendered 1-based.
struct SatakeDiagram {
  Family family;
  int rank;
  std::vector<bool> white;                  // per node
  std::vector<std::pair<int, int>> arrows;  // unordered white-node pairs

  bool operator==(const SatakeDiagram& o) const {
    return family == o.family && rank == o.rank && white == o.white && arrows == o.arrows;
  }
};

struct PaintedDynkin {
  Family family;
  int rank;
  std::vector<bool> white;
};

inline SatakeDiagram make_satake(Family family, int rank, std::vector<bool> white,
                                 std::vector<std::pair<int, int>> arrows) {
  if (static_cast<int>(white.size()) != rank)
    throw std::invalid_argument("satake diagram: painting length must equal rank");
  for (auto& [a, b] : arrows) {
    if (a > b) std::swap(a, b);
    if (a == b) throw std::invalid_argument("satake diagram: arrow endpoints must be distinct");
    if (a < 0 || b >= rank) throw std::invalid_argument("satake diagram: arrow node out of range");
    if (!white[a] || !white[b])
      throw std::invalid_argument("satake diagram: arrows may only join white nodes");
  }
  std::sort(arrows.begin(), arrows.end());
  return SatakeDiagram{family, rank, std::move(white), std::move(arrows)};
}

/// Arrow deletion: the painted Dynkin diagram of the associated flag manifold.
inline PaintedDynkin satake_to_painted(const SatakeDiagram& sd) {
  return PaintedDynkin{sd.family, sd.rank, sd.white};
}

/// Number of white vertices = rank of H^2 of the flag manifold.
inline int second_betti(const SatakeDiagram& sd) {
  return static_cast<int>(std::count(sd.white.begin(), sd.white.end(), true));
}

/// Satake diagram of su(p,q), p <= q: type A_{p+q-1}, white nodes i and
/// p+q-i for i = 1..p (1-based), arrows joining each distinct pair.
inline SatakeDiagram grassmannian_satake(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("grassmannian_satake: p, q must be >= 1");
  if (p > q) throw std::invalid_argument("grassmannian_satake: requires p <= q");
  int rank = p + q - 1;
  std::vector<bool> white(rank, false);
  std::vector<std::pair<int, int>> arrows;
  for (int i = 1; i <= p; ++i) {
    int j = p + q - i;
    white[i - 1] = true;
    white[j - 1] = true;
    if (i != j) arrows.emplace_back(i - 1, j - 1);
  }
  return make_satake(Family::A, rank, std::move(white), std::move(arrows));
}

namespace detail {

inline std::string painted_line(Family family, const std::vector<bool>& white) {
  // o = white, * = black; edges: --- single, =>= / =<= pointing to the short root.
  const int rank = static_cast<int>(white.size());
  auto node = [&](int i) { return std::string(white[i] ? "o" : "*"); };
  std::ostringstream out;
  switch (family) {
    case Family::A:
      for (int i = 0; i < rank; ++i) out << (i ? "---" : "") << node(i);
      break;
    case Family::B:
      for (int i = 0; i < rank; ++i) out << (i ? (i == rank - 1 ? "=>=" : "---") : "") << node(i);
      break;
    case Family::C:
      for (int i = 0; i < rank; ++i) out << (i ? (i == rank - 1 ? "=<=" : "---") : "") << node(i);
      break;
    case Family::D:
      // fork at the tail: n-2 path, then the pair (n-1, n)
      if (rank == 2) {
        out << node(0) << "   " << node(1);
      } else {
        for (int i = 0; i + 2 < rank; ++i) out << (i ? "---" : "") << node(i);
        out << "<(" << node(rank - 2) << "," << node(rank - 1) << ")";
      }
      break;
    case Family::F4:
      out << node(0) << "---" << node(1) << "=>=" << node(2) << "---" << node(3);
      break;
  }
  return out.str();
}

}  // namespace detail

inline std::string render_ascii(const SatakeDiagram& sd) {
  std::ostringstream out;
  out << family_name(sd.family) << sd.rank << ":  " << detail::painted_line(sd.family, sd.white);
  if (!sd.arrows.empty()) {
    out << "\narrows:";
    for (const auto& [a, b] : sd.arrows) out << " (" << (a + 1) << "<->" << (b + 1) << ")";
  }
  return out.str();
}

inline std::string render_ascii(const PaintedDynkin& pd) {
  std::ostringstream out;
  out << family_name(pd.family) << pd.rank << ":  " << detail::painted_line(pd.family, pd.white);
  return out.str();
}

}  // namespace symspec
