// Combinatorial types: connected trivalent multigraphs of fixed genus with
// labeled legs. A leg sitting in the interior of an edge is realized by a
// bivalent vertex subdividing that edge, so a type with m legs has
// 2g - 2 + m vertices and 3g - 3 + m edges.
#pragma once

#include <utility>
#include <vector>

namespace tropabel {

struct CombType {
  int genus = 0;
  int vertex_count = 0;
  /// Vertices 0 .. legs-1 carry legs with markers 1 .. legs; the rest are
  /// trivalent.
  int legs = 0;
  /// Sorted (u <= v) pairs; loops have u == v.
  std::vector<std::pair<int, int>> edges;

  friend bool operator==(const CombType&, const CombType&) = default;
  friend auto operator<=>(const CombType&, const CombType&) = default;
};

/// Every isomorphism class, legs fixed pointwise, in canonical order.
std::vector<CombType> trivalent_graphs(int genus, int legs);

/// Types with g legs for g in {1, 2, 3}. Throws UnsupportedGenus otherwise.
std::vector<CombType> generate_comb_types(int g);

/// Canonical edge list under relabelings of the unmarked vertices.
std::vector<std::pair<int, int>> canonical_edges(int vertex_count, int legs, const std::vector<std::pair<int, int>>& edges);

}  // namespace tropabel
