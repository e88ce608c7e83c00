// Parametrized tropical curves h : Gamma -> R^2 / Lambda.
//
// A curve is stored as a graph with a spanning tree: edges without a winding
// are tree edges, every other edge carries the Lambda-coordinates of the
// lattice translate it closes up with. Vertex positions are derived from the
// base vertex by walking the tree, so for a non-tree edge u -> v
//
//     P(u) + length * slope - P(v) = S * winding.
//
// Marked points are legs (contracted ends) attached to vertices.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropabel/matrix.hpp"
#include "tropabel/tropical_torus.hpp"

namespace tropabel {

struct CurveEdge {
  int u = 0;
  int v = 0;
  Rat length;
  IVec2 slope;                     // oriented u -> v
  std::optional<IVec2> winding;    // set iff the edge is not in the spanning tree
  friend bool operator==(const CurveEdge&, const CurveEdge&) = default;
};

struct CurveLeg {
  int vertex = 0;
  int marker = 0;
  friend bool operator==(const CurveLeg&, const CurveLeg&) = default;
};

struct ParamCurve {
  TropicalTorus torus;
  int vertex_count = 0;
  std::vector<CurveEdge> edges;
  std::vector<CurveLeg> legs;
  int base_vertex = 0;
  RVec2 base_position;

  /// First Betti number of the underlying graph (legs do not count).
  int genus() const { return static_cast<int>(edges.size()) - vertex_count + 1; }
  friend bool operator==(const ParamCurve&, const ParamCurve&) = default;
};

struct Diagnostic {
  std::string code;
  std::string where;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Empty iff every structural invariant holds (balancing, nonzero slopes,
/// positive lengths, spanning tree, cycle consistency, legs).
std::vector<Diagnostic> validate(const ParamCurve& pc);

/// Positions of all vertices in R^2 (lifted along the spanning tree).
std::vector<RVec2> vertex_positions(const ParamCurve& pc);

/// Lattice length of an integer vector.
std::int64_t weight(const IVec2& v);

/// B with B S^T = sum_e l_e n_e n_e^T. Throws NonIntegralDegree.
IMat2 degree(const ParamCurve& pc);

/// Degree read off as the flux of slopes through the two walls of the
/// fundamental parallelogram. Throws WallDegeneracy.
IMat2 degree_by_crossing(const ParamCurve& pc);

std::int64_t curve_gcd(const ParamCurve& pc);

struct Multiplicity {
  std::int64_t gcd = 1;
  std::map<int, std::int64_t> vertex_factors;
  std::int64_t total = 1;
  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

/// delta_Gamma times the product of |det| of two outgoing slopes over the
/// unmarked trivalent vertices.
Multiplicity mikhalkin_multiplicity(const ParamCurve& pc);

/// Slopes times k, lengths divided by k: same image, degree times k.
ParamCurve dilate(const ParamCurve& pc, std::int64_t k);
/// Inverse of dilate. Throws NotDivisible unless k divides every slope.
ParamCurve contract(const ParamCurve& pc, std::int64_t k);

}  // namespace tropabel
