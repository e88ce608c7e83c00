// Fixtures and independent oracles shared by the unit tests and the
// acceptance binary. Nothing here calls into the enumerator.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tropabel/curve.hpp"
#include "tropabel/error.hpp"
#include "tropabel/skew_form.hpp"
#include "tropabel/tropical_torus.hpp"

namespace fixtures {

using namespace tropabel;

RMat2 rmat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/// Left curve of the two-panel figure: degree diag(2,3) on S = [[12,2],[3,8]].
ParamCurve figure_a();
/// Right curve: degree [[2,1],[0,1]] on S = [[8,-2],[-4,6]].
ParamCurve figure_b();

/// One vertex with a loop whose slope is n, closing with winding w after length l.
ParamCurve loop_curve(const TropicalTorus& t, IVec2 n, const Rat& l, IVec2 w);

/// Random skew form with |entries| <= bound and det C != 0.
SkewForm random_skew_form(std::mt19937_64& rng, std::int64_t bound);

/// Code of the tropabel::Error thrown by f, or nullopt if nothing was thrown.
template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace fixtures

namespace oracle {

using namespace tropabel;

/// Leibniz expansion over all 24 permutations.
std::int64_t det4(const IMat4& a);

/// Plain 4x4 integer product.
IMat4 mul4(const IMat4& a, const IMat4& b);

/// Genus-2 curves on a theta graph through two points, derived directly:
/// slopes n1 + n2 + n3 = 0 up to order and overall sign, lengths from
/// sum l_i n_i n_i^T = B S^T, windings from the closing conditions, and the
/// two marked points placed by solving for their edge parameters.
struct ThetaCurve {
  std::vector<IVec2> slopes;      // canonical triple
  std::vector<Rat> lengths;
  int edge1 = 0, edge2 = 0;       // edges carrying p1 and p2
  Rat s1, s2;                     // distance from the source vertex
  std::int64_t gcd = 1;
  std::int64_t multiplicity = 0;  // gcd * det(n1, n2)^2
};

std::vector<ThetaCurve> theta_curves(const TropicalTorus& t, const IMat2& B, const RVec2& p1, const RVec2& p2,
                                     int slope_bound, int lift_bound);

/// Isomorphism classes of connected multigraphs with `legs` bivalent labeled
/// vertices followed by 2g - 2 trivalent ones, found by filling adjacency
/// matrices row by row. Returned as canonical adjacency strings.
std::set<std::string> graph_classes(int genus, int legs);

/// Canonical adjacency string of an edge list in the same convention.
std::string adjacency_key(int vertex_count, int legs, const std::vector<std::pair<int, int>>& edges);

}  // namespace oracle
