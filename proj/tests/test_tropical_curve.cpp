#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "support.hpp"
#include "tropabel/curve.hpp"

using namespace tropabel;
using fixtures::rmat;

namespace {

// Two vertices joined by three edges with outgoing slopes n1, n2, n3 at vertex 0,
// all of length one, on the unit torus.
ParamCurve three_edge_curve(IVec2 n1, IVec2 n2, IVec2 n3) {
  ParamCurve pc{TropicalTorus(RMat2::identity()), 2, {}, {}, 0, RVec2{Rat(0), Rat(0)}};
  pc.edges.push_back(CurveEdge{0, 1, Rat(1), n1, std::nullopt});
  pc.edges.push_back(CurveEdge{0, 1, Rat(1), n2, IVec2{n2.x - n1.x, n2.y - n1.y}});
  pc.edges.push_back(CurveEdge{0, 1, Rat(1), n3, IVec2{n3.x - n1.x, n3.y - n1.y}});
  return pc;
}

bool has(const std::vector<Diagnostic>& d, const std::string& code, const std::string& where = "") {
  for (const auto& x : d) {
    if (x.code == code && (where.empty() || x.where == where)) return true;
  }
  return false;
}

// Independent degree: B = (sum l n n^T) S^-T, computed entry by entry.
IMat2 degree_oracle(const ParamCurve& pc) {
  Rat m00, m01, m11;
  for (const auto& e : pc.edges) {
    m00 += e.length * Rat(e.slope.x * e.slope.x);
    m01 += e.length * Rat(e.slope.x * e.slope.y);
    m11 += e.length * Rat(e.slope.y * e.slope.y);
  }
  const RMat2 M(m00, m01, m01, m11);
  const RMat2 B = M * inverse(pc.torus.S().transpose());
  IMat2 out;
  REQUIRE(to_integer(B, out));
  return out;
}

}  // namespace

TEST_CASE("balancing at a vertex") {
  CHECK(validate(three_edge_curve({1, 0}, {0, 1}, {-1, -1})).empty());
  const auto bad = validate(three_edge_curve({1, 0}, {0, 1}, {-1, 0}));
  CHECK(has(bad, "unbalanced", "vertex 0"));
  CHECK(has(bad, "unbalanced", "vertex 1"));
}

TEST_CASE("structural diagnostics") {
  const TropicalTorus t(RMat2::identity());
  CHECK(validate(fixtures::loop_curve(t, {1, 0}, Rat(1), {1, 0})).empty());
  CHECK(has(validate(fixtures::loop_curve(t, {1, 0}, Rat(2), {1, 0})), "cycle_inconsistent", "edge 0"));
  CHECK(has(validate(fixtures::loop_curve(t, {0, 0}, Rat(1), {0, 0})), "zero_slope"));
  CHECK(has(validate(fixtures::loop_curve(t, {1, 0}, Rat(-1), {-1, 0})), "nonpositive_length"));

  ParamCurve pc = fixtures::figure_b();
  pc.edges[0].winding = IVec2{0, 0};
  CHECK(has(validate(pc), "tree_not_spanning"));

  pc = fixtures::figure_b();
  pc.vertex_count = 3;
  CHECK(has(validate(pc), "disconnected"));

  pc = fixtures::figure_b();
  pc.edges[1].v = 5;
  CHECK(has(validate(pc), "vertex_out_of_range", "edge 1"));

  pc = fixtures::figure_b();
  pc.legs = {CurveLeg{0, 1}, CurveLeg{1, 1}, CurveLeg{9, 2}};
  CHECK(has(validate(pc), "duplicate_marker", "leg 1"));
  CHECK(has(validate(pc), "leg_vertex_out_of_range", "leg 2"));

  pc = fixtures::figure_b();
  pc.base_vertex = 4;
  CHECK(has(validate(pc), "base_vertex_out_of_range"));

  pc = fixtures::figure_b();
  pc.vertex_count = 0;
  CHECK(has(validate(pc), "no_vertices"));
}

TEST_CASE("left figure curve") {
  const ParamCurve pc = fixtures::figure_a();
  CHECK(validate(pc).empty());
  CHECK(pc.genus() == 5);
  CHECK(degree(pc) == IMat2(2, 0, 0, 3));
  CHECK(degree_by_crossing(pc) == IMat2(2, 0, 0, 3));
  CHECK(degree_oracle(pc) == IMat2(2, 0, 0, 3));
  CHECK(comatrix(degree(pc)) == IMat2(3, 0, 0, 2));
  CHECK(check_tropical_polarization(pc.torus, IMat2(3, 0, 0, 2)));
  CHECK(curve_gcd(pc) == 1);
  const Multiplicity m = mikhalkin_multiplicity(pc);
  CHECK(m.total == 1);
  CHECK(m.vertex_factors.size() == 8);
  // a couple of vertex positions read off the picture
  const auto pos = vertex_positions(pc);
  CHECK(pos[3] == RVec2{Rat(8), Rat(5)});
  CHECK(pos[7] == RVec2{Rat(11), Rat(8)});
}

TEST_CASE("right figure curve") {
  const ParamCurve pc = fixtures::figure_b();
  CHECK(validate(pc).empty());
  CHECK(pc.genus() == 2);
  CHECK(degree(pc) == IMat2(2, 1, 0, 1));
  CHECK(degree_by_crossing(pc) == IMat2(2, 1, 0, 1));
  CHECK(degree_oracle(pc) == IMat2(2, 1, 0, 1));
  CHECK(comatrix(degree(pc)) == IMat2(1, 0, -1, 2));
  CHECK(check_tropical_polarization(pc.torus, IMat2(1, 0, -1, 2)));
  CHECK(curve_gcd(pc) == 1);
  const Multiplicity m = mikhalkin_multiplicity(pc);
  CHECK(m.vertex_factors.at(0) == 2);
  CHECK(m.vertex_factors.at(1) == 2);
  CHECK(m.total == 4);
}

TEST_CASE("degree of an invalid curve is rejected") {
  ParamCurve pc = fixtures::figure_b();
  pc.edges[0].length = Rat(9, 2);
  CHECK_FALSE(validate(pc).empty());
  CHECK(fixtures::error_of([&] { (void)degree(pc); }) == ErrorCode::InvalidCurve);
  CHECK(fixtures::error_of([&] { (void)degree_by_crossing(pc); }) == ErrorCode::InvalidCurve);
  CHECK(fixtures::error_of([&] { (void)mikhalkin_multiplicity(pc); }) == ErrorCode::InvalidCurve);
}

TEST_CASE("degree_by_crossing retries when an edge runs inside a wall") {
  // the loop lies on the wall y = 0 of the unperturbed domain
  const TropicalTorus t(RMat2::identity());
  ParamCurve pc{t, 2, {}, {}, 0, RVec2{Rat(0), Rat(0)}};
  pc.edges.push_back(CurveEdge{0, 1, Rat(1, 2), {1, 0}, std::nullopt});
  pc.edges.push_back(CurveEdge{1, 0, Rat(1, 2), {1, 0}, IVec2{1, 0}});
  pc.edges.push_back(CurveEdge{0, 0, Rat(1), {0, 1}, IVec2{0, 1}});
  // vertex 0 is 4-valent here, which the degree does not care about
  REQUIRE(validate(pc).empty());
  CHECK(degree_by_crossing(pc) == degree(pc));
}

TEST_CASE("gcd examples") {
  CHECK(curve_gcd(fixtures::figure_a()) == 1);
  CHECK(curve_gcd(fixtures::figure_b()) == 1);
  CHECK(curve_gcd(dilate(fixtures::figure_b(), 3)) == 3);
}

TEST_CASE("vertex multiplicity examples") {
  CHECK(mikhalkin_multiplicity(three_edge_curve({1, 0}, {0, 1}, {-1, -1})).vertex_factors.at(0) == 1);
  const Multiplicity m = mikhalkin_multiplicity(three_edge_curve({2, 0}, {0, 1}, {-2, -1}));
  CHECK(m.vertex_factors.at(0) == 2);
  CHECK(m.gcd == 1);
  CHECK(fixtures::error_of([] { (void)mikhalkin_multiplicity(three_edge_curve({1, 0}, {2, 0}, {-3, 0})); }) ==
        ErrorCode::FlatVertex);
  // a marked vertex must be bivalent
  ParamCurve pc = three_edge_curve({1, 0}, {0, 1}, {-1, -1});
  pc.legs = {CurveLeg{0, 1}};
  CHECK(fixtures::error_of([&] { (void)mikhalkin_multiplicity(pc); }) == ErrorCode::NotTrivalent);
  // as must an unmarked one
  const TropicalTorus t(RMat2::identity());
  CHECK(fixtures::error_of([&] { (void)mikhalkin_multiplicity(fixtures::loop_curve(t, {1, 0}, Rat(1), {1, 0})); }) ==
        ErrorCode::NotTrivalent);
}

TEST_CASE("vertex multiplicity is |det| of any two outgoing slopes") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> d(-20, 20);
  int checked = 0;
  while (checked < 500) {
    const IVec2 a{d(rng), d(rng)}, b{d(rng), d(rng)};
    const IVec2 c{-a.x - b.x, -a.y - b.y};
    if (a.x * b.y - a.y * b.x == 0) continue;
    const Multiplicity m = mikhalkin_multiplicity(three_edge_curve(a, b, c));
    const std::int64_t det = std::llabs(b.x * c.y - b.y * c.x);
    REQUIRE(m.vertex_factors.at(0) == det);
    REQUIRE(m.vertex_factors.at(1) == det);
    REQUIRE(m.total == m.gcd * det * det);
    ++checked;
  }
}

TEST_CASE("dilation") {
  const ParamCurve b = fixtures::figure_b();
  CHECK(dilate(b, 1) == b);
  CHECK(degree(dilate(b, 2)) == 2 * degree(b));
  CHECK(contract(dilate(b, 3), 3) == b);
  CHECK(fixtures::error_of([&] { (void)contract(b, 2); }) == ErrorCode::NotDivisible);
  CHECK(fixtures::error_of([&] { (void)dilate(b, 0); }) == ErrorCode::InvalidArgument);
  CHECK(vertex_positions(dilate(b, 5)) == vertex_positions(b));

  const TropicalTorus t(RMat2::identity());
  const ParamCurve unit = three_edge_curve({1, 0}, {0, 1}, {-1, -1});
  CHECK(degree(unit) == IMat2(2, 1, 1, 2));
  // a degree-I loop curve
  const ParamCurve loop = fixtures::loop_curve(t, {1, 1}, Rat(1), {1, 1});
  CHECK(degree(dilate(loop, 2)) == 2 * degree(loop));
}

TEST_CASE("dilation scales the multiplicity of marked genus-2 curves by k^5") {
  // the right figure curve with its two marked points on edges 0 and 2
  ParamCurve pc = fixtures::figure_b();
  // subdivide edge 0 at 1 and edge 2 at 1/2 with bivalent marked vertices 2 and 3
  pc.vertex_count = 4;
  pc.edges = {CurveEdge{0, 2, Rat(1), {1, -1}, std::nullopt}, CurveEdge{2, 1, Rat(3), {1, -1}, std::nullopt},
              CurveEdge{1, 0, Rat(2), {2, 0}, IVec2{1, 0}},   CurveEdge{0, 3, Rat(1, 2), {1, 1}, std::nullopt},
              CurveEdge{3, 1, Rat(3, 2), {1, 1}, IVec2{0, 1}}};
  pc.legs = {CurveLeg{2, 1}, CurveLeg{3, 2}};
  REQUIRE(validate(pc).empty());
  REQUIRE(pc.edges.size() == 5);
  const std::int64_t base = mikhalkin_multiplicity(pc).total;
  CHECK(base == 4);
  for (std::int64_t k : {2, 3, 4}) {
    CHECK(mikhalkin_multiplicity(dilate(pc, k)).total == k * k * k * k * k * base);
    CHECK(degree(dilate(pc, k)) == k * degree(pc));
    CHECK(degree_by_crossing(dilate(pc, k)) == k * degree(pc));
  }
}

TEST_CASE("degree and crossing degree agree on random theta curves") {
  // theta curves on the unit torus: slopes n1, n2, n3 = -n1 - n2, integral lengths
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::int64_t> d(-3, 3), len(1, 4);
  int checked = 0;
  while (checked < 300) {
    const IVec2 n1{d(rng), d(rng)}, n2{d(rng), d(rng)};
    const IVec2 n3{-n1.x - n2.x, -n1.y - n2.y};
    if (n1.is_zero() || n2.is_zero() || n3.is_zero()) continue;
    const Rat l1(len(rng)), l2(len(rng)), l3(len(rng));
    const TropicalTorus t(RMat2::identity());
    ParamCurve pc{t, 2, {}, {}, 0, RVec2{Rat(1, 3), Rat(2, 7)}};
    pc.edges.push_back(CurveEdge{0, 1, l1, n1, std::nullopt});
    const auto w = [&](const Rat& l, IVec2 n) {
      return IVec2{(l * Rat(n.x) - l1 * Rat(n1.x)).to_int64(), (l * Rat(n.y) - l1 * Rat(n1.y)).to_int64()};
    };
    pc.edges.push_back(CurveEdge{0, 1, l2, n2, w(l2, n2)});
    pc.edges.push_back(CurveEdge{0, 1, l3, n3, w(l3, n3)});
    REQUIRE(validate(pc).empty());
    REQUIRE(degree(pc) == degree_oracle(pc));
    REQUIRE(degree_by_crossing(pc) == degree(pc));
    ++checked;
  }
}
