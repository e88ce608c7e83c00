#include "tropabel/curve.hpp"

#include <array>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

namespace tropabel {

namespace {

std::string edge_name(std::size_t i) { return "edge " + std::to_string(i); }
std::string vertex_name(int v) { return "vertex " + std::to_string(v); }

RVec2 to_rational(const IVec2& v) { return {Rat(v.x), Rat(v.y)}; }

RVec2 displacement(const CurveEdge& e) { return e.length * to_rational(e.slope); }

// Breadth-first walk over tree edges. Returns positions and whether every
// vertex was reached without meeting a tree cycle.
bool walk_tree(const ParamCurve& pc, std::vector<RVec2>& pos) {
  const auto n = static_cast<std::size_t>(pc.vertex_count);
  pos.assign(n, RVec2{});
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t tree_edges = 0;
  for (std::size_t i = 0; i < pc.edges.size(); ++i) {
    const auto& e = pc.edges[i];
    if (e.winding) continue;
    ++tree_edges;
    adj[static_cast<std::size_t>(e.u)].push_back(i);
    adj[static_cast<std::size_t>(e.v)].push_back(i);
  }
  if (n == 0 || tree_edges + 1 != n) return false;
  std::deque<int> queue{pc.base_vertex};
  seen[static_cast<std::size_t>(pc.base_vertex)] = 1;
  pos[static_cast<std::size_t>(pc.base_vertex)] = pc.base_position;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (std::size_t i : adj[static_cast<std::size_t>(x)]) {
      const auto& e = pc.edges[i];
      if (e.u == e.v) return false;
      const int y = e.u == x ? e.v : e.u;
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      ++reached;
      const RVec2 d = displacement(e);
      pos[static_cast<std::size_t>(y)] = pos[static_cast<std::size_t>(x)] + (e.u == x ? d : -d);
      queue.push_back(y);
    }
  }
  return reached == n;
}

bool connected(const ParamCurve& pc) {
  const auto n = static_cast<std::size_t>(pc.vertex_count);
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& e : pc.edges) {
    const std::size_t a = find(static_cast<std::size_t>(e.u));
    const std::size_t b = find(static_cast<std::size_t>(e.v));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

void require_valid(const ParamCurve& pc) {
  const auto diags = validate(pc);
  if (!diags.empty()) {
    throw Error(ErrorCode::InvalidCurve, diags.front().code + " at " + diags.front().where);
  }
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Internal, "multiplicity overflow");
  return r;
}

}  // namespace

std::int64_t weight(const IVec2& v) { return std::gcd(std::llabs(v.x), std::llabs(v.y)); }

std::vector<Diagnostic> validate(const ParamCurve& pc) {
  std::vector<Diagnostic> out;
  const int n = pc.vertex_count;
  if (n <= 0) {
    out.push_back({"no_vertices", "curve"});
    return out;
  }
  bool indices_ok = true;
  for (std::size_t i = 0; i < pc.edges.size(); ++i) {
    const auto& e = pc.edges[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      out.push_back({"vertex_out_of_range", edge_name(i)});
      indices_ok = false;
      continue;
    }
    if (e.length.sign() <= 0) out.push_back({"nonpositive_length", edge_name(i)});
    if (e.slope.is_zero()) out.push_back({"zero_slope", edge_name(i)});
  }
  std::set<int> markers;
  for (std::size_t i = 0; i < pc.legs.size(); ++i) {
    const auto& leg = pc.legs[i];
    if (leg.vertex < 0 || leg.vertex >= n) out.push_back({"leg_vertex_out_of_range", "leg " + std::to_string(i)});
    if (!markers.insert(leg.marker).second) out.push_back({"duplicate_marker", "leg " + std::to_string(i)});
  }
  if (pc.base_vertex < 0 || pc.base_vertex >= n) {
    out.push_back({"base_vertex_out_of_range", vertex_name(pc.base_vertex)});
    indices_ok = false;
  }
  if (!indices_ok) return out;

  std::vector<IVec2> flux(static_cast<std::size_t>(n));
  for (const auto& e : pc.edges) {
    flux[static_cast<std::size_t>(e.u)] += e.slope;
    flux[static_cast<std::size_t>(e.v)] -= e.slope;
  }
  for (int v = 0; v < n; ++v) {
    if (!flux[static_cast<std::size_t>(v)].is_zero()) out.push_back({"unbalanced", vertex_name(v)});
  }
  if (!connected(pc)) out.push_back({"disconnected", "curve"});

  std::vector<RVec2> pos;
  if (!walk_tree(pc, pos)) {
    out.push_back({"tree_not_spanning", "curve"});
    return out;
  }
  for (std::size_t i = 0; i < pc.edges.size(); ++i) {
    const auto& e = pc.edges[i];
    if (!e.winding) continue;
    const RVec2 gap = pos[static_cast<std::size_t>(e.u)] + displacement(e) - pos[static_cast<std::size_t>(e.v)];
    if (!(gap == pc.torus.lattice_vector(*e.winding))) out.push_back({"cycle_inconsistent", edge_name(i)});
  }
  return out;
}

std::vector<RVec2> vertex_positions(const ParamCurve& pc) {
  std::vector<RVec2> pos;
  if (!walk_tree(pc, pos)) throw Error(ErrorCode::InvalidCurve, "tree edges do not form a spanning tree");
  return pos;
}

IMat2 degree(const ParamCurve& pc) {
  require_valid(pc);
  RMat2 m(Rat(0), Rat(0), Rat(0), Rat(0));
  for (const auto& e : pc.edges) {
    const Rat x(e.slope.x);
    const Rat y(e.slope.y);
    m = m + e.length * RMat2(x * x, x * y, y * x, y * y);
  }
  const RMat2 b = m * pc.torus.S_inverse().transpose();
  IMat2 out;
  if (!to_integer(b, out)) throw Error(ErrorCode::NonIntegralDegree, "sum of l_e n_e n_e^T S^-T is not integral");
  return out;
}

IMat2 degree_by_crossing(const ParamCurve& pc) {
  require_valid(pc);
  const auto pos = vertex_positions(pc);
  const RMat2& sinv = pc.torus.S_inverse();
  // Wall offsets in lattice coordinates: the unperturbed domain, then three
  // small translates used only when an edge runs inside a wall.
  const std::array<RVec2, 4> offsets{RVec2{Rat(0), Rat(0)}, RVec2{Rat(1, 997), Rat(1, 991)},
                                     RVec2{Rat(2, 997), Rat(3, 991)}, RVec2{Rat(5, 997), Rat(7, 991)}};
  for (const auto& off : offsets) {
    IMat2 b(0, 0, 0, 0);
    bool degenerate = false;
    for (const auto& e : pc.edges) {
      const RVec2 start = sinv * pos[static_cast<std::size_t>(e.u)] - off;
      const RVec2 dir = sinv * to_rational(e.slope);
      const RVec2 end = start + e.length * dir;
      for (int j = 0; j < 2; ++j) {
        if (dir[j].is_zero() && start[j].is_integer()) degenerate = true;
        const BigInt crossings = end[j].floor() - start[j].floor();
        const std::int64_t c = crossings.get_si();
        b(0, j) += c * e.slope.x;
        b(1, j) += c * e.slope.y;
      }
    }
    if (!degenerate) return b;
  }
  throw Error(ErrorCode::WallDegeneracy, "an edge lies inside a wall of every tried fundamental domain");
}

std::int64_t curve_gcd(const ParamCurve& pc) {
  std::int64_t g = 0;
  for (const auto& e : pc.edges) g = std::gcd(g, weight(e.slope));
  return g;
}

Multiplicity mikhalkin_multiplicity(const ParamCurve& pc) {
  require_valid(pc);
  const auto n = static_cast<std::size_t>(pc.vertex_count);
  std::vector<std::vector<IVec2>> outgoing(n);
  std::vector<int> legs(n, 0);
  for (const auto& e : pc.edges) {
    outgoing[static_cast<std::size_t>(e.u)].push_back(e.slope);
    outgoing[static_cast<std::size_t>(e.v)].push_back(-e.slope);
  }
  for (const auto& leg : pc.legs) ++legs[static_cast<std::size_t>(leg.vertex)];

  Multiplicity m;
  m.gcd = curve_gcd(pc);
  m.total = m.gcd;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& out = outgoing[v];
    if (legs[v] > 0) {
      if (legs[v] != 1 || out.size() != 2) {
        throw Error(ErrorCode::NotTrivalent, "marked " + vertex_name(static_cast<int>(v)) + " is not bivalent");
      }
      continue;
    }
    if (out.size() != 3) throw Error(ErrorCode::NotTrivalent, vertex_name(static_cast<int>(v)) + " is not trivalent");
    const std::int64_t mv = std::llabs(out[0].x * out[1].y - out[0].y * out[1].x);
    if (mv == 0) throw Error(ErrorCode::FlatVertex, vertex_name(static_cast<int>(v)) + " is flat");
    m.vertex_factors[static_cast<int>(v)] = mv;
    m.total = checked_mul(m.total, mv);
  }
  return m;
}

ParamCurve dilate(const ParamCurve& pc, std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "dilation factor must be positive");
  ParamCurve out = pc;
  for (auto& e : out.edges) {
    e.slope = IVec2{e.slope.x * k, e.slope.y * k};
    e.length /= Rat(k);
  }
  return out;
}

ParamCurve contract(const ParamCurve& pc, std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "contraction factor must be positive");
  ParamCurve out = pc;
  for (auto& e : out.edges) {
    if (e.slope.x % k != 0 || e.slope.y % k != 0) {
      throw Error(ErrorCode::NotDivisible, std::to_string(k) + " does not divide every edge slope");
    }
    e.slope = IVec2{e.slope.x / k, e.slope.y / k};
    e.length *= Rat(k);
  }
  return out;
}

}  // namespace tropabel
