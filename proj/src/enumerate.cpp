#include "tropabel/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <set>

#include "tropabel/matrix.hpp"

namespace tropabel {

namespace {

// Spanning tree, fundamental cycles and marked-point paths of one type.
struct TypeData {
  CombType type;
  int edge_count = 0;
  std::vector<char> in_tree;
  std::vector<int> non_tree;                  // edge index of the i-th flow
  std::vector<std::vector<int>> cycle;        // [i][e] coefficient of e in cycle i
  std::vector<std::vector<int>> leg_path;     // [j][e] coefficient of e on the tree path base -> leg j
};

TypeData prepare(const CombType& type) {
  TypeData td;
  td.type = type;
  td.edge_count = static_cast<int>(type.edges.size());
  const auto n = static_cast<std::size_t>(type.vertex_count);
  const auto e_count = type.edges.size();
  td.in_tree.assign(e_count, 0);

  std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<int> order{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int x = order[head];
    for (std::size_t e = 0; e < e_count; ++e) {
      const auto [u, v] = type.edges[e];
      if (u == v || (u != x && v != x)) continue;
      const int y = u == x ? v : u;
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      parent[static_cast<std::size_t>(y)] = x;
      parent_edge[static_cast<std::size_t>(y)] = static_cast<int>(e);
      depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
      td.in_tree[e] = 1;
      order.push_back(y);
    }
  }

  // Coefficients of the tree path x -> y; an edge traversed along its u -> v
  // orientation counts +1.
  const auto path = [&](int x, int y) {
    std::vector<int> c(e_count, 0);
    const auto up = [&](int& a) {
      const auto e = static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(a)]);
      c[e] += type.edges[e].first == a ? 1 : -1;
      a = parent[static_cast<std::size_t>(a)];
    };
    const auto down = [&](int& b) {
      const auto e = static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(b)]);
      c[e] += type.edges[e].first == parent[static_cast<std::size_t>(b)] ? 1 : -1;
      b = parent[static_cast<std::size_t>(b)];
    };
    while (depth[static_cast<std::size_t>(x)] > depth[static_cast<std::size_t>(y)]) up(x);
    while (depth[static_cast<std::size_t>(y)] > depth[static_cast<std::size_t>(x)]) down(y);
    while (x != y) {
      up(x);
      down(y);
    }
    return c;
  };

  for (std::size_t e = 0; e < e_count; ++e) {
    if (td.in_tree[e]) continue;
    td.non_tree.push_back(static_cast<int>(e));
    const auto [u, v] = type.edges[e];
    std::vector<int> c = path(v, u);
    c[e] += 1;
    td.cycle.push_back(std::move(c));
  }
  for (int j = 0; j < type.legs; ++j) td.leg_path.push_back(path(0, j));
  return td;
}

struct Context {
  const TropicalTorus& torus;
  IMat2 B;
  int g = 0;
  std::vector<RVec2> points;
  SearchBounds bounds;
};

struct ItemOutput {
  std::vector<EnumeratedCurve> curves;
  std::vector<std::string> warnings;
};

// All windings (lambda_0 .. lambda_{g-1}) with B = sum_i v_i lambda_i^T. The
// free part for g = 3 is searched inside the winding bound.
std::vector<std::vector<IVec2>> winding_candidates(const std::vector<IVec2>& flows, const IMat2& B, int bound) {
  std::vector<std::vector<IVec2>> out;
  const int g = static_cast<int>(flows.size());

  // Solves [v_i v_j] [l_i^T; l_j^T] = R for integral l_i, l_j.
  const auto solve_pair = [](const IVec2& vi, const IVec2& vj, const IMat2& R, IVec2& li, IVec2& lj) {
    const std::int64_t d = vi.x * vj.y - vj.x * vi.y;
    if (d == 0) return false;
    for (int c = 0; c < 2; ++c) {
      const std::int64_t a = vj.y * R(0, c) - vj.x * R(1, c);
      const std::int64_t b = -vi.y * R(0, c) + vi.x * R(1, c);
      if (a % d != 0 || b % d != 0) return false;
      li[c] = a / d;
      lj[c] = b / d;
    }
    return true;
  };

  if (g == 1) {
    const IVec2& v = flows[0];
    const int r = v.x != 0 ? 0 : 1;
    IVec2 l;
    for (int c = 0; c < 2; ++c) {
      if (B(r, c) % v[r] != 0) return out;
      l[c] = B(r, c) / v[r];
    }
    for (int rr = 0; rr < 2; ++rr) {
      for (int c = 0; c < 2; ++c) {
        if (B(rr, c) != v[rr] * l[c]) return out;
      }
    }
    out.push_back({l});
    return out;
  }
  if (g == 2) {
    std::vector<IVec2> l(2);
    if (solve_pair(flows[0], flows[1], B, l[0], l[1])) out.push_back(l);
    return out;
  }
  // g == 3
  const int pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (const auto& p : pairs) {
    const IVec2& vi = flows[static_cast<std::size_t>(p[0])];
    const IVec2& vj = flows[static_cast<std::size_t>(p[1])];
    if (vi.x * vj.y - vj.x * vi.y == 0) continue;
    const IVec2& vk = flows[static_cast<std::size_t>(p[2])];
    for (std::int64_t a = -bound; a <= bound; ++a) {
      for (std::int64_t b = -bound; b <= bound; ++b) {
        const IVec2 lk{a, b};
        const IMat2 R(B(0, 0) - vk.x * a, B(0, 1) - vk.x * b, B(1, 0) - vk.y * a, B(1, 1) - vk.y * b);
        std::vector<IVec2> l(3);
        l[static_cast<std::size_t>(p[2])] = lk;
        if (solve_pair(vi, vj, R, l[static_cast<std::size_t>(p[0])], l[static_cast<std::size_t>(p[1])])) out.push_back(l);
      }
    }
    return out;
  }
  return out;
}

std::int64_t max_abs(const IVec2& v) { return std::max<std::int64_t>(std::llabs(v.x), std::llabs(v.y)); }

// Exact solver for the edge lengths of one (type, slopes) pair.
class LengthSystem {
 public:
  LengthSystem(const TypeData& td, const std::vector<IVec2>& slopes, int g) : edges_(static_cast<std::size_t>(td.edge_count)) {
    rows_ = static_cast<std::size_t>(4 * g - 2);
    RatMatrix aug(rows_, edges_ + rows_);
    for (std::size_t e = 0; e < edges_; ++e) {
      for (std::size_t i = 0; i < td.cycle.size(); ++i) {
        const int c = td.cycle[i][e];
        if (c == 0) continue;
        aug(2 * i, e) = Rat(c * slopes[e].x);
        aug(2 * i + 1, e) = Rat(c * slopes[e].y);
      }
      for (std::size_t j = 1; j < td.leg_path.size(); ++j) {
        const int c = td.leg_path[j][e];
        if (c == 0) continue;
        const std::size_t r = 2 * td.cycle.size() + 2 * (j - 1);
        aug(r, e) = Rat(c * slopes[e].x);
        aug(r + 1, e) = Rat(c * slopes[e].y);
      }
    }
    for (std::size_t r = 0; r < rows_; ++r) aug(r, edges_ + r) = Rat(1);
    rank_ = aug.rref(edges_).size();
    reduced_ = std::move(aug);
  }

  bool full_rank() const { return rank_ == edges_; }

  bool consistent(const std::vector<Rat>& rhs) const {
    for (std::size_t r = rank_; r < rows_; ++r) {
      if (!apply_row(r, rhs).is_zero()) return false;
    }
    return true;
  }

  /// Only meaningful when full_rank() and consistent(rhs).
  std::vector<Rat> lengths(const std::vector<Rat>& rhs) const {
    std::vector<Rat> l(edges_);
    for (std::size_t e = 0; e < edges_; ++e) l[e] = apply_row(e, rhs);
    return l;
  }

 private:
  Rat apply_row(std::size_t r, const std::vector<Rat>& rhs) const {
    Rat s;
    for (std::size_t k = 0; k < rows_; ++k) {
      const Rat& m = reduced_(r, edges_ + k);
      if (!m.is_zero() && !rhs[k].is_zero()) s += m * rhs[k];
    }
    return s;
  }

  std::size_t edges_;
  std::size_t rows_ = 0;
  std::size_t rank_ = 0;
  RatMatrix reduced_;
};

// Odometer over integer vectors in [-bound, bound]^2, optionally skipping 0.
std::vector<IVec2> box(int bound, bool skip_zero) {
  std::vector<IVec2> out;
  for (std::int64_t x = -bound; x <= bound; ++x) {
    for (std::int64_t y = -bound; y <= bound; ++y) {
      if (skip_zero && x == 0 && y == 0) continue;
      out.push_back({x, y});
    }
  }
  return out;
}

void solve_and_emit(const Context& ctx, const TypeData& td, int type_index, const std::vector<IVec2>& flows,
                    const std::vector<IVec2>& slopes, ItemOutput& out) {
  const auto candidates = winding_candidates(flows, ctx.B, ctx.bounds.winding_bound);
  if (candidates.empty()) return;
  const LengthSystem system(td, slopes, ctx.g);
  const int W = ctx.bounds.winding_bound;
  const std::vector<IVec2> lifts = box(W, false);
  const auto& S = ctx.torus.S();
  const std::size_t legs = static_cast<std::size_t>(ctx.g);

  for (const auto& windings : candidates) {
    const bool out_of_bounds = std::any_of(windings.begin(), windings.end(), [&](const IVec2& w) { return max_abs(w) > W; });
    bool winding_saturated = std::any_of(windings.begin(), windings.end(), [&](const IVec2& w) { return max_abs(w) == W; });

    std::vector<Rat> rhs(4 * legs - 2);
    for (std::size_t i = 0; i < windings.size(); ++i) {
      const RVec2 sl = ctx.torus.lattice_vector(windings[i]);
      rhs[2 * i] = sl.x;
      rhs[2 * i + 1] = sl.y;
    }

    // Odometer over the lifts mu_1 .. mu_{g-1} of the marked points 2 .. g.
    std::vector<std::size_t> idx(legs > 0 ? legs - 1 : 0, 0);
    for (;;) {
      bool lift_saturated = false;
      for (std::size_t j = 1; j < legs; ++j) {
        const IVec2& mu = lifts[idx[j - 1]];
        lift_saturated = lift_saturated || max_abs(mu) == W;
        const RVec2 target = ctx.points[j] - ctx.points[0] + S * RVec2{Rat(mu.x), Rat(mu.y)};
        rhs[2 * windings.size() + 2 * (j - 1)] = target.x;
        rhs[2 * windings.size() + 2 * (j - 1) + 1] = target.y;
      }
      if (system.consistent(rhs)) {
        if (!system.full_rank()) {
          throw Error(ErrorCode::NonGenericConfig,
                      "solvable but underdetermined length system for type " + std::to_string(type_index));
        }
        const std::vector<Rat> l = system.lengths(rhs);
        if (std::all_of(l.begin(), l.end(), [](const Rat& x) { return x.sign() > 0; })) {
          ParamCurve pc{ctx.torus, td.type.vertex_count, {}, {}, 0, ctx.points[0]};
          std::size_t flow = 0;
          for (std::size_t e = 0; e < l.size(); ++e) {
            CurveEdge edge{td.type.edges[e].first, td.type.edges[e].second, l[e], slopes[e], std::nullopt};
            if (!td.in_tree[e]) edge.winding = windings[flow++];
            pc.edges.push_back(std::move(edge));
          }
          for (int j = 0; j < ctx.g; ++j) pc.legs.push_back(CurveLeg{j, j + 1});

          const auto diags = validate(pc);
          if (!diags.empty()) throw Error(ErrorCode::Internal, "enumerated curve fails validation: " + diags.front().code);
          if (!(degree(pc) == ctx.B)) throw Error(ErrorCode::Internal, "enumerated curve has the wrong degree");

          if (out_of_bounds) {
            out.warnings.push_back("BoundsTooTight: a curve was rejected only because a winding exceeds winding_bound");
          } else {
            try {
              Multiplicity m = mikhalkin_multiplicity(pc);
              std::string key = curve_key(pc);
              out.curves.push_back(EnumeratedCurve{std::move(pc), std::move(m), std::move(key), type_index});
              if (winding_saturated || lift_saturated) {
                out.warnings.push_back("BoundsTooTight: an accepted curve attains winding_bound");
              }
            } catch (const Error& err) {
              if (err.code() != ErrorCode::FlatVertex) throw;
              out.warnings.push_back("skipped a curve with a flat vertex");
            }
          }
        }
      }
      // advance odometer
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == lifts.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
    winding_saturated = false;
  }
}

void run_item(const Context& ctx, const TypeData& td, int type_index, const IVec2& first_flow, ItemOutput& out) {
  const int sb = ctx.bounds.slope_bound;
  const auto flows_box = box(sb, true);
  const std::size_t g = td.non_tree.size();
  std::vector<IVec2> flows(g);
  flows[0] = first_flow;
  std::vector<std::size_t> idx(g - 1, 0);
  std::vector<IVec2> slopes(static_cast<std::size_t>(td.edge_count));
  for (;;) {
    for (std::size_t i = 1; i < g; ++i) flows[i] = flows_box[idx[i - 1]];
    bool ok = true;
    bool saturated = false;
    for (std::size_t e = 0; e < slopes.size() && ok; ++e) {
      IVec2 n{0, 0};
      for (std::size_t i = 0; i < g; ++i) {
        const int c = td.cycle[i][e];
        if (c != 0) n += IVec2{c * flows[i].x, c * flows[i].y};
      }
      const std::int64_t m = max_abs(n);
      ok = m != 0 && m <= sb;
      saturated = saturated || m == sb;
      slopes[e] = n;
    }
    if (ok) {
      const std::size_t before = out.curves.size();
      solve_and_emit(ctx, td, type_index, flows, slopes, out);
      if (saturated && out.curves.size() > before) {
        out.warnings.push_back("BoundsTooTight: an accepted curve attains slope_bound");
      }
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == flows_box.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
}

struct WorkItem {
  std::size_t type_index;
  IVec2 first_flow;
};

EnumerationResult run(const TropicalTorus& t, const IMat2& B, int g, const PointConfig& cfg, const SearchBounds& bounds,
                      int jobs, bool parallel) {
  const auto comb_types = generate_comb_types(g);
  if (det2(B) <= 0) throw Error(ErrorCode::InvalidArgument, "degree must have det B > 0");
  if (!check_tropical_polarization(t, comatrix(B))) {
    throw Error(ErrorCode::NoTropicalPolarization, "comatrix(B) is not a tropical polarization of the torus");
  }
  if (static_cast<int>(cfg.points.size()) != g) throw Error(ErrorCode::InvalidArgument, "configuration must have g points");
  if (bounds.slope_bound < 1 || bounds.winding_bound < 1) throw Error(ErrorCode::InvalidArgument, "bounds must be >= 1");

  Context ctx{t, B, g, {}, bounds};
  for (const auto& p : cfg.points) ctx.points.push_back(p.coords);

  std::vector<TypeData> types;
  for (const auto& ct : comb_types) types.push_back(prepare(ct));

  std::vector<WorkItem> items;
  const auto first_flows = box(bounds.slope_bound, true);
  for (std::size_t ti = 0; ti < types.size(); ++ti) {
    for (const auto& f : first_flows) items.push_back({ti, f});
  }

  std::vector<ItemOutput> outputs(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  const auto body = [&](std::size_t i) {
    try {
      run_item(ctx, types[items[i].type_index], static_cast<int>(items[i].type_index), items[i].first_flow, outputs[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (parallel) {
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    const auto n = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < items.size(); ++i) body(i);
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  EnumerationResult res{t, B, g, cfg, bounds, {}, {}, {}};
  std::vector<EnumeratedCurve> all;
  std::set<std::string> warnings;
  for (auto& o : outputs) {
    for (auto& c : o.curves) all.push_back(std::move(c));
    warnings.insert(o.warnings.begin(), o.warnings.end());
  }
  std::sort(all.begin(), all.end(), [](const EnumeratedCurve& a, const EnumeratedCurve& b) {
    return a.key != b.key ? a.key < b.key : a.type_index < b.type_index;
  });
  for (auto& c : all) {
    if (!res.curves.empty() && res.curves.back().key == c.key) continue;
    res.curves.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < res.curves.size(); ++i) res.by_gcd[res.curves[i].multiplicity.gcd].push_back(i);
  res.warnings.assign(warnings.begin(), warnings.end());
  return res;
}

}  // namespace

SearchBounds default_bounds(const IMat2& B) {
  std::int64_t m = 0;
  for (auto b : B.a) m = std::max<std::int64_t>(m, std::llabs(b));
  return SearchBounds{static_cast<int>(m + 1), static_cast<int>(std::max<std::int64_t>(2, m))};
}

std::string curve_key(const ParamCurve& pc) {
  const auto pos = vertex_positions(pc);
  std::vector<std::string> parts;
  for (const auto& e : pc.edges) {
    RVec2 start = pos[static_cast<std::size_t>(e.u)];
    IVec2 n = e.slope;
    if (n.x < 0 || (n.x == 0 && n.y < 0)) {
      start = start + e.length * RVec2{Rat(n.x), Rat(n.y)};
      n = -n;
    }
    const TorusPoint p = reduce_point(pc.torus, start);
    parts.push_back("e(" + p.coords.x.str() + "," + p.coords.y.str() + ")[" + std::to_string(n.x) + "," +
                    std::to_string(n.y) + "]" + e.length.str());
  }
  std::sort(parts.begin(), parts.end());
  std::vector<CurveLeg> legs = pc.legs;
  std::sort(legs.begin(), legs.end(), [](const CurveLeg& a, const CurveLeg& b) { return a.marker < b.marker; });
  for (const auto& leg : legs) {
    const TorusPoint p = reduce_point(pc.torus, pos[static_cast<std::size_t>(leg.vertex)]);
    parts.push_back("p" + std::to_string(leg.marker) + "(" + p.coords.x.str() + "," + p.coords.y.str() + ")");
  }
  std::string key;
  for (const auto& s : parts) {
    if (!key.empty()) key += ';';
    key += s;
  }
  return key;
}

EnumerationResult enumerate(const TropicalTorus& t, const IMat2& B, int g, const PointConfig& cfg,
                            const SearchBounds& bounds, int jobs) {
  return run(t, B, g, cfg, bounds, jobs, true);
}

EnumerationResult enumerate_serial(const TropicalTorus& t, const IMat2& B, int g, const PointConfig& cfg,
                                   const SearchBounds& bounds) {
  return run(t, B, g, cfg, bounds, 1, false);
}

std::vector<std::string> check_result(const EnumerationResult& res) {
  std::vector<std::string> problems;
  std::size_t partitioned = 0;
  for (const auto& [k, idx] : res.by_gcd) {
    partitioned += idx.size();
    for (auto i : idx) {
      if (i >= res.curves.size() || res.curves[i].multiplicity.gcd != k) problems.push_back("by_gcd entry misfiled");
    }
  }
  if (partitioned != res.curves.size()) problems.push_back("by_gcd is not a partition of the curves");
  for (std::size_t i = 0; i < res.curves.size(); ++i) {
    const auto& pc = res.curves[i].curve;
    const std::string where = "curve " + std::to_string(i);
    if (!validate(pc).empty()) {
      problems.push_back(where + ": invalid");
      continue;
    }
    if (!(degree(pc) == res.B)) problems.push_back(where + ": degree mismatch");
    if (pc.genus() != res.genus) problems.push_back(where + ": genus mismatch");
    if (static_cast<int>(pc.edges.size()) != 4 * res.genus - 3) problems.push_back(where + ": edge count is not 4g-3");
    if (pc.legs.size() != res.config.points.size()) {
      problems.push_back(where + ": leg count mismatch");
      continue;
    }
    const auto pos = vertex_positions(pc);
    for (const auto& leg : pc.legs) {
      const auto m = static_cast<std::size_t>(leg.marker);
      if (m < 1 || m > res.config.points.size() ||
          !(reduce_point(pc.torus, pos[static_cast<std::size_t>(leg.vertex)]) == res.config.points[m - 1])) {
        problems.push_back(where + ": misses marked point " + std::to_string(leg.marker));
      }
    }
    if (!(mikhalkin_multiplicity(pc) == res.curves[i].multiplicity)) problems.push_back(where + ": multiplicity mismatch");
  }
  return problems;
}

std::int64_t tropical_invariant(const EnumerationResult& res, std::int64_t k) {
  if (k < 1 || divisibility(res.B) % k != 0) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(k) + " does not divide the divisibility of B");
  }
  std::int64_t total = 0;
  const auto it = res.by_gcd.find(k);
  if (it == res.by_gcd.end()) return 0;
  for (auto i : it->second) total += res.curves[i].multiplicity.total;
  return total;
}

bool bounds_stable(const EnumerationResult& res, int jobs) {
  const SearchBounds doubled{2 * res.bounds.slope_bound, 2 * res.bounds.winding_bound};
  const EnumerationResult wide = enumerate(res.torus, res.B, res.genus, res.config, doubled, jobs);
  if (wide.curves.size() != res.curves.size()) return false;
  for (std::size_t i = 0; i < wide.curves.size(); ++i) {
    if (wide.curves[i].key != res.curves[i].key) return false;
  }
  return true;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw Error(ErrorCode::Internal, "integer power overflow");
  }
  return r;
}

BijectionReport stratum_bijection_check(const EnumerationResult& res_big, const EnumerationResult& res_small,
                                        std::int64_t k) {
  if (!(res_big.torus == res_small.torus) || !(res_big.config == res_small.config) || res_big.genus != res_small.genus) {
    throw Error(ErrorCode::InvalidArgument, "bijection check needs the same torus, configuration and genus");
  }
  if (k < 1 || !(res_big.B == k * res_small.B)) {
    throw Error(ErrorCode::InvalidArgument, "big degree must be k times the small degree");
  }
  BijectionReport rep;
  const int exponent = 4 * res_big.genus - 3;
  std::set<std::string> big_keys;
  if (const auto it = res_big.by_gcd.find(k); it != res_big.by_gcd.end()) {
    for (auto i : it->second) {
      big_keys.insert(res_big.curves[i].key);
      rep.big_total += res_big.curves[i].multiplicity.total;
    }
  }
  std::set<std::string> hit;
  bool scaling_ok = true;
  if (const auto it = res_small.by_gcd.find(1); it != res_small.by_gcd.end()) {
    for (auto i : it->second) {
      const auto& small = res_small.curves[i];
      rep.small_total += small.multiplicity.total;
      const ParamCurve big = dilate(small.curve, k);
      const std::string key = curve_key(big);
      if (big_keys.count(key) == 0) {
        rep.missing.push_back(key);
        continue;
      }
      hit.insert(key);
      if (mikhalkin_multiplicity(big).total != ipow(k, exponent) * small.multiplicity.total) scaling_ok = false;
    }
  }
  for (const auto& key : big_keys) {
    if (hit.count(key) == 0) rep.extra.push_back(key);
  }
  rep.ok = scaling_ok && rep.missing.empty() && rep.extra.empty() && rep.big_total == ipow(k, exponent) * rep.small_total;
  return rep;
}

}  // namespace tropabel
