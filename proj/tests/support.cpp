#include "support.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace fixtures {

RMat2 rmat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return RMat2(Rat(a), Rat(b), Rat(c), Rat(d)); }

ParamCurve figure_a() {
  ParamCurve pc{TropicalTorus(rmat(12, 2, 3, 8)), 8, {}, {}, 0, RVec2{Rat(3), Rat(2)}};
  // vertices: (3,2) (4,3) (6,3) (8,5) (4,5) (5,6) (9,6) (11,8)
  const auto edge = [&](int u, int v, std::int64_t l, IVec2 n, std::optional<IVec2> w = std::nullopt) {
    pc.edges.push_back(CurveEdge{u, v, Rat(l), n, w});
  };
  edge(0, 1, 1, {1, 1});
  edge(1, 4, 2, {0, 1});
  edge(1, 2, 2, {1, 0});
  edge(2, 3, 2, {1, 1});
  edge(4, 5, 1, {1, 1});
  edge(5, 6, 4, {1, 0});
  edge(6, 7, 2, {1, 1});
  edge(7, 4, 5, {1, 0}, IVec2{1, 0});
  edge(3, 0, 7, {1, 0}, IVec2{1, 0});
  edge(5, 0, 4, {0, 1}, IVec2{0, 1});
  edge(3, 2, 6, {0, 1}, IVec2{0, 1});
  edge(7, 6, 6, {0, 1}, IVec2{0, 1});
  return pc;
}

ParamCurve figure_b() {
  ParamCurve pc{TropicalTorus(rmat(8, -2, -4, 6)), 2, {}, {}, 0, RVec2{Rat(4), Rat(6)}};
  pc.edges.push_back(CurveEdge{0, 1, Rat(4), {1, -1}, std::nullopt});
  pc.edges.push_back(CurveEdge{1, 0, Rat(2), {2, 0}, IVec2{1, 0}});
  pc.edges.push_back(CurveEdge{0, 1, Rat(2), {1, 1}, IVec2{0, 1}});
  return pc;
}

ParamCurve loop_curve(const TropicalTorus& t, IVec2 n, const Rat& l, IVec2 w) {
  ParamCurve pc{t, 1, {}, {}, 0, RVec2{Rat(0), Rat(0)}};
  pc.edges.push_back(CurveEdge{0, 0, l, n, w});
  return pc;
}

SkewForm random_skew_form(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  for (;;) {
    const IMat2 C(dist(rng), dist(rng), dist(rng), dist(rng));
    if (C(0, 0) * C(1, 1) - C(0, 1) * C(1, 0) != 0) return SkewForm{C, dist(rng)};
  }
}

}  // namespace fixtures

namespace oracle {

std::int64_t det4(const IMat4& a) {
  std::array<int, 4> p{0, 1, 2, 3};
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) inversions += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
    }
    std::int64_t term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < 4; ++i) term *= a[i][static_cast<std::size_t>(p[i])];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

IMat4 mul4(const IMat4& a, const IMat4& b) {
  IMat4 c{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t k = 0; k < 4; ++k) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

namespace {

// Cramer's rule for a 3x3 rational system; false when singular.
bool solve3(const std::array<std::array<Rat, 3>, 3>& m, const std::array<Rat, 3>& r, std::array<Rat, 3>& x) {
  const auto det = [](const std::array<std::array<Rat, 3>, 3>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  const Rat d = det(m);
  if (d.is_zero()) return false;
  for (std::size_t c = 0; c < 3; ++c) {
    auto mc = m;
    for (std::size_t i = 0; i < 3; ++i) mc[i][c] = r[i];
    x[c] = det(mc) / d;
  }
  return true;
}

bool lex_less(const std::vector<IVec2>& a, const std::vector<IVec2>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const IVec2& p, const IVec2& q) {
    return p.x != q.x ? p.x < q.x : p.y < q.y;
  });
}

std::vector<IVec2> sorted(std::vector<IVec2> v) {
  std::sort(v.begin(), v.end(), [](const IVec2& p, const IVec2& q) { return p.x != q.x ? p.x < q.x : p.y < q.y; });
  return v;
}

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) { return std::gcd(std::gcd(a, b), c); }

}  // namespace

std::vector<ThetaCurve> theta_curves(const TropicalTorus& t, const IMat2& B, const RVec2& p1, const RVec2& p2,
                                     int slope_bound, int lift_bound) {
  const RMat2 P = to_rational(B) * t.S().transpose();
  const RMat2& Si = t.S_inverse();
  std::vector<ThetaCurve> out;
  const int sb = slope_bound;
  for (std::int64_t a = -sb; a <= sb; ++a) {
    for (std::int64_t b = -sb; b <= sb; ++b) {
      for (std::int64_t c = -sb; c <= sb; ++c) {
        for (std::int64_t d = -sb; d <= sb; ++d) {
          const IVec2 n1{a, b}, n2{c, d}, n3{-a - c, -b - d};
          if (n1.is_zero() || n2.is_zero() || n3.is_zero()) continue;
          if (std::max(std::llabs(n3.x), std::llabs(n3.y)) > sb) continue;
          const std::int64_t det = a * d - b * c;
          if (det == 0) continue;
          // one representative per unordered triple up to overall sign
          const std::vector<IVec2> triple{n1, n2, n3};
          const auto s = sorted(triple);
          const auto neg = sorted({-n1, -n2, -n3});
          if (s != triple || lex_less(neg, s)) continue;

          std::array<std::array<Rat, 3>, 3> m;
          for (std::size_t i = 0; i < 3; ++i) {
            const IVec2& n = triple[i];
            m[0][i] = Rat(n.x * n.x);
            m[1][i] = Rat(n.x * n.y);
            m[2][i] = Rat(n.y * n.y);
          }
          if (!(P(0, 1) == P(1, 0))) continue;
          std::array<Rat, 3> l;
          if (!solve3(m, {P(0, 0), P(0, 1), P(1, 1)}, l)) continue;
          if (std::any_of(l.begin(), l.end(), [](const Rat& x) { return x.sign() <= 0; })) continue;

          const auto rv = [](const IVec2& n) { return RVec2{Rat(n.x), Rat(n.y)}; };
          bool integral = true;
          for (std::size_t i = 1; i < 3; ++i) {
            const RVec2 w = Si * (l[i] * rv(triple[i]) - l[0] * rv(triple[0]));
            integral = integral && w.x.is_integer() && w.y.is_integer();
          }
          if (!integral) continue;

          const std::int64_t g = gcd3(std::gcd(n1.x, n1.y), std::gcd(n2.x, n2.y), std::gcd(n3.x, n3.y));
          for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
              const IVec2& ni = triple[static_cast<std::size_t>(i)];
              const IVec2& nj = triple[static_cast<std::size_t>(j)];
              for (std::int64_t u = -lift_bound; u <= lift_bound; ++u) {
                for (std::int64_t v = -lift_bound; v <= lift_bound; ++v) {
                  // s2 nj - s1 ni = p2 - p1 + S (u, v)
                  const RVec2 r = p2 - p1 + t.S() * RVec2{Rat(u), Rat(v)};
                  Rat s1, s2;
                  if (i == j) {
                    // same edge: r must be parallel to ni
                    if (!(Rat(ni.x) * r.y - Rat(ni.y) * r.x).is_zero()) continue;
                    return {};  // non-generic configuration; signal by an empty answer
                  }
                  const Rat dd = Rat(nj.x * -ni.y - nj.y * -ni.x);
                  s2 = (r.x * Rat(-ni.y) - r.y * Rat(-ni.x)) / dd;
                  s1 = (Rat(nj.x) * r.y - Rat(nj.y) * r.x) / dd;
                  if (s1.sign() <= 0 || s2.sign() <= 0) continue;
                  if (!(s1 < l[static_cast<std::size_t>(i)]) || !(s2 < l[static_cast<std::size_t>(j)])) continue;
                  ThetaCurve tc;
                  tc.slopes = triple;
                  tc.lengths = {l[0], l[1], l[2]};
                  tc.edge1 = i;
                  tc.edge2 = j;
                  tc.s1 = s1;
                  tc.s2 = s2;
                  tc.gcd = g;
                  tc.multiplicity = g * det * det;
                  out.push_back(tc);
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

namespace {

using Adj = std::vector<std::vector<int>>;

std::string adj_string(const Adj& a) {
  std::string s;
  for (const auto& row : a) {
    for (int x : row) s += static_cast<char>('0' + x);
    s += '|';
  }
  return s;
}

std::string canonical(const Adj& a, int legs) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    Adj b(a.size(), std::vector<int>(a.size()));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        b[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] =
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
    }
    const std::string s = adj_string(b);
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin() + legs, perm.end()));
  return best;
}

bool connected(const Adj& a) {
  const std::size_t n = a.size();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < n; ++y) {
      if (a[x][y] > 0 && !seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

// a[i][i] counts loops; a loop contributes 2 to the degree.
void fill(Adj& a, const std::vector<int>& degree, std::size_t i, std::size_t j, int legs, std::set<std::string>& out) {
  const std::size_t n = a.size();
  if (i == n) {
    if (connected(a)) out.insert(canonical(a, legs));
    return;
  }
  if (j == n) {
    int deg = 0;
    for (std::size_t k = 0; k < n; ++k) deg += k == i ? 2 * a[i][k] : a[i][k];
    if (deg == degree[i]) fill(a, degree, i + 1, i + 1, legs, out);
    return;
  }
  for (int m = 0; m <= 3; ++m) {
    a[i][j] = a[j][i] = m;
    int deg_i = 0, deg_j = 0;
    for (std::size_t k = 0; k < n; ++k) {
      deg_i += k == i ? 2 * a[i][k] : a[i][k];
      deg_j += k == j ? 2 * a[j][k] : a[j][k];
    }
    if (deg_i <= degree[i] && deg_j <= degree[j]) fill(a, degree, i, j + 1, legs, out);
  }
  a[i][j] = a[j][i] = 0;
}

}  // namespace

std::set<std::string> graph_classes(int genus, int legs) {
  const int n = legs + 2 * genus - 2;
  std::vector<int> degree(static_cast<std::size_t>(n), 3);
  std::fill(degree.begin(), degree.begin() + legs, 2);
  Adj a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  std::set<std::string> out;
  fill(a, degree, 0, 0, legs, out);
  return out;
}

std::string adjacency_key(int vertex_count, int legs, const std::vector<std::pair<int, int>>& edges) {
  Adj a(static_cast<std::size_t>(vertex_count), std::vector<int>(static_cast<std::size_t>(vertex_count), 0));
  for (const auto& [u, v] : edges) {
    if (u == v) {
      a[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] += 1;
    } else {
      a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] += 1;
      a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] += 1;
    }
  }
  return canonical(a, legs);
}

}  // namespace oracle
