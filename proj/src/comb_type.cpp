#include "tropabel/comb_type.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "tropabel/error.hpp"

namespace tropabel {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

bool is_connected(int n, const EdgeList& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int components = n;
  for (const auto& [u, v] : edges) {
    const int a = find(u);
    const int b = find(v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

// Pairs up the remaining stubs, lowest vertex first.
void match_stubs(std::vector<int>& remaining, EdgeList& current, int last_partner, std::vector<EdgeList>& out) {
  const auto it = std::find_if(remaining.begin(), remaining.end(), [](int r) { return r > 0; });
  if (it == remaining.end()) {
    out.push_back(current);
    return;
  }
  const int v = static_cast<int>(it - remaining.begin());
  const bool continuing = !current.empty() && current.back().first == v;
  const int start = continuing ? last_partner : v;
  for (int w = start; w < static_cast<int>(remaining.size()); ++w) {
    const auto vi = static_cast<std::size_t>(v);
    const auto wi = static_cast<std::size_t>(w);
    if (w == v ? remaining[vi] < 2 : remaining[wi] < 1) continue;
    --remaining[vi];
    --remaining[wi];
    current.emplace_back(v, w);
    match_stubs(remaining, current, w, out);
    current.pop_back();
    ++remaining[vi];
    ++remaining[wi];
  }
}

}  // namespace

EdgeList canonical_edges(int vertex_count, int legs, const EdgeList& edges) {
  std::vector<int> perm(static_cast<std::size_t>(vertex_count));
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  bool first = true;
  do {
    EdgeList mapped;
    mapped.reserve(edges.size());
    for (const auto& [u, v] : edges) {
      const int a = perm[static_cast<std::size_t>(u)];
      const int b = perm[static_cast<std::size_t>(v)];
      mapped.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = std::move(mapped);
      first = false;
    }
  } while (std::next_permutation(perm.begin() + legs, perm.end()));
  return best;
}

std::vector<CombType> trivalent_graphs(int genus, int legs) {
  if (genus < 1 || legs < 0) throw Error(ErrorCode::InvalidArgument, "genus must be positive and legs non-negative");
  const int trivalent = 2 * genus - 2;
  const int n = legs + trivalent;
  if (n == 0) return {};
  std::vector<int> degrees(static_cast<std::size_t>(n), 3);
  std::fill(degrees.begin(), degrees.begin() + legs, 2);

  std::vector<EdgeList> raw;
  EdgeList current;
  match_stubs(degrees, current, 0, raw);

  std::set<EdgeList> seen;
  for (const auto& edges : raw) {
    if (!is_connected(n, edges)) continue;
    seen.insert(canonical_edges(n, legs, edges));
  }
  std::vector<CombType> out;
  for (const auto& edges : seen) out.push_back(CombType{genus, n, legs, edges});
  return out;
}

std::vector<CombType> generate_comb_types(int g) {
  if (g < 1 || g > 3) throw Error(ErrorCode::UnsupportedGenus, "genus " + std::to_string(g) + " is outside {1, 2, 3}");
  return trivalent_graphs(g, g);
}

}  // namespace tropabel
