#include "pellspace/graph.hpp"

#include <algorithm>
#include <bit>

namespace pellspace {

int Graph::degree(int v) const { return std::popcount(adj[v]); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has_edge(u, v)) e.emplace_back(u, v);
  return e;
}

Graph complement(const Graph& g) {
  Graph c(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::uint64_t seen = 0;
  for (int s = 0; s < g.n; ++s) {
    if ((seen >> s) & 1) continue;
    std::uint64_t comp = 0, frontier = std::uint64_t(1) << s;
    while (frontier) {
      comp |= frontier;
      std::uint64_t next = 0;
      for (int v = 0; v < g.n; ++v)
        if ((frontier >> v) & 1) next |= g.adj[v];
      frontier = next & ~comp;
    }
    seen |= comp;
    std::vector<int> verts;
    for (int v = 0; v < g.n; ++v)
      if ((comp >> v) & 1) verts.push_back(v);
    comps.push_back(std::move(verts));
  }
  return comps;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  Graph sub(static_cast<int>(vertices.size()));
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (g.has_edge(vertices[i], vertices[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
  return sub;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph u(a.n + b.n);
  for (int v = 0; v < a.n; ++v) u.adj[v] = a.adj[v];
  for (int v = 0; v < b.n; ++v) u.adj[a.n + v] = b.adj[v] << a.n;
  return u;
}

namespace {

bool extend(const Graph& a, const Graph& b, std::vector<int>& map_ab,
            std::uint64_t used_b, const std::vector<int>& order, size_t pos) {
  if (pos == order.size()) return true;
  const int u = order[pos];
  for (int v = 0; v < b.n; ++v) {
    if ((used_b >> v) & 1) continue;
    if (a.degree(u) != b.degree(v)) continue;
    bool ok = true;
    for (size_t q = 0; q < pos && ok; ++q) {
      const int w = order[q];
      if (a.has_edge(u, w) != b.has_edge(v, map_ab[w])) ok = false;
    }
    if (!ok) continue;
    map_ab[u] = v;
    if (extend(a, b, map_ab, used_b | (std::uint64_t(1) << v), order, pos + 1)) return true;
    map_ab[u] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.n != b.n) return std::nullopt;
  std::vector<int> deg_a(a.n), deg_b(b.n);
  for (int v = 0; v < a.n; ++v) deg_a[v] = a.degree(v);
  for (int v = 0; v < b.n; ++v) deg_b[v] = b.degree(v);
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> order(a.n);
  for (int v = 0; v < a.n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return deg_a[x] > deg_a[y]; });
  std::vector<int> map_ab(a.n, -1);
  if (extend(a, b, map_ab, 0, order, 0)) return map_ab;
  return std::nullopt;
}

namespace {

void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  const std::uint64_t px = p | x;
  int pivot = std::countr_zero(px);
  for (int v = 0; v < g.n; ++v)
    if (((px >> v) & 1) && g.degree(v) > g.degree(pivot)) pivot = v;
  std::uint64_t candidates = p & ~g.adj[pivot];
  while (candidates) {
    const int v = std::countr_zero(candidates);
    const std::uint64_t bit = std::uint64_t(1) << v;
    candidates &= ~bit;
    bron_kerbosch(g, r | bit, p & g.adj[v], x & g.adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::vector<std::uint64_t> maximal_cliques(const Graph& g) {
  std::vector<std::uint64_t> out;
  const std::uint64_t all = g.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n) - 1;
  bron_kerbosch(g, 0, all, 0, out);
  return out;
}

}  // namespace pellspace
