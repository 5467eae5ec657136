#include "simdim/strong_resolving.hpp"

#include "simdim/errors.hpp"

namespace simdim {

std::vector<std::pair<int, int>> StrongResolvingGraph::edges() const {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = adj[u].find_next(u); v >= 0; v = adj[u].find_next(v)) es.emplace_back(u, v);
  return es;
}

int StrongResolvingGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n; ++v) twice += adj[v].count();
  return twice / 2;
}

std::vector<int> StrongResolvingGraph::isolated_vertices() const {
  std::vector<int> iso;
  for (int v = 0; v < n; ++v)
    if (adj[v].none()) iso.push_back(v);
  return iso;
}

bool StrongResolvingGraph::is_complete() const {
  for (int v = 0; v < n; ++v)
    if (adj[v].count() != n - 1) return false;
  return true;
}

bool is_maximally_distant(const DistanceMatrix& d, const LabeledGraph& g, int u, int v) {
  if (u == v) throw PreconditionError("maximally distant requires two distinct vertices");
  if (!d.all_reachable()) throw DisconnectedError("maximally distant requires a connected graph");
  const int duv = d(u, v);
  for (int w = g.adj[u].find_first(); w >= 0; w = g.adj[u].find_next(w))
    if (d(v, w) > duv) return false;
  return true;
}

namespace {

StrongResolvingGraph sr_from(const LabeledGraph& g, const DistanceMatrix& d) {
  // md[u] holds the set of v such that u is maximally distant from v.
  std::vector<Bitset> md(g.n, Bitset(g.n));
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v) {
      if (u == v) continue;
      const int duv = d(u, v);
      bool ok = true;
      for (int w = g.adj[u].find_first(); w >= 0; w = g.adj[u].find_next(w))
        if (d(v, w) > duv) {
          ok = false;
          break;
        }
      if (ok) md[u].set(v);
    }
  StrongResolvingGraph sr;
  sr.n = g.n;
  sr.labels = g.labels;
  sr.adj.assign(g.n, Bitset(g.n));
  for (int u = 0; u < g.n; ++u) sr.adj[u] = md[u];
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (sr.adj[u].test(v) && !md[v].test(u)) sr.adj[u].reset(v);
  return sr;
}

}  // namespace

StrongResolvingGraph strong_resolving_graph(const LabeledGraph& g) {
  if (!is_connected(g)) throw DisconnectedError("strong resolving graph requires a connected graph");
  DistanceMatrix d = all_pairs_distances(g);
  return sr_from(g, d);
}

std::vector<std::pair<int, int>> mmd_pairs(const LabeledGraph& g) {
  return strong_resolving_graph(g).edges();
}

VertexSubset boundary(const LabeledGraph& g) {
  StrongResolvingGraph sr = strong_resolving_graph(g);
  VertexSubset s;
  s.role = SubsetRole::Boundary;
  for (int v = 0; v < g.n; ++v)
    if (sr.adj[v].any()) s.vertices.push_back(v);
  return s;
}

VertexSubset simplicial_vertices(const LabeledGraph& g) {
  VertexSubset s;
  s.role = SubsetRole::Simplicial;
  for (int v = 0; v < g.n; ++v) {
    bool simplicial = true;
    for (int u = g.adj[v].find_first(); simplicial && u >= 0; u = g.adj[v].find_next(u)) {
      Bitset rest = g.adj[v];
      rest.reset(u);
      if (!rest.is_subset_of(g.adj[u])) simplicial = false;
    }
    if (simplicial) s.vertices.push_back(v);
  }
  return s;
}

StrongResolvingGraph union_sr_graph(const GraphFamily& f) {
  require_connected_members(f);
  StrongResolvingGraph u;
  u.n = f.n();
  u.labels = f.labels;
  u.source = "union of " + std::to_string(f.size()) + " members";
  u.adj.assign(u.n, Bitset(u.n));
  for (const auto& g : f.members) {
    StrongResolvingGraph sr = strong_resolving_graph(g);
    for (int v = 0; v < u.n; ++v) u.adj[v] |= sr.adj[v];
  }
  return u;
}

}  // namespace simdim
