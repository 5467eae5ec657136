#include "simdim/graph.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "simdim/errors.hpp"

namespace simdim {

int LabeledGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n; ++v) twice += adj[v].count();
  return twice / 2;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = adj[u].find_next(u); v >= 0; v = adj[u].find_next(v)) es.emplace_back(u, v);
  return es;
}

int LabeledGraph::index_of(const std::string& label) const {
  for (int i = 0; i < n; ++i)
    if (labels[i] == label) return i;
  return -1;
}

void LabeledGraph::add_edge(int u, int v) {
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw PreconditionError("edge endpoint out of range");
  if (u == v) throw PreconditionError("self-loop at '" + labels[u] + "'");
  adj[u].set(v);
  adj[v].set(u);
}

LabeledGraph make_empty_graph(std::vector<std::string> labels) {
  LabeledGraph g;
  g.n = static_cast<int>(labels.size());
  g.labels = std::move(labels);
  g.adj.assign(g.n, Bitset(g.n));
  return g;
}

LabeledGraph build_graph(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw PreconditionError("empty vertex label");
    if (!index.emplace(labels[i], static_cast<int>(i)).second)
      throw PreconditionError("duplicate label '" + labels[i] + "'");
  }
  LabeledGraph g = make_empty_graph(labels);
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    if (ia == index.end()) throw PreconditionError("unknown label '" + a + "'");
    auto ib = index.find(b);
    if (ib == index.end()) throw PreconditionError("unknown label '" + b + "'");
    g.add_edge(ia->second, ib->second);  // duplicates collapse in the bitset
  }
  return g;
}

DistanceMatrix all_pairs_distances(const LabeledGraph& g) {
  DistanceMatrix m;
  m.n = g.n;
  m.dist.assign(static_cast<std::size_t>(g.n) * g.n, kUnreachable);
  m.diameter = 0;
  for (int s = 0; s < g.n; ++s) {
    Bitset visited(g.n), frontier(g.n);
    visited.set(s);
    frontier.set(s);
    m.dist[static_cast<std::size_t>(s) * g.n + s] = 0;
    int d = 0;
    while (frontier.any()) {
      Bitset next(g.n);
      for (int v = frontier.find_first(); v >= 0; v = frontier.find_next(v)) next |= g.adj[v];
      next.and_not_assign(visited);
      ++d;
      for (int v = next.find_first(); v >= 0; v = next.find_next(v)) {
        m.dist[static_cast<std::size_t>(s) * g.n + v] = d;
        m.diameter = std::max(m.diameter, d);
      }
      visited |= next;
      frontier = next;
    }
  }
  return m;
}

bool DistanceMatrix::all_reachable() const {
  for (int v : dist)
    if (v == kUnreachable) return false;
  return true;
}

bool is_connected(const LabeledGraph& g) {
  if (g.n <= 1) return true;
  Bitset visited(g.n), frontier(g.n);
  visited.set(0);
  frontier.set(0);
  while (frontier.any()) {
    Bitset next(g.n);
    for (int v = frontier.find_first(); v >= 0; v = frontier.find_next(v)) next |= g.adj[v];
    next.and_not_assign(visited);
    visited |= next;
    frontier = next;
  }
  return visited.count() == g.n;
}

LabeledGraph complement(const LabeledGraph& g) {
  LabeledGraph c = make_empty_graph(g.labels);
  for (int v = 0; v < g.n; ++v) {
    c.adj[v] = g.adj[v];
    c.adj[v].set(v);
    Bitset full(g.n);
    full.set_all();
    c.adj[v] = full.and_not(c.adj[v]);
  }
  return c;
}

TwinKind twin_relation(const LabeledGraph& g, int u, int v) {
  if (u == v) throw PreconditionError("twin_relation requires two distinct vertices");
  if (g.closed_neighborhood(u) == g.closed_neighborhood(v)) return TwinKind::TrueTwins;
  if (g.adj[u] == g.adj[v]) return TwinKind::FalseTwins;
  return TwinKind::NotTwins;
}

LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& w) {
  std::unordered_set<int> seen;
  std::vector<std::string> labels;
  labels.reserve(w.size());
  for (int v : w) {
    if (v < 0 || v >= g.n) throw PreconditionError("vertex out of range");
    if (!seen.insert(v).second) throw PreconditionError("duplicate vertex in subset");
    labels.push_back(g.labels[v]);
  }
  LabeledGraph h = make_empty_graph(std::move(labels));
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (g.adjacent(w[i], w[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

bool is_induced_path_with_leaf(const LabeledGraph& g, const std::vector<int>& w, int leaf) {
  Bitset mask(g.n);
  for (int v : w) {
    if (v < 0 || v >= g.n) throw PreconditionError("vertex out of range");
    mask.set(v);
  }
  if (!mask.test(leaf)) throw PreconditionError("leaf not in subset");
  const int k = mask.count();
  if (k == 1) return true;

  int deg_one = 0;
  int edges_twice = 0;
  for (int v = mask.find_first(); v >= 0; v = mask.find_next(v)) {
    int d = (g.adj[v] & mask).count();
    if (d == 0 || d > 2) return false;
    if (d == 1) ++deg_one;
    edges_twice += d;
  }
  if (deg_one != 2 || edges_twice != 2 * (k - 1)) return false;

  // connected within the mask
  Bitset visited(g.n), frontier(g.n);
  int start = mask.find_first();
  visited.set(start);
  frontier.set(start);
  while (frontier.any()) {
    Bitset next(g.n);
    for (int v = frontier.find_first(); v >= 0; v = frontier.find_next(v)) next |= g.adj[v];
    next &= mask;
    next.and_not_assign(visited);
    visited |= next;
    frontier = next;
  }
  if (visited.count() != k) return false;

  return (g.adj[leaf] & mask).count() == 1;
}

bool VertexSubset::contains(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

GraphFamily make_family(std::vector<LabeledGraph> members, std::vector<std::string> names) {
  if (members.empty()) throw PreconditionError("family must have at least one member");
  if (names.empty()) {
    for (std::size_t i = 0; i < members.size(); ++i) names.push_back("G" + std::to_string(i + 1));
  }
  if (names.size() != members.size())
    throw PreconditionError("family needs one name per member");
  std::unordered_set<std::string> seen;
  for (const auto& name : names)
    if (!seen.insert(name).second) throw PreconditionError("duplicate member name '" + name + "'");
  for (const auto& m : members)
    if (m.labels != members[0].labels)
      throw PreconditionError("family members must share one vertex set in one order");
  GraphFamily f;
  f.labels = members[0].labels;
  f.members = std::move(members);
  f.names = std::move(names);
  return f;
}

GraphFamily singleton_family(LabeledGraph g, std::string name) {
  std::vector<LabeledGraph> ms;
  ms.push_back(std::move(g));
  return make_family(std::move(ms), {std::move(name)});
}

void require_connected_members(const GraphFamily& f) {
  for (int i = 0; i < f.size(); ++i)
    if (!is_connected(f.members[i]))
      throw DisconnectedError("member '" + f.names[i] + "' is not connected");
}

}  // namespace simdim
