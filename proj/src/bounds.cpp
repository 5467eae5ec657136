#include "simdim/bounds.hpp"

#include <algorithm>
#include <bit>

#include "simdim/cover.hpp"
#include "simdim/errors.hpp"
#include "simdim/strong_resolving.hpp"

namespace simdim {

WitnessedValue simultaneous_twin_free_clique_number(const GraphFamily& f) {
  require_connected_members(f);
  if (f.n() < 2) throw PreconditionError("twin-free clique number needs at least two vertices");
  // Auxiliary graph: x~y when the pair is adjacent in every member and a
  // true-twin pair in none. Simultaneous twin-free cliques are exactly its
  // cliques; singletons keep the value at least 1.
  LabeledGraph aux = make_empty_graph(f.labels);
  for (int u = 0; u < f.n(); ++u)
    for (int v = u + 1; v < f.n(); ++v) {
      bool ok = true;
      for (const auto& g : f.members) {
        if (!g.adjacent(u, v) || twin_relation(g, u, v) == TwinKind::TrueTwins) {
          ok = false;
          break;
        }
      }
      if (ok) aux.add_edge(u, v);
    }
  CliqueResult c = max_clique(aux);
  return {c.size, c.witness};
}

namespace {

// Mask-level path test used by the exhaustive rho search. Returns the set of
// vertices with induced degree <= 1 when <mask> is a path, 0 otherwise.
std::uint32_t path_leaf_candidates(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  const int k = std::popcount(mask);
  if (k == 1) return mask;
  std::uint32_t leaves = 0;
  int deg_one = 0, edges_twice = 0;
  for (std::uint32_t m = mask; m; m &= m - 1) {
    int v = std::countr_zero(m);
    int d = std::popcount(adj[v] & mask);
    if (d == 0 || d > 2) return 0;
    if (d == 1) {
      ++deg_one;
      leaves |= 1u << v;
    }
    edges_twice += d;
  }
  if (deg_one != 2 || edges_twice != 2 * (k - 1)) return 0;
  // connectivity inside the mask
  std::uint32_t seen = mask & -mask, frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t m = frontier; m; m &= m - 1) next |= adj[std::countr_zero(m)];
    next &= mask & ~seen;
    seen |= next;
    frontier = next;
  }
  if (seen != mask) return 0;
  return leaves;
}

bool geodesic_path_with_leaf(const LabeledGraph& g, const DistanceMatrix& d,
                             const std::vector<int>& w_set, int leaf) {
  if (!is_induced_path_with_leaf(g, w_set, leaf)) return false;
  const int k = static_cast<int>(w_set.size());
  if (k < 2) return true;
  Bitset mask = Bitset::of(g.n, w_set);
  int a = -1, b = -1;
  for (int v : w_set)
    if ((g.adj[v] & mask).count() == 1) (a < 0 ? a : b) = v;
  return d(a, b) == k - 1;
}

}  // namespace

RhoResult rho_exact(const GraphFamily& f, int exact_limit) {
  require_connected_members(f);
  const int n = f.n();
  if (n > exact_limit || n > 31)
    throw SizeLimitError("exact rho search limited to " +
                         std::to_string(std::min(exact_limit, 31)) + " vertices");
  std::vector<std::vector<std::uint32_t>> adj(f.size(), std::vector<std::uint32_t>(n, 0));
  std::vector<DistanceMatrix> dist;
  for (int i = 0; i < f.size(); ++i) {
    dist.push_back(all_pairs_distances(f.members[i]));
    for (int v = 0; v < n; ++v)
      for (int u = f.members[i].adj[v].find_first(); u >= 0; u = f.members[i].adj[v].find_next(u))
        adj[i][v] |= 1u << u;
  }

  RhoResult best;
  best.rho = -1;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int k = std::popcount(mask);
    if (k <= best.rho + 1) continue;
    std::uint32_t common = mask;
    for (int i = 0; i < f.size() && common; ++i) {
      std::uint32_t leaves = path_leaf_candidates(adj[i], mask);
      if (k >= 2 && leaves) {
        // geodesic condition: the path ends must realize the path length
        int a = std::countr_zero(leaves);
        int b = 31 - std::countl_zero(leaves);
        if (dist[i](a, b) != k - 1) leaves = 0;
      }
      common &= leaves;
    }
    if (!common) continue;
    best.rho = k - 1;
    best.common_leaf = std::countr_zero(common);
    best.witness.clear();
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) best.witness.push_back(v);
  }
  best.exact = true;
  return best;
}

RhoResult rho_heuristic_lower_bound(const GraphFamily& f) {
  require_connected_members(f);
  const int n = f.n();
  std::vector<DistanceMatrix> dist;
  for (const auto& g : f.members) dist.push_back(all_pairs_distances(g));
  RhoResult best;
  best.exact = false;
  best.rho = 0;
  best.witness = {0};
  best.common_leaf = 0;

  for (int i = 0; i < f.size(); ++i) {
    const LabeledGraph& g = f.members[i];
    for (int w = 0; w < n; ++w) {
      // BFS tree from w with lowest-index parents; shortest paths are
      // induced paths, so each w..x path is a candidate W.
      std::vector<int> parent(n, -1), order;
      Bitset visited(n), frontier(n);
      visited.set(w);
      frontier.set(w);
      while (frontier.any()) {
        Bitset next(n);
        for (int v = frontier.find_first(); v >= 0; v = frontier.find_next(v)) {
          Bitset fresh = g.adj[v].and_not(visited).and_not(next);
          for (int u = fresh.find_first(); u >= 0; u = fresh.find_next(u)) {
            parent[u] = v;
            next.set(u);
          }
        }
        visited |= next;
        frontier = next;
      }
      for (int x = 0; x < n; ++x) {
        if (x == w || parent[x] < 0) continue;
        std::vector<int> path;
        for (int v = x; v >= 0; v = parent[v]) path.push_back(v);
        if (static_cast<int>(path.size()) - 1 <= best.rho) continue;
        bool ok = true;
        for (int j = 0; j < f.size(); ++j)
          if (!geodesic_path_with_leaf(f.members[j], dist[j], path, w)) {
            ok = false;
            break;
          }
        if (ok) {
          best.rho = static_cast<int>(path.size()) - 1;
          best.witness = path;
          std::sort(best.witness.begin(), best.witness.end());
          best.common_leaf = w;
        }
      }
    }
  }
  return best;
}

InteriorReport interior_report(const LabeledGraph& g) {
  if (!is_connected(g)) throw DisconnectedError("interior subgraph requires a connected graph");
  VertexSubset b = boundary(g);
  Bitset boundary_mask = Bitset::of(g.n, b.vertices);
  InteriorReport r;
  for (int v = 0; v < g.n; ++v)
    if (!boundary_mask.test(v)) r.interior_vertices.push_back(v);
  r.interior_graph = induced_subgraph(g, r.interior_vertices);
  r.beta_ring = r.interior_vertices.empty()
                    ? 0
                    : min_vertex_cover(r.interior_graph.n, r.interior_graph.edges()).size;
  return r;
}

BoundsReport verify_all_bounds(const GraphFamily& f, int rho_exact_limit) {
  require_connected_members(f);
  BoundsReport r;
  r.n = f.n();

  DimensionReport sd = simultaneous_strong_dimension(f);
  r.sd_s = sd.value;
  r.sd_witness = sd.witness.subset.vertices;
  r.per_member_dim = sd.per_member;
  r.sum_bound = 0;
  r.max_lower = 0;
  for (int d : sd.per_member) {
    r.sum_bound += d;
    r.max_lower = std::max(r.max_lower, d);
  }

  WitnessedValue tfc = simultaneous_twin_free_clique_number(f);
  r.twin_free_clique = tfc.value;
  r.twin_free_clique_bound = r.n - tfc.value;

  Bitset family_boundary(r.n);
  for (const auto& g : f.members)
    for (int v : boundary(g).vertices) family_boundary.set(v);
  r.family_boundary_size = family_boundary.count();
  r.boundary_bound = r.family_boundary_size - 1;

  RhoResult rho;
  try {
    rho = rho_exact(f, rho_exact_limit);
  } catch (const SizeLimitError&) {
    rho = rho_heuristic_lower_bound(f);
  }
  r.rho = rho.rho;
  r.rho_exact = rho.exact;
  r.rho_bound = r.n - rho.rho;
  r.rho_witness = rho.witness;
  r.rho_common_leaf = rho.common_leaf;

  r.all_diameter_two = true;
  for (const auto& g : f.members)
    if (all_pairs_distances(g).diameter != 2) {
      r.all_diameter_two = false;
      break;
    }

  auto check = [&](bool ok, const std::string& what) {
    if (!ok) r.violations.push_back(what);
  };
  check(1 <= r.sd_s && r.sd_s <= r.n - 1, "1 <= Sd_s <= n-1");
  check(r.max_lower <= r.sd_s, "max member dim <= Sd_s");
  check(r.sd_s <= r.sum_bound, "Sd_s <= sum of member dims");
  check(r.sd_s <= r.boundary_bound, "Sd_s <= |family boundary| - 1");
  check(r.sd_s <= r.twin_free_clique_bound, "Sd_s <= n - twin-free clique number");
  // With a heuristic rho the bound is weaker but still valid.
  check(r.sd_s <= r.rho_bound, "Sd_s <= n - rho");
  if (r.all_diameter_two)
    check(r.sd_s == r.twin_free_clique_bound, "diameter-2 family: Sd_s == n - twin-free clique");
  return r;
}

}  // namespace simdim
