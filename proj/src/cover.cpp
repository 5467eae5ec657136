#include "simdim/cover.hpp"

#include <algorithm>

#include "simdim/errors.hpp"

namespace simdim {

namespace {

std::vector<Bitset> adjacency_of(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Bitset> adj(n, Bitset(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loop in edge set");
    adj[u].set(v);
    adj[v].set(u);
  }
  return adj;
}

void remove_vertex(std::vector<Bitset>& adj, int v) {
  for (int w = adj[v].find_first(); w >= 0; w = adj[v].find_next(w)) adj[w].reset(v);
  adj[v].clear();
}

int greedy_matching(const std::vector<Bitset>& adj) {
  const int n = static_cast<int>(adj.size());
  Bitset used(n);
  int m = 0;
  for (int u = 0; u < n; ++u) {
    if (used.test(u)) continue;
    int w = adj[u].and_not(used).find_first();
    if (w >= 0) {
      used.set(u);
      used.set(w);
      ++m;
    }
  }
  return m;
}

// Repeatedly take the max-degree vertex; yields the initial upper bound and
// a valid witness, so the invariant "best is always a cover" holds from the
// first search node on.
std::vector<int> greedy_cover(std::vector<Bitset> adj) {
  std::vector<int> cover;
  while (true) {
    int best = -1, best_deg = 0;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
      int d = adj[v].count();
      if (d > best_deg) {
        best_deg = d;
        best = v;
      }
    }
    if (best < 0) break;
    cover.push_back(best);
    remove_vertex(adj, best);
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

struct VcSearch {
  const CoverOptions& opt;
  int best_size;
  std::vector<int> best_witness;
  std::uint64_t explored = 0;

  void run(std::vector<Bitset> adj, std::vector<int> chosen) {
    ++explored;
    const int n = static_cast<int>(adj.size());
    while (true) {
      int max_deg = 0, max_v = -1, deg1 = -1;
      for (int v = 0; v < n; ++v) {
        int d = adj[v].count();
        if (d > max_deg) {
          max_deg = d;
          max_v = v;
        }
        if (d == 1 && deg1 < 0) deg1 = v;
      }
      if (max_deg == 0) {
        if (static_cast<int>(chosen.size()) < best_size) {
          best_size = static_cast<int>(chosen.size());
          best_witness = chosen;
          std::sort(best_witness.begin(), best_witness.end());
        }
        return;
      }
      int lower = 1;
      if (opt.matching_lower_bound) lower = greedy_matching(adj);
      if (static_cast<int>(chosen.size()) + lower >= best_size) return;
      if (opt.degree_one_rule && deg1 >= 0) {
        int v = adj[deg1].find_first();
        chosen.push_back(v);
        remove_vertex(adj, v);
        continue;
      }
      if (opt.high_degree_rule) {
        // Any cover strictly better than best has at most `remaining` more
        // vertices; a vertex of larger degree is forced into it.
        int remaining = best_size - 1 - static_cast<int>(chosen.size());
        if (max_deg > remaining) {
          chosen.push_back(max_v);
          remove_vertex(adj, max_v);
          continue;
        }
      }
      // branch: v in the cover first, then N(v) in the cover
      {
        std::vector<Bitset> a2 = adj;
        std::vector<int> c2 = chosen;
        c2.push_back(max_v);
        remove_vertex(a2, max_v);
        run(std::move(a2), std::move(c2));
      }
      {
        std::vector<Bitset> a2 = adj;
        std::vector<int> c2 = chosen;
        for (int w = adj[max_v].find_first(); w >= 0; w = adj[max_v].find_next(w)) {
          c2.push_back(w);
          remove_vertex(a2, w);
        }
        run(std::move(a2), std::move(c2));
      }
      return;
    }
  }
};

}  // namespace

bool is_vertex_cover(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& s) {
  int mx = -1;
  for (const auto& [u, v] : edges) mx = std::max({mx, u, v});
  Bitset in(mx + 1);
  for (int v : s)
    if (v >= 0 && v <= mx) in.set(v);
  for (const auto& [u, v] : edges)
    if (!in.test(u) && !in.test(v)) return false;
  return true;
}

CoverResult min_vertex_cover(int n, const std::vector<std::pair<int, int>>& edges,
                             const CoverOptions& options) {
  std::vector<Bitset> adj = adjacency_of(n, edges);
  VcSearch search{options, 0, {}, 0};
  search.best_witness = greedy_cover(adj);
  search.best_size = static_cast<int>(search.best_witness.size());
  search.run(adj, {});
  CoverResult r;
  r.size = search.best_size;
  r.witness.vertices = std::move(search.best_witness);
  r.witness.role = SubsetRole::Cover;
  r.explored = search.explored;
  if (static_cast<int>(r.witness.vertices.size()) != r.size ||
      !is_vertex_cover(edges, r.witness.vertices))
    throw InvariantError("minimum vertex cover witness failed verification");
  return r;
}

CoverResult min_vertex_cover(const StrongResolvingGraph& sr, const CoverOptions& options) {
  return min_vertex_cover(sr.n, sr.edges(), options);
}

CoverResult brute_force_min_cover(int n, const std::vector<std::pair<int, int>>& edges,
                                  int n_limit) {
  if (n > n_limit)
    throw SizeLimitError("brute force cover limited to " + std::to_string(n_limit) + " vertices");
  CoverResult r;
  r.witness.role = SubsetRole::Cover;
  if (edges.empty()) return r;
  const std::uint64_t full = (n >= 64) ? ~0ULL : ((1ULL << n) - 1);
  for (int k = 1; k <= n; ++k) {
    std::uint64_t mask = (1ULL << k) - 1;
    while (mask <= full) {
      ++r.explored;
      bool covers = true;
      for (const auto& [u, v] : edges)
        if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
          covers = false;
          break;
        }
      if (covers) {
        r.size = k;
        for (int v = 0; v < n; ++v)
          if ((mask >> v) & 1) r.witness.vertices.push_back(v);
        return r;
      }
      // Gosper's hack: next k-subset mask
      std::uint64_t c = mask & -mask;
      std::uint64_t rr = mask + c;
      if (rr > full) break;
      mask = (((rr ^ mask) >> 2) / c) | rr;
    }
  }
  throw InvariantError("brute force cover found no cover");  // unreachable: V covers
}

CliqueResult max_constrained_clique(const LabeledGraph& g,
                                    const std::function<bool(int, int)>& allowed) {
  const int n = g.n;
  std::vector<Bitset> eff(n, Bitset(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) && allowed(u, v)) {
        eff[u].set(v);
        eff[v].set(u);
      }

  CliqueResult best;
  best.witness.role = SubsetRole::Clique;
  std::vector<int> current;

  std::function<void(Bitset)> expand = [&](Bitset cand) {
    ++best.explored;
    if (cand.none()) {
      if (static_cast<int>(current.size()) > best.size) {
        best.size = static_cast<int>(current.size());
        best.witness.vertices = current;
        std::sort(best.witness.vertices.begin(), best.witness.vertices.end());
      }
      return;
    }
    // greedy coloring bound, ascending index inside each color class
    std::vector<int> order, bound;
    Bitset uncolored = cand;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset avail = uncolored;
      while (avail.any()) {
        int v = avail.find_first();
        order.push_back(v);
        bound.push_back(color);
        uncolored.reset(v);
        avail.reset(v);
        avail.and_not_assign(eff[v]);
      }
    }
    Bitset p = cand;
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      int v = order[i];
      if (static_cast<int>(current.size()) + bound[i] <= best.size) return;
      current.push_back(v);
      expand(p & eff[v]);
      current.pop_back();
      p.reset(v);
    }
  };

  Bitset all(n);
  all.set_all();
  expand(all);

  for (std::size_t i = 0; i < best.witness.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < best.witness.vertices.size(); ++j) {
      int u = best.witness.vertices[i], v = best.witness.vertices[j];
      if (!g.adjacent(u, v) || !allowed(std::min(u, v), std::max(u, v)))
        throw InvariantError("clique witness failed verification");
    }
  return best;
}

CliqueResult max_clique(const LabeledGraph& g) {
  return max_constrained_clique(g, [](int, int) { return true; });
}

}  // namespace simdim
