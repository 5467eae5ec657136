#include "simdim/families.hpp"

#include <algorithm>
#include <unordered_set>

#include "simdim/cover.hpp"
#include "simdim/errors.hpp"
#include "simdim/rng.hpp"

namespace simdim {

namespace {

std::vector<std::string> canonical_labels(int n, const std::string& prefix = "v") {
  std::vector<std::string> ls;
  ls.reserve(n);
  for (int i = 0; i < n; ++i) ls.push_back(prefix + std::to_string(i));
  return ls;
}

void require_distinct(const std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw PreconditionError("duplicate label '" + l + "'");
}

}  // namespace

LabeledGraph make_path(int n) {
  if (n < 1) throw PreconditionError("path needs at least one vertex");
  LabeledGraph g = make_empty_graph(canonical_labels(n));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

LabeledGraph make_cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least three vertices");
  LabeledGraph g = make_empty_graph(canonical_labels(n));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

LabeledGraph make_complete(int n) {
  if (n < 1) throw PreconditionError("complete graph needs at least one vertex");
  LabeledGraph g = make_empty_graph(canonical_labels(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

LabeledGraph make_complete_bipartite(int r, int s) {
  if (r < 1 || s < 1) throw PreconditionError("complete bipartite needs positive part sizes");
  LabeledGraph g = make_empty_graph(canonical_labels(r + s));
  for (int u = 0; u < r; ++u)
    for (int v = r; v < r + s; ++v) g.add_edge(u, v);
  return g;
}

LabeledGraph make_star(int leaves) {
  if (leaves < 1) throw PreconditionError("star needs at least one leaf");
  LabeledGraph g = make_empty_graph(canonical_labels(leaves + 1));
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

LabeledGraph make_hypercube(int r) {
  if (r < 1) throw PreconditionError("hypercube dimension must be positive");
  if (r > 10) throw PreconditionError("hypercube capped at 1024 vertices");
  const int n = 1 << r;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::string bits(r, '0');
    for (int j = 0; j < r; ++j)
      if ((i >> j) & 1) bits[j] = '1';
    labels.push_back(bits);
  }
  LabeledGraph g = make_empty_graph(std::move(labels));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r; ++j)
      if (!((i >> j) & 1)) g.add_edge(i, i | (1 << j));
  return g;
}

LabeledGraph corona_product(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.n < 2) throw PreconditionError("corona base graph must be non-trivial");
  if (!is_connected(g)) throw DisconnectedError("corona base graph must be connected");
  if (h.n < 1) throw PreconditionError("corona satellite graph must be non-empty");
  std::vector<std::string> labels = g.labels;
  for (int i = 0; i < g.n; ++i)
    for (const auto& hl : h.labels) labels.push_back(hl + "@" + std::to_string(i));
  require_distinct(labels);
  LabeledGraph out = make_empty_graph(std::move(labels));
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int i = 0; i < g.n; ++i) {
    const int base = g.n + i * h.n;
    for (auto [u, v] : h.edges()) out.add_edge(base + u, base + v);
    for (int u = 0; u < h.n; ++u) out.add_edge(i, base + u);
  }
  return out;
}

LabeledGraph cartesian_product_k2(const LabeledGraph& g) {
  std::vector<std::string> labels;
  for (const auto& l : g.labels) labels.push_back(l + "|0");
  for (const auto& l : g.labels) labels.push_back(l + "|1");
  require_distinct(labels);
  LabeledGraph out = make_empty_graph(std::move(labels));
  for (auto [u, v] : g.edges()) {
    out.add_edge(u, v);
    out.add_edge(g.n + u, g.n + v);
  }
  for (int v = 0; v < g.n; ++v) out.add_edge(v, g.n + v);
  return out;
}

GraphFamily make_star_family(int r) {
  if (r < 2) throw PreconditionError("star family needs r >= 2");
  std::vector<std::string> labels = canonical_labels(r + 1);
  std::vector<LabeledGraph> members;
  std::vector<std::string> names;
  for (int center = 0; center <= r; ++center) {
    LabeledGraph g = make_empty_graph(labels);
    for (int v = 0; v <= r; ++v)
      if (v != center) g.add_edge(center, v);
    members.push_back(std::move(g));
    names.push_back("S" + std::to_string(center + 1));
  }
  return make_family(std::move(members), std::move(names));
}

GraphFamily make_shared_leaf_paths(int n, int k, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("shared-leaf paths need n >= 2");
  if (k < 1) throw PreconditionError("shared-leaf paths need k >= 1");
  Rng rng(seed);
  std::vector<std::string> labels = canonical_labels(n);
  std::vector<LabeledGraph> members;
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) {
    std::vector<int> order(n - 1);
    for (int v = 1; v < n; ++v) order[v - 1] = v;
    rng.shuffle(order);
    order.insert(order.begin(), 0);
    LabeledGraph g = make_empty_graph(labels);
    for (int j = 0; j + 1 < n; ++j) g.add_edge(order[j], order[j + 1]);
    members.push_back(std::move(g));
    names.push_back("P" + std::to_string(i + 1));
  }
  return make_family(std::move(members), std::move(names));
}

GraphFamily make_rho_sharpness_family(int r, int path_len, int k, std::uint64_t seed) {
  if (r < 2 || path_len < 2 || k < 1)
    throw PreconditionError("rho sharpness family needs r >= 2, path_len >= 2, k >= 1");
  Rng rng(seed);
  // p0 is the shared leaf; the star center and the clique both sit on it.
  std::vector<std::string> labels = canonical_labels(path_len, "p");
  for (int i = 1; i <= r; ++i) labels.push_back("c" + std::to_string(i));
  std::vector<LabeledGraph> members;
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) {
    std::vector<int> order(path_len - 1);
    for (int v = 1; v < path_len; ++v) order[v - 1] = v;
    rng.shuffle(order);
    order.insert(order.begin(), 0);
    LabeledGraph star = make_empty_graph(labels);
    for (int j = 0; j + 1 < path_len; ++j) star.add_edge(order[j], order[j + 1]);
    LabeledGraph clique = star;
    for (int a = 1; a <= r; ++a) {
      star.add_edge(0, path_len - 1 + a);
      clique.add_edge(0, path_len - 1 + a);
      for (int b = a + 1; b <= r; ++b) clique.add_edge(path_len - 1 + a, path_len - 1 + b);
    }
    members.push_back(std::move(star));
    names.push_back("S" + std::to_string(i + 1));
    members.push_back(std::move(clique));
    names.push_back("C" + std::to_string(i + 1));
  }
  return make_family(std::move(members), std::move(names));
}

GraphFamily fig1_family() {
  std::vector<std::string> labels = {"u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"};
  LabeledGraph g1 = build_graph(labels, {{"u1", "v1"},
                                         {"u2", "v1"},
                                         {"v1", "v2"},
                                         {"v2", "v3"},
                                         {"v3", "v4"},
                                         {"v4", "u3"},
                                         {"v4", "u4"}});
  LabeledGraph g2 = build_graph(labels, {{"v1", "u1"},
                                         {"v2", "u1"},
                                         {"u1", "u2"},
                                         {"u2", "u3"},
                                         {"u3", "u4"},
                                         {"u4", "v3"},
                                         {"u4", "v4"}});
  return make_family({g1, g2}, {"G1", "G2"});
}

LabeledGraph fig2_graph() {
  std::vector<std::string> labels = {"1", "2", "3", "4", "5", "6"};
  return build_graph(labels, {{"1", "2"},
                              {"1", "5"},
                              {"1", "6"},
                              {"2", "3"},
                              {"2", "4"},
                              {"3", "4"},
                              {"4", "5"},
                              {"5", "6"}});
}

LabeledGraph fig3_graph() {
  std::vector<std::string> labels = {"a", "b", "c", "d", "e"};
  return build_graph(labels, {{"a", "b"}, {"b", "c"}, {"b", "d"}, {"c", "d"}, {"d", "e"}});
}

LabeledGraph fig4_graph() {
  std::vector<std::string> labels;
  for (int i = 1; i <= 11; ++i) labels.push_back(std::to_string(i));
  return build_graph(labels, {{"1", "2"},
                              {"1", "3"},
                              {"1", "4"},
                              {"2", "6"},
                              {"2", "7"},
                              {"3", "5"},
                              {"3", "7"},
                              {"4", "5"},
                              {"4", "6"},
                              {"5", "9"},
                              {"5", "10"},
                              {"6", "8"},
                              {"6", "10"},
                              {"7", "8"},
                              {"7", "9"},
                              {"8", "11"},
                              {"9", "11"},
                              {"10", "11"}});
}

LabeledGraph fig5_graph() {
  std::vector<std::string> labels = {"1", "2", "3", "4", "5", "6", "7"};
  return build_graph(labels, {{"1", "2"},
                              {"1", "6"},
                              {"2", "7"},
                              {"6", "7"},
                              {"2", "3"},
                              {"3", "4"},
                              {"4", "5"},
                              {"5", "6"}});
}

LabeledGraph petersen_graph() {
  LabeledGraph g = make_empty_graph(canonical_labels(10));
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return g;
}

LabeledGraph para3_construction(int r, int t, int s) {
  if (r < 2 || s < 2 || t < 3)
    throw PreconditionError("construction needs r,s >= 2 and t >= 3");
  std::vector<std::string> labels;
  for (int i = 1; i < r; ++i) labels.push_back("a" + std::to_string(i));
  for (int i = 0; i < t; ++i) labels.push_back("p" + std::to_string(i));
  for (int i = 1; i < s; ++i) labels.push_back("b" + std::to_string(i));
  LabeledGraph g = make_empty_graph(std::move(labels));
  const int p0 = r - 1;  // identified with one clique vertex
  for (int i = 0; i + 1 < t; ++i) g.add_edge(p0 + i, p0 + i + 1);
  const int pt = p0 + t - 1;  // identified with the other
  for (int a = 0; a < r - 1; ++a) {
    g.add_edge(a, p0);
    for (int b = a + 1; b < r - 1; ++b) g.add_edge(a, b);
  }
  const int boff = r - 1 + t;
  for (int a = 0; a < s - 1; ++a) {
    g.add_edge(boff + a, pt);
    for (int b = a + 1; b < s - 1; ++b) g.add_edge(boff + a, boff + b);
  }
  return g;
}

GraphFamily figure_family(const std::string& which) {
  if (which == "fig1") return fig1_family();
  if (which == "fig2") return singleton_family(fig2_graph(), "G");
  if (which == "fig3") return singleton_family(fig3_graph(), "G");
  if (which == "fig4") return singleton_family(fig4_graph(), "G");
  if (which == "fig5") return singleton_family(fig5_graph(), "G");
  if (which == "petersen") return singleton_family(petersen_graph(), "G");
  throw PreconditionError("unknown figure selector '" + which + "'");
}

LabeledGraph make_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("tree needs at least one vertex");
  Rng rng(seed);
  LabeledGraph g = make_empty_graph(canonical_labels(n));
  for (int v = 1; v < n; ++v) g.add_edge(v, rng.uniform(v));
  return g;
}

LabeledGraph make_random_connected_graph(int n, double edge_prob, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("graph needs at least one vertex");
  Rng rng(seed);
  LabeledGraph g = make_empty_graph(canonical_labels(n));
  for (int v = 1; v < n; ++v) g.add_edge(v, rng.uniform(v));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && rng.chance(edge_prob)) g.add_edge(u, v);
  return g;
}

LabeledGraph make_caterpillar(int spine, int legs_per_vertex) {
  if (spine < 1 || legs_per_vertex < 0)
    throw PreconditionError("caterpillar needs spine >= 1 and legs >= 0");
  std::vector<std::string> labels = canonical_labels(spine, "s");
  for (int i = 0; i < spine; ++i)
    for (int j = 0; j < legs_per_vertex; ++j)
      labels.push_back("s" + std::to_string(i) + "l" + std::to_string(j));
  LabeledGraph g = make_empty_graph(std::move(labels));
  for (int i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
  for (int i = 0; i < spine; ++i)
    for (int j = 0; j < legs_per_vertex; ++j) g.add_edge(i, spine + i * legs_per_vertex + j);
  return g;
}

LabeledGraph make_double_broom(int left, int mid, int right) {
  if (left < 1 || right < 1 || mid < 2)
    throw PreconditionError("double broom needs left,right >= 1 and mid >= 2");
  std::vector<std::string> labels = canonical_labels(mid, "s");
  for (int i = 0; i < left; ++i) labels.push_back("l" + std::to_string(i));
  for (int i = 0; i < right; ++i) labels.push_back("r" + std::to_string(i));
  LabeledGraph g = make_empty_graph(std::move(labels));
  for (int i = 0; i + 1 < mid; ++i) g.add_edge(i, i + 1);
  for (int i = 0; i < left; ++i) g.add_edge(0, mid + i);
  for (int i = 0; i < right; ++i) g.add_edge(mid - 1, mid + left + i);
  return g;
}

bool is_tree(const LabeledGraph& g) {
  return g.n >= 1 && is_connected(g) && g.edge_count() == g.n - 1;
}

std::vector<int> tree_leaves(const LabeledGraph& g) {
  std::vector<int> leaves;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) == 1) leaves.push_back(v);
  return leaves;
}

LabeledGraph tree_without_leaves_except(const LabeledGraph& tree, int keep) {
  std::vector<int> kept;
  for (int v = 0; v < tree.n; ++v)
    if (tree.degree(v) != 1 || v == keep) kept.push_back(v);
  return induced_subgraph(tree, kept);
}

TreePairPrediction tree_complement_pair_formula(const LabeledGraph& tree) {
  if (!is_tree(tree)) throw PreconditionError("input is not a tree");
  const int n = tree.n;
  const DistanceMatrix d = all_pairs_distances(tree);
  if (d.diameter < 3)
    throw PreconditionError("tree diameter below 3: the complement pair is undefined");

  std::vector<int> leaves = tree_leaves(tree);
  const int l = static_cast<int>(leaves.size());
  std::vector<int> interior;
  for (int v = 0; v < n; ++v)
    if (tree.degree(v) != 1) interior.push_back(v);
  LabeledGraph ring = induced_subgraph(tree, interior);
  const int beta_ring = min_vertex_cover(ring.n, ring.edges()).size;

  auto is_support = [&](int v) {
    for (int u = tree.adj[v].find_first(); u >= 0; u = tree.adj[v].find_next(u))
      if (tree.degree(u) == 1) return true;
    return false;
  };

  TreePairPrediction p;
  p.interval_lo = beta_ring + l - 1;
  int best_upper = -1;
  bool every_pruned_tree_is_path = true;
  for (int u : leaves) {
    LabeledGraph pruned = tree_without_leaves_except(tree, u);
    int beta = min_vertex_cover(pruned.n, pruned.edges()).size;
    if (best_upper < 0 || beta < best_upper) best_upper = beta;
    for (int v = 0; v < pruned.n; ++v)
      if (pruned.degree(v) > 2) every_pruned_tree_is_path = false;
  }
  p.interval_hi = best_upper + l - 1;

  if (d.diameter == 3) {
    p.lower = p.upper = n - 2;
    p.case_label = "diameter-3";
    return p;
  }
  if (d.diameter == 4) {
    // the interior is a star; find its center
    int center = -1;
    for (std::size_t i = 0; i < interior.size(); ++i)
      if (ring.degree(static_cast<int>(i)) == ring.n - 1) center = interior[i];
    if (center < 0) throw InvariantError("diameter-4 tree interior is not a star");
    const bool support = is_support(center);
    p.lower = p.upper = support ? l : l + 1;
    p.case_label = support ? "diameter-4-central-support" : "diameter-4";
    return p;
  }
  if (d.diameter == 5) {
    // the interior is a double star; its two non-leaf vertices decide
    bool support = false;
    int centers = 0;
    for (std::size_t i = 0; i < interior.size(); ++i)
      if (ring.degree(static_cast<int>(i)) >= 2) {
        ++centers;
        if (is_support(interior[i])) support = true;
      }
    if (centers != 2) throw InvariantError("diameter-5 tree interior is not a double star");
    p.lower = p.upper = support ? l + 1 : l + 2;
    p.case_label = support ? "diameter-5-interior-support" : "diameter-5";
    return p;
  }
  if (every_pruned_tree_is_path) {
    p.lower = p.upper = l + (n - l + 1) / 2 - 1;  // l + ceil((n-l)/2) - 1
    p.case_label = "caterpillar";
    return p;
  }
  p.lower = p.interval_lo;
  p.upper = p.interval_hi;
  p.case_label = "interval";
  return p;
}

}  // namespace simdim
