#ifndef SIMDIM_FAMILIES_HPP
#define SIMDIM_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "simdim/graph.hpp"

namespace simdim {

// Canonical labels are v0..v{n-1} unless stated otherwise.
LabeledGraph make_path(int n);
LabeledGraph make_cycle(int n);  // n >= 3
LabeledGraph make_complete(int n);
LabeledGraph make_complete_bipartite(int r, int s);
LabeledGraph make_star(int leaves);  // K_{1,leaves}, center v0

// 2^r vertices labeled by bitstrings, edges between Hamming-distance-1
// pairs. Capped at 1024 vertices.
LabeledGraph make_hypercube(int r);

// One copy of g, one copy of h per vertex of g, the i-th copy fully joined
// to vertex i. Copy labels are "<h label>@<i>".
LabeledGraph corona_product(const LabeledGraph& g, const LabeledGraph& h);

// G box K_2; labels "<x>|0" and "<x>|1".
LabeledGraph cartesian_product_k2(const LabeledGraph& g);

// r+1 stars K_{1,r} on r+1 common vertices, the center rotating.
GraphFamily make_star_family(int r);

// k paths on n common vertices, every ordering starting at vertex 0.
GraphFamily make_shared_leaf_paths(int n, int k, std::uint64_t seed);

// Clique and star identified into a path end, the sharpness family for the
// |V| - rho bound: members alternate a star-based and a clique-based graph
// glued onto k common-leaf paths.
GraphFamily make_rho_sharpness_family(int r, int path_len, int k, std::uint64_t seed);

// Hand-transcribed fixtures; vertex labels match the drawings they came
// from so witnesses can be compared against the figures.
GraphFamily fig1_family();
LabeledGraph fig2_graph();
LabeledGraph fig3_graph();
LabeledGraph fig4_graph();
LabeledGraph fig5_graph();
LabeledGraph petersen_graph();

// Two cliques joined by a path: K_r and K_s each share one vertex with an
// end of P_t. Requires r,s >= 2 and t >= 3.
LabeledGraph para3_construction(int r, int t, int s);

// Dispatcher for the CLI; accepts fig1 (a two-member family), fig2..fig5,
// petersen.
GraphFamily figure_family(const std::string& which);

LabeledGraph make_random_tree(int n, std::uint64_t seed);
LabeledGraph make_random_connected_graph(int n, double edge_prob, std::uint64_t seed);
LabeledGraph make_caterpillar(int spine, int legs_per_vertex);
// Path of `mid` spine vertices with `left`/`right` pendant leaves on the
// ends; mid >= 2, left,right >= 1.
LabeledGraph make_double_broom(int left, int mid, int right);

bool is_tree(const LabeledGraph& g);
std::vector<int> tree_leaves(const LabeledGraph& g);
// T with every leaf removed except `keep`.
LabeledGraph tree_without_leaves_except(const LabeledGraph& tree, int keep);

// Closed-form / interval prediction for Sd_s(T, T^c) keyed on the tree
// diameter. lower == upper when the case is determined. interval_lo/hi
// always carry the general bounds beta(interior)+l-1 .. min_u beta(T'_u)+l-1.
struct TreePairPrediction {
  int lower = 0;
  int upper = 0;
  int interval_lo = 0;
  int interval_hi = 0;
  std::string case_label;

  bool exact() const { return lower == upper; }
};

TreePairPrediction tree_complement_pair_formula(const LabeledGraph& tree);

}  // namespace simdim

#endif
