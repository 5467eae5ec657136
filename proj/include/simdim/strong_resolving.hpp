#ifndef SIMDIM_STRONG_RESOLVING_HPP
#define SIMDIM_STRONG_RESOLVING_HPP

#include <string>
#include <utility>
#include <vector>

#include "simdim/graph.hpp"

namespace simdim {

// Graph on the base vertex set whose edges are exactly the mutually
// maximally distant pairs of the base graph (or of any member, for the
// union over a family). Isolated vertices are kept so indices stay stable
// across the pipeline.
struct StrongResolvingGraph {
  int n = 0;
  std::vector<std::string> labels;
  std::string source;  // base graph or family description
  std::vector<Bitset> adj;

  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;
  std::vector<int> isolated_vertices() const;
  bool is_complete() const;
};

// u is maximally distant from v when no neighbor of u is farther from v
// than u itself.
bool is_maximally_distant(const DistanceMatrix& d, const LabeledGraph& g, int u, int v);

std::vector<std::pair<int, int>> mmd_pairs(const LabeledGraph& g);

StrongResolvingGraph strong_resolving_graph(const LabeledGraph& g);

// Vertices belonging to at least one MMD pair.
VertexSubset boundary(const LabeledGraph& g);

// Vertices whose open neighborhood induces a clique.
VertexSubset simplicial_vertices(const LabeledGraph& g);

// Edge union of the members' strong resolving graphs over the common
// vertex set.
StrongResolvingGraph union_sr_graph(const GraphFamily& f);

}  // namespace simdim

#endif
