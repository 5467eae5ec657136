#ifndef SIMDIM_GRAPH_HPP
#define SIMDIM_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "simdim/bitset.hpp"

namespace simdim {

// Undirected simple graph on an ordered, labeled vertex set. Vertices are
// dense indices 0..n-1 internally; labels appear only at I/O boundaries.
struct LabeledGraph {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<Bitset> adj;

  bool adjacent(int u, int v) const { return adj[u].test(v); }
  const Bitset& neighbors(int v) const { return adj[v]; }
  Bitset closed_neighborhood(int v) const {
    Bitset b = adj[v];
    b.set(v);
    return b;
  }
  int degree(int v) const { return adj[v].count(); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  // -1 when the label is absent.
  int index_of(const std::string& label) const;

  void add_edge(int u, int v);  // rejects self-loops and out-of-range
};

LabeledGraph make_empty_graph(std::vector<std::string> labels);

LabeledGraph build_graph(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& edges);

constexpr int kUnreachable = -1;

// All-pairs shortest path distances; kUnreachable marks absent paths so
// distance arithmetic can never silently use a sentinel as a length.
struct DistanceMatrix {
  int n = 0;
  std::vector<int> dist;  // row-major
  int diameter = 0;       // max finite entry

  int operator()(int u, int v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
  bool reachable(int u, int v) const { return (*this)(u, v) != kUnreachable; }
  bool all_reachable() const;
};

DistanceMatrix all_pairs_distances(const LabeledGraph& g);

bool is_connected(const LabeledGraph& g);

LabeledGraph complement(const LabeledGraph& g);

enum class TwinKind { TrueTwins, FalseTwins, NotTwins };

TwinKind twin_relation(const LabeledGraph& g, int u, int v);

LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& w);

// True iff <W> is a simple path and w is an end of it (degree 0 is allowed
// only for the single-vertex path).
bool is_induced_path_with_leaf(const LabeledGraph& g, const std::vector<int>& w, int leaf);

enum class SubsetRole { Plain, Generator, Cover, Clique, HittingSet, Boundary, Simplicial };

struct VertexSubset {
  std::vector<int> vertices;  // strictly increasing
  SubsetRole role = SubsetRole::Plain;

  int size() const { return static_cast<int>(vertices.size()); }
  bool contains(int v) const;
};

// A list of graphs over one common ordered vertex set; the unit of
// simultaneous computation.
struct GraphFamily {
  std::vector<std::string> labels;
  std::vector<LabeledGraph> members;
  std::vector<std::string> names;

  int n() const { return static_cast<int>(labels.size()); }
  int size() const { return static_cast<int>(members.size()); }
  const LabeledGraph& operator[](int i) const { return members[i]; }
};

// Checks the common-vertex-set invariant; names default to G1..Gk.
GraphFamily make_family(std::vector<LabeledGraph> members, std::vector<std::string> names = {});

GraphFamily singleton_family(LabeledGraph g, std::string name = "G");

// Throws DisconnectedError naming the first offending member.
void require_connected_members(const GraphFamily& f);

}  // namespace simdim

#endif
