#ifndef SIMDIM_COVER_HPP
#define SIMDIM_COVER_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "simdim/graph.hpp"
#include "simdim/strong_resolving.hpp"

namespace simdim {

struct CoverResult {
  int size = 0;
  VertexSubset witness;     // verified vertex cover of minimum size
  std::uint64_t explored = 0;  // search node count
};

// Every rule can be switched off; the search stays exact either way, which
// is what the kernelization-soundness tests exercise.
struct CoverOptions {
  bool degree_one_rule = true;
  bool high_degree_rule = true;
  bool matching_lower_bound = true;
};

// Exact minimum vertex cover by kernelized branch and bound. Branch vertex
// is the max-degree vertex (lowest index on ties); the "take v" branch is
// explored first, so witnesses are deterministic.
CoverResult min_vertex_cover(int n, const std::vector<std::pair<int, int>>& edges,
                             const CoverOptions& options = {});
CoverResult min_vertex_cover(const StrongResolvingGraph& sr, const CoverOptions& options = {});

// Independent oracle: subsets enumerated by increasing cardinality.
CoverResult brute_force_min_cover(int n, const std::vector<std::pair<int, int>>& edges,
                                  int n_limit = 20);

bool is_vertex_cover(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& s);

struct CliqueResult {
  int size = 0;
  VertexSubset witness;
  std::uint64_t explored = 0;
};

// Maximum vertex set that is pairwise adjacent and pairwise allowed, by
// branch and bound with a greedy coloring bound. The predicate is assumed
// symmetric and is evaluated once per unordered pair.
CliqueResult max_constrained_clique(const LabeledGraph& g,
                                    const std::function<bool(int, int)>& allowed);

CliqueResult max_clique(const LabeledGraph& g);

}  // namespace simdim

#endif
