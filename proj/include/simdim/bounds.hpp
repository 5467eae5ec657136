#ifndef SIMDIM_BOUNDS_HPP
#define SIMDIM_BOUNDS_HPP

#include <string>
#include <vector>

#include "simdim/dimension.hpp"
#include "simdim/graph.hpp"

namespace simdim {

struct WitnessedValue {
  int value = 0;
  VertexSubset witness;
};

// Largest set that is a clique with no true-twin pair in every member.
WitnessedValue simultaneous_twin_free_clique_number(const GraphFamily& f);

struct RhoResult {
  int rho = 0;                // |W| - 1
  std::vector<int> witness;   // the maximizing W
  int common_leaf = -1;
  bool exact = true;
};

// Exact maximum W inducing, in every member, a geodesic path (an induced
// path whose ends are at graph distance |W|-1, so it realizes distances)
// with a common leaf. Merely induced paths would break the n - rho upper
// bound: five consecutive vertices of C_6 induce a path yet dim_s(C_6) = 3.
// Exhaustive over subsets, so capped by exact_limit.
RhoResult rho_exact(const GraphFamily& f, int exact_limit = 16);

// Lower bound from single-member shortest paths re-checked in all members;
// never exceeds the exact value.
RhoResult rho_heuristic_lower_bound(const GraphFamily& f);

struct InteriorReport {
  std::vector<int> interior_vertices;  // V minus the boundary
  LabeledGraph interior_graph;
  int beta_ring = 0;  // 0 when the boundary is everything
};

InteriorReport interior_report(const LabeledGraph& g);

struct BoundsReport {
  int n = 0;
  int sd_s = 0;
  std::vector<int> sd_witness;
  std::vector<int> per_member_dim;
  int twin_free_clique = 0;        // the simultaneous twin-free clique number
  int twin_free_clique_bound = 0;  // n - that number
  int rho = 0;
  int rho_bound = 0;  // n - rho
  bool rho_exact = true;
  std::vector<int> rho_witness;
  int rho_common_leaf = -1;
  int family_boundary_size = 0;
  int boundary_bound = 0;  // |boundary of the family| - 1
  int sum_bound = 0;       // sum of member dims
  int max_lower = 0;       // max of member dims
  bool all_diameter_two = false;
  std::vector<std::string> violations;  // empty unless something is broken
};

// Computes Sd_s and every stated bound; any violation recorded here is a
// bug signal, not a data point.
BoundsReport verify_all_bounds(const GraphFamily& f, int rho_exact_limit = 16);

}  // namespace simdim

#endif
