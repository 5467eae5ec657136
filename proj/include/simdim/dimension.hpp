#ifndef SIMDIM_DIMENSION_HPP
#define SIMDIM_DIMENSION_HPP

#include <string>
#include <vector>

#include "simdim/cover.hpp"
#include "simdim/graph.hpp"
#include "simdim/strong_resolving.hpp"

namespace simdim {

// w strongly resolves u,v when u lies on a shortest v-w path or v lies on a
// shortest u-w path.
bool strongly_resolves(const DistanceMatrix& d, int w, int u, int v);

bool is_strong_generator(const DistanceMatrix& d, const std::vector<int>& s);
bool is_strong_generator(const LabeledGraph& g, const std::vector<int>& s);

enum class GeneratorKind { StrongGenerator, SimultaneousStrongGenerator, StrongResolvingCover };

// Verification is always recomputed from the definition, never inherited
// from the solver that produced the subset.
struct GeneratorCertificate {
  VertexSubset subset;
  GeneratorKind kind = GeneratorKind::StrongGenerator;
  std::vector<bool> member_ok;

  bool ok() const {
    for (bool b : member_ok)
      if (!b) return false;
    return true;
  }
};

GeneratorCertificate is_simultaneous_strong_generator(const GraphFamily& f,
                                                      const std::vector<int>& s);

enum class DimMethod { SrCover, CoverShortcut, BruteForce };

std::string to_string(DimMethod m);

struct DimensionReport {
  int value = 0;
  GeneratorCertificate witness;
  DimMethod method = DimMethod::SrCover;
  std::vector<int> per_member;  // member-wise dim_s
};

// dim_s(G) as the vertex cover number of the strong resolving graph, with
// the witness re-verified definitionally.
DimensionReport strong_dimension(const LabeledGraph& g);

// Sd_s of a family as one exact cover of the union strong resolving graph.
DimensionReport simultaneous_strong_dimension(const GraphFamily& f);

// Definitional oracle, independent of the SR/vertex-cover pipeline.
DimensionReport brute_force_simdim(const GraphFamily& f, int n_limit = 12);

// beta_s(G): minimum set that is simultaneously a vertex cover and a strong
// metric generator of G.
DimensionReport strong_resolving_cover_number(const LabeledGraph& g);

// Sd_s(G, G^c). Uses the strong-resolving-cover shortcut when one of the
// diameters is 2 (method CoverShortcut) and always cross-checks against the
// general union route.
DimensionReport complement_pair_dimension(const LabeledGraph& g);

}  // namespace simdim

#endif
