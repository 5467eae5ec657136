#ifndef SIMDIM_REDUCTION_HPP
#define SIMDIM_REDUCTION_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "simdim/graph.hpp"

namespace simdim {

// Hitting set restricted to subsets of size at most two.
struct Hsp2Instance {
  std::vector<std::string> ground;        // element labels
  std::vector<std::vector<int>> subsets;  // indices into ground, each of size 1 or 2
  int budget = 1;                         // p, 1 <= p <= |ground|
};

void validate(const Hsp2Instance& inst);

// Interior order of the constructed paths; the reversed variant exists to
// show the outcome does not depend on the canonical choice.
enum class ReductionPathOrder { Canonical, Reversed };

// n ground elements v_i become indices 0..n-1, partners v_i' live at
// n..2n-1, the shared hub "u" is vertex 2n.
struct ReductionInstance {
  Hsp2Instance source;
  GraphFamily family;  // one tree per subset, all on 2n+1 vertices
  int ssd_budget = 0;  // p + 1
};

ReductionInstance reduce_hsp2(const Hsp2Instance& inst,
                              ReductionPathOrder order = ReductionPathOrder::Canonical);

// Minimum hitting set by subset enumeration in increasing cardinality.
VertexSubset brute_force_min_hitting_set(const Hsp2Instance& inst, int n_limit = 20);

struct ReductionPRow {
  int p = 0;
  bool hitting_set_le_p = false;
  bool sd_le_p_plus_1 = false;
  bool consistent = false;
};

struct ReductionVerification {
  int hitting_set_size = 0;
  std::vector<int> hitting_set;
  int sd_s = 0;
  bool equality = false;  // sd_s == hitting_set_size + 1
  std::vector<ReductionPRow> per_p;
  bool ok = false;
};

// Checks sd_s(family) == h* + 1 and the p-by-p equivalence, with the
// simultaneous dimension computed by the pipeline and cross-checked by the
// definitional brute force where it fits.
ReductionVerification verify_reduction(const Hsp2Instance& inst,
                                       ReductionPathOrder order = ReductionPathOrder::Canonical);

Hsp2Instance parse_hsp2_file(std::istream& in, const std::string& filename);
void write_hsp2_file(std::ostream& out, const Hsp2Instance& inst);

}  // namespace simdim

#endif
