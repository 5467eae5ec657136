#ifndef SIMDIM_FAMILY_IO_HPP
#define SIMDIM_FAMILY_IO_HPP

#include <iosfwd>
#include <string>

#include "simdim/graph.hpp"

namespace simdim {

// Family file format:
//   n <count>
//   labels <l1> ... <ln>     (optional; defaults to v0..v{n-1})
//   graph <name>
//   <labelU> <labelV>        (one edge per line)
//   end
// Lines whose first token starts with '#' are comments. Duplicate edges
// collapse; duplicate graph names are rejected.
GraphFamily parse_family_file(std::istream& in, const std::string& filename);

GraphFamily load_family_file(const std::string& path);

void write_family_file(std::ostream& out, const GraphFamily& f);

std::string family_file_text(const GraphFamily& f);

}  // namespace simdim

#endif
