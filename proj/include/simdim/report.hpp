#ifndef SIMDIM_REPORT_HPP
#define SIMDIM_REPORT_HPP

#include <string>

#include <json.hpp>

namespace simdim {

using Json = nlohmann::ordered_json;

// Both renderers read the same document, so the numbers in the table and
// the structured output cannot drift apart.
std::string render_json(const Json& report);
std::string render_table(const Json& report);

}  // namespace simdim

#endif
