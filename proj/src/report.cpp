#include "simdim/report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace simdim {

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

bool is_scalar_array(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v)
    if (!is_scalar(e)) return false;
  return true;
}

std::string join_scalars(const Json& arr) {
  std::string s = "[";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ", ";
    s += scalar_text(arr[i]);
  }
  return s + "]";
}

void render_object_table(std::ostream& out, const Json& rows, const std::string& indent) {
  std::vector<std::string> cols;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) cols.push_back(it.key());
  std::vector<std::vector<std::string>> cells;
  cells.push_back(cols);
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& c : cols) {
      if (!row.contains(c))
        line.push_back("-");
      else if (is_scalar_array(row[c]))
        line.push_back(join_scalars(row[c]));
      else
        line.push_back(scalar_text(row[c]));
    }
    cells.push_back(line);
  }
  std::vector<std::size_t> width(cols.size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (std::size_t r = 0; r < cells.size(); ++r) {
    out << indent;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out << cells[r][i] << std::string(width[i] - cells[r][i].size(), ' ');
      if (i + 1 < cols.size()) out << "  ";
    }
    out << '\n';
    if (r == 0) {
      out << indent;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        out << std::string(width[i], '-');
        if (i + 1 < cols.size()) out << "  ";
      }
      out << '\n';
    }
  }
}

void render_value(std::ostream& out, const std::string& key, const Json& v,
                  const std::string& indent) {
  if (is_scalar(v)) {
    out << indent << key << ": " << scalar_text(v) << '\n';
  } else if (is_scalar_array(v)) {
    out << indent << key << ": " << join_scalars(v) << '\n';
  } else if (v.is_array()) {
    out << indent << key << ":\n";
    if (!v.empty() && v[0].is_object()) {
      render_object_table(out, v, indent + "  ");
    } else {
      for (const auto& e : v) {
        if (is_scalar(e))
          out << indent << "  - " << scalar_text(e) << '\n';
        else if (is_scalar_array(e))
          out << indent << "  - " << join_scalars(e) << '\n';
        else
          render_value(out, "-", e, indent + "  ");
      }
    }
  } else {
    out << indent << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it)
      render_value(out, it.key(), it.value(), indent + "  ");
  }
}

}  // namespace

std::string render_table(const Json& report) {
  std::ostringstream out;
  for (auto it = report.begin(); it != report.end(); ++it)
    render_value(out, it.key(), it.value(), "");
  return out.str();
}

}  // namespace simdim
