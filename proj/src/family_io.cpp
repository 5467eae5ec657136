#include "simdim/family_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "simdim/errors.hpp"

namespace simdim {

GraphFamily parse_family_file(std::istream& in, const std::string& filename) {
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(filename + ":" + std::to_string(lineno) + ": " + msg);
  };

  int n = -1;
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  std::vector<LabeledGraph> members;
  std::vector<std::string> names;
  std::unordered_set<std::string> name_set;
  LabeledGraph current;
  bool in_graph = false;

  auto finish_labels = [&]() {
    if (labels.empty()) {
      for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    }
    for (int i = 0; i < n; ++i) index[labels[i]] = i;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string word;
    if (!(ss >> word) || word[0] == '#') continue;

    if (word == "n") {
      if (n >= 0) throw fail("duplicate n line");
      if (!(ss >> n) || n < 1) throw fail("n line needs a positive integer");
    } else if (word == "labels") {
      if (n < 0) throw fail("labels line before n line");
      if (!labels.empty() || in_graph || !members.empty())
        throw fail("labels line must follow the n line immediately");
      std::string l;
      while (ss >> l) {
        if (index.count(l)) throw fail("duplicate label '" + l + "'");
        index[l] = static_cast<int>(labels.size());
        labels.push_back(l);
      }
      if (static_cast<int>(labels.size()) != n)
        throw fail("labels line lists " + std::to_string(labels.size()) + " labels, expected " +
                   std::to_string(n));
    } else if (word == "graph") {
      if (n < 0) throw fail("graph block before n line");
      if (in_graph) throw fail("graph block inside another graph block");
      if (index.empty()) finish_labels();
      std::string name;
      if (!(ss >> name)) throw fail("graph line needs a name");
      if (!name_set.insert(name).second) throw fail("duplicate graph name '" + name + "'");
      names.push_back(name);
      current = make_empty_graph(labels);
      in_graph = true;
    } else if (word == "end") {
      if (!in_graph) throw fail("end outside a graph block");
      members.push_back(std::move(current));
      in_graph = false;
    } else {
      if (!in_graph) throw fail("unexpected token '" + word + "'");
      std::string other;
      if (!(ss >> other)) throw fail("edge line needs two labels");
      std::string extra;
      if (ss >> extra) throw fail("edge line has trailing tokens");
      auto iu = index.find(word);
      if (iu == index.end()) throw fail("unknown label '" + word + "'");
      auto iv = index.find(other);
      if (iv == index.end()) throw fail("unknown label '" + other + "'");
      if (iu->second == iv->second) throw fail("self-loop at '" + word + "'");
      current.add_edge(iu->second, iv->second);
    }
  }
  ++lineno;
  if (n < 0) throw fail("missing n line");
  if (in_graph) throw fail("unterminated graph block");
  if (members.empty()) throw fail("file declares no graphs");
  return make_family(std::move(members), std::move(names));
}

GraphFamily load_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return parse_family_file(in, path);
}

void write_family_file(std::ostream& out, const GraphFamily& f) {
  for (const auto& l : f.labels) {
    if (l.empty() || l.find_first_of(" \t") != std::string::npos || l[0] == '#' || l == "n" ||
        l == "labels" || l == "graph" || l == "end")
      throw PreconditionError("label '" + l + "' cannot be serialized to a family file");
  }
  out << "n " << f.n() << '\n';
  out << "labels";
  for (const auto& l : f.labels) out << ' ' << l;
  out << '\n';
  for (int i = 0; i < f.size(); ++i) {
    out << "graph " << f.names[i] << '\n';
    for (auto [u, v] : f.members[i].edges())
      out << f.labels[u] << ' ' << f.labels[v] << '\n';
    out << "end\n";
  }
}

std::string family_file_text(const GraphFamily& f) {
  std::ostringstream ss;
  write_family_file(ss, f);
  return ss.str();
}

}  // namespace simdim
