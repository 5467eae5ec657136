#include "simdim/reduction.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "simdim/dimension.hpp"
#include "simdim/errors.hpp"

namespace simdim {

void validate(const Hsp2Instance& inst) {
  const int n = static_cast<int>(inst.ground.size());
  if (n < 2) throw PreconditionError("hitting set instance needs at least two ground elements");
  std::unordered_set<std::string> seen;
  for (const auto& l : inst.ground) {
    if (l.empty()) throw PreconditionError("empty ground element label");
    if (!seen.insert(l).second)
      throw PreconditionError("duplicate ground element '" + l + "'");
  }
  if (inst.subsets.empty()) throw PreconditionError("instance needs at least one subset");
  for (const auto& c : inst.subsets) {
    if (c.empty() || c.size() > 2)
      throw PreconditionError("subsets must have one or two elements");
    for (int v : c)
      if (v < 0 || v >= n) throw PreconditionError("subset element out of range");
    if (c.size() == 2 && c[0] == c[1])
      throw PreconditionError("subset lists the same element twice");
  }
  if (inst.budget < 1 || inst.budget > n)
    throw PreconditionError("budget must lie between 1 and the ground set size");
}

ReductionInstance reduce_hsp2(const Hsp2Instance& inst, ReductionPathOrder order) {
  validate(inst);
  const int n = static_cast<int>(inst.ground.size());

  std::vector<std::string> labels = inst.ground;
  for (const auto& l : inst.ground) labels.push_back(l + "'");
  labels.push_back("u");
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second)
        throw PreconditionError("vertex label collision in reduction: '" + l + "'");
  }
  const int hub = 2 * n;

  std::vector<LabeledGraph> members;
  std::vector<std::string> names;
  for (std::size_t r = 0; r < inst.subsets.size(); ++r) {
    const auto& c = inst.subsets[r];
    std::vector<int> path;
    std::vector<int> targets;
    if (c.size() == 1) {
      const int i = c[0];
      for (int v = 0; v < n; ++v)
        if (v != i) path.push_back(v);
      for (int v = 0; v < n; ++v)
        if (v != i) path.push_back(n + v);
      targets = {i, n + i};
    } else {
      const int i = std::min(c[0], c[1]), j = std::max(c[0], c[1]);
      for (int v = 0; v < n; ++v)
        if (v != i && v != j) path.push_back(v);
      for (int v = 0; v < n; ++v) path.push_back(n + v);
      targets = {i, j};
    }
    if (order == ReductionPathOrder::Reversed) std::reverse(path.begin(), path.end());

    LabeledGraph t = make_empty_graph(labels);
    t.add_edge(hub, path.front());
    for (std::size_t k = 0; k + 1 < path.size(); ++k) t.add_edge(path[k], path[k + 1]);
    t.add_edge(path.back(), targets[0]);
    t.add_edge(path.back(), targets[1]);
    if (t.edge_count() != t.n - 1 || !is_connected(t))
      throw InvariantError("constructed reduction member is not a tree");
    members.push_back(std::move(t));
    names.push_back("T" + std::to_string(r + 1));
  }

  ReductionInstance out;
  out.source = inst;
  out.family = make_family(std::move(members), std::move(names));
  out.ssd_budget = inst.budget + 1;
  return out;
}

VertexSubset brute_force_min_hitting_set(const Hsp2Instance& inst, int n_limit) {
  validate(inst);
  const int n = static_cast<int>(inst.ground.size());
  if (n > n_limit)
    throw SizeLimitError("brute force hitting set limited to " + std::to_string(n_limit) +
                         " elements");
  std::vector<std::uint64_t> masks;
  for (const auto& c : inst.subsets) {
    std::uint64_t m = 0;
    for (int v : c) m |= 1ULL << v;
    masks.push_back(m);
  }
  const std::uint64_t full = (1ULL << n) - 1;
  for (int k = 1; k <= n; ++k) {
    std::uint64_t mask = (1ULL << k) - 1;
    while (mask <= full) {
      bool hits = true;
      for (std::uint64_t m : masks)
        if (!(m & mask)) {
          hits = false;
          break;
        }
      if (hits) {
        VertexSubset s;
        s.role = SubsetRole::HittingSet;
        for (int v = 0; v < n; ++v)
          if ((mask >> v) & 1) s.vertices.push_back(v);
        return s;
      }
      std::uint64_t c = mask & -mask, r = mask + c;
      if (r > full) break;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  throw InvariantError("no hitting set found");  // unreachable: the ground set hits
}

ReductionVerification verify_reduction(const Hsp2Instance& inst, ReductionPathOrder order) {
  ReductionInstance red = reduce_hsp2(inst, order);
  VertexSubset hs = brute_force_min_hitting_set(inst);

  ReductionVerification v;
  v.hitting_set_size = hs.size();
  v.hitting_set = hs.vertices;
  DimensionReport sd = simultaneous_strong_dimension(red.family);
  v.sd_s = sd.value;
  if (red.family.n() <= 13) {
    DimensionReport oracle = brute_force_simdim(red.family, 13);
    if (oracle.value != v.sd_s)
      throw InvariantError("pipeline and brute force disagree on the reduction family");
  }
  v.equality = (v.sd_s == v.hitting_set_size + 1);

  const int n = static_cast<int>(inst.ground.size());
  v.ok = v.equality;
  for (int p = 1; p <= n; ++p) {
    ReductionPRow row;
    row.p = p;
    row.hitting_set_le_p = (v.hitting_set_size <= p);
    row.sd_le_p_plus_1 = (v.sd_s <= p + 1);
    row.consistent = (row.hitting_set_le_p == row.sd_le_p_plus_1);
    if (!row.consistent) v.ok = false;
    v.per_p.push_back(row);
  }
  return v;
}

Hsp2Instance parse_hsp2_file(std::istream& in, const std::string& filename) {
  Hsp2Instance inst;
  inst.budget = 0;
  std::unordered_map<std::string, int> index;
  std::string line;
  int lineno = 0;
  bool have_ground = false, have_budget = false;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(filename + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string word;
    if (!(ss >> word) || word[0] == '#') continue;
    if (word == "ground") {
      if (have_ground) throw fail("duplicate ground line");
      std::string l;
      while (ss >> l) {
        if (!index.emplace(l, static_cast<int>(inst.ground.size())).second)
          throw fail("duplicate ground element '" + l + "'");
        inst.ground.push_back(l);
      }
      if (inst.ground.empty()) throw fail("ground line lists no elements");
      have_ground = true;
    } else if (word == "set") {
      if (!have_ground) throw fail("set line before ground line");
      std::vector<int> c;
      std::string l;
      while (ss >> l) {
        auto it = index.find(l);
        if (it == index.end()) throw fail("unknown element '" + l + "'");
        c.push_back(it->second);
      }
      if (c.empty() || c.size() > 2) throw fail("sets must have one or two elements");
      inst.subsets.push_back(c);
    } else if (word == "budget") {
      if (have_budget) throw fail("duplicate budget line");
      if (!(ss >> inst.budget)) throw fail("budget line needs an integer");
      have_budget = true;
    } else {
      throw fail("unknown directive '" + word + "'");
    }
  }
  ++lineno;
  if (!have_ground) throw fail("missing ground line");
  if (inst.subsets.empty()) throw fail("instance needs at least one set line");
  if (!have_budget) throw fail("missing budget line");
  try {
    validate(inst);
  } catch (const PreconditionError& e) {
    throw ParseError(filename + ": " + e.what());
  }
  return inst;
}

void write_hsp2_file(std::ostream& out, const Hsp2Instance& inst) {
  out << "ground";
  for (const auto& l : inst.ground) out << ' ' << l;
  out << '\n';
  for (const auto& c : inst.subsets) {
    out << "set";
    for (int v : c) out << ' ' << inst.ground[v];
    out << '\n';
  }
  out << "budget " << inst.budget << '\n';
}

}  // namespace simdim
