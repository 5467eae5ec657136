#include "simdim/dimension.hpp"

#include <algorithm>
#include <bit>

#include "simdim/errors.hpp"

namespace simdim {

bool strongly_resolves(const DistanceMatrix& d, int w, int u, int v) {
  return d(u, w) == d(u, v) + d(v, w) || d(v, w) == d(v, u) + d(u, w);
}

bool is_strong_generator(const DistanceMatrix& d, const std::vector<int>& s) {
  for (int u = 0; u < d.n; ++u)
    for (int v = u + 1; v < d.n; ++v) {
      bool resolved = false;
      for (int w : s)
        if (strongly_resolves(d, w, u, v)) {
          resolved = true;
          break;
        }
      if (!resolved) return false;
    }
  return true;
}

bool is_strong_generator(const LabeledGraph& g, const std::vector<int>& s) {
  if (!is_connected(g)) throw DisconnectedError("strong generator check requires a connected graph");
  return is_strong_generator(all_pairs_distances(g), s);
}

namespace {

GeneratorCertificate certify(const std::vector<DistanceMatrix>& dists, const std::vector<int>& s,
                             GeneratorKind kind) {
  GeneratorCertificate c;
  c.subset.vertices = s;
  std::sort(c.subset.vertices.begin(), c.subset.vertices.end());
  c.subset.role = SubsetRole::Generator;
  c.kind = kind;
  c.member_ok.reserve(dists.size());
  for (const auto& d : dists) c.member_ok.push_back(is_strong_generator(d, s));
  return c;
}

std::vector<DistanceMatrix> family_distances(const GraphFamily& f) {
  require_connected_members(f);
  std::vector<DistanceMatrix> ds;
  ds.reserve(f.size());
  for (const auto& g : f.members) ds.push_back(all_pairs_distances(g));
  return ds;
}

void require_dimension_input(const GraphFamily& f) {
  if (f.n() < 2) throw PreconditionError("dimension is defined for at least two vertices");
  require_connected_members(f);
}

bool mask_generates(const DistanceMatrix& d, std::uint64_t mask) {
  for (int u = 0; u < d.n; ++u)
    for (int v = u + 1; v < d.n; ++v) {
      bool resolved = false;
      for (std::uint64_t m = mask; m; m &= m - 1) {
        int w = std::countr_zero(m);
        if (strongly_resolves(d, w, u, v)) {
          resolved = true;
          break;
        }
      }
      if (!resolved) return false;
    }
  return true;
}

// Subsets of {0..n-1} by increasing cardinality, lowest mask first; returns
// the size of the first subset satisfying pred, or -1.
template <class Pred>
int smallest_subset(int n, Pred&& pred, std::vector<int>* witness) {
  const std::uint64_t full = (1ULL << n) - 1;
  for (int k = 1; k <= n - 1; ++k) {
    std::uint64_t mask = (1ULL << k) - 1;
    while (mask <= full) {
      if (pred(mask)) {
        if (witness) {
          witness->clear();
          for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) witness->push_back(v);
        }
        return k;
      }
      std::uint64_t c = mask & -mask, r = mask + c;
      if (r > full) break;
      mask = (((r ^ mask) >> 2) / c) | r;  // Gosper's hack
    }
  }
  return -1;
}

}  // namespace

GeneratorCertificate is_simultaneous_strong_generator(const GraphFamily& f,
                                                      const std::vector<int>& s) {
  return certify(family_distances(f), s, GeneratorKind::SimultaneousStrongGenerator);
}

std::string to_string(DimMethod m) {
  switch (m) {
    case DimMethod::SrCover: return "sr-cover";
    case DimMethod::CoverShortcut: return "cover-shortcut";
    case DimMethod::BruteForce: return "brute-force";
  }
  return "?";
}

DimensionReport strong_dimension(const LabeledGraph& g) {
  if (g.n < 2) throw PreconditionError("strong dimension is defined for at least two vertices");
  if (!is_connected(g)) throw DisconnectedError("strong dimension requires a connected graph");
  StrongResolvingGraph sr = strong_resolving_graph(g);
  CoverResult cover = min_vertex_cover(sr);
  DimensionReport r;
  r.value = cover.size;
  r.method = DimMethod::SrCover;
  r.witness = certify({all_pairs_distances(g)}, cover.witness.vertices,
                      GeneratorKind::StrongGenerator);
  r.per_member = {r.value};
  if (!r.witness.ok() || r.witness.subset.size() != r.value)
    throw InvariantError("strong dimension witness failed definitional verification");
  return r;
}

DimensionReport simultaneous_strong_dimension(const GraphFamily& f) {
  require_dimension_input(f);
  StrongResolvingGraph u = union_sr_graph(f);
  CoverResult cover = min_vertex_cover(u);
  DimensionReport r;
  r.value = cover.size;
  r.method = DimMethod::SrCover;
  r.witness = certify(family_distances(f), cover.witness.vertices,
                      GeneratorKind::SimultaneousStrongGenerator);
  for (const auto& g : f.members) r.per_member.push_back(strong_dimension(g).value);
  if (!r.witness.ok() || r.witness.subset.size() != r.value)
    throw InvariantError("simultaneous strong dimension witness failed verification");
  return r;
}

DimensionReport brute_force_simdim(const GraphFamily& f, int n_limit) {
  require_dimension_input(f);
  const int n = f.n();
  if (n > n_limit)
    throw SizeLimitError("brute force simultaneous dimension limited to " +
                         std::to_string(n_limit) + " vertices");
  std::vector<DistanceMatrix> dists = family_distances(f);

  std::vector<int> witness;
  int value = smallest_subset(
      n,
      [&](std::uint64_t mask) {
        for (const auto& d : dists)
          if (!mask_generates(d, mask)) return false;
        return true;
      },
      &witness);
  // V minus any single vertex always strongly generates, so -1 means a bug.
  if (value < 0) throw InvariantError("brute force found no simultaneous strong generator");

  DimensionReport r;
  r.value = value;
  r.method = DimMethod::BruteForce;
  r.witness = certify(dists, witness, GeneratorKind::SimultaneousStrongGenerator);
  for (const auto& d : dists)
    r.per_member.push_back(smallest_subset(
        n, [&](std::uint64_t mask) { return mask_generates(d, mask); }, nullptr));
  if (!r.witness.ok()) throw InvariantError("brute force witness failed verification");
  return r;
}

DimensionReport strong_resolving_cover_number(const LabeledGraph& g) {
  if (g.n < 2) throw PreconditionError("strong resolving cover needs at least two vertices");
  if (!is_connected(g)) throw DisconnectedError("strong resolving cover requires a connected graph");
  StrongResolvingGraph sr = strong_resolving_graph(g);
  // A set covers both G and G_SR exactly when it covers their edge union.
  std::vector<std::pair<int, int>> combined = g.edges();
  for (auto e : sr.edges())
    if (!g.adjacent(e.first, e.second)) combined.push_back(e);
  CoverResult cover = min_vertex_cover(g.n, combined);
  DimensionReport r;
  r.value = cover.size;
  r.method = DimMethod::SrCover;
  r.witness = certify({all_pairs_distances(g)}, cover.witness.vertices,
                      GeneratorKind::StrongResolvingCover);
  r.per_member = {r.value};
  if (!r.witness.ok() || !is_vertex_cover(g.edges(), r.witness.subset.vertices))
    throw InvariantError("strong resolving cover witness failed verification");
  return r;
}

DimensionReport complement_pair_dimension(const LabeledGraph& g) {
  if (g.n < 2) throw PreconditionError("complement pair needs at least two vertices");
  if (!is_connected(g)) throw DisconnectedError("graph is not connected");
  LabeledGraph gc = complement(g);
  if (!is_connected(gc)) throw DisconnectedError("complement is not connected");

  GraphFamily pair = make_family({g, gc}, {"G", "Gc"});
  DimensionReport general = simultaneous_strong_dimension(pair);

  const int diam_g = all_pairs_distances(g).diameter;
  const int diam_gc = all_pairs_distances(gc).diameter;

  // Shortcut route: when one diameter is 2, Sd_s(G,G^c) equals the strong
  // resolving cover number of the other graph. Both routes must agree.
  DimensionReport result = general;
  const LabeledGraph* shortcut_base = nullptr;
  if (diam_gc == 2)
    shortcut_base = &g;
  else if (diam_g == 2)
    shortcut_base = &gc;
  if (shortcut_base) {
    DimensionReport cover = strong_resolving_cover_number(*shortcut_base);
    if (cover.value != general.value)
      throw InvariantError("cover shortcut disagrees with the union route");
    result.value = cover.value;
    result.witness = certify(family_distances(pair), cover.witness.subset.vertices,
                             GeneratorKind::SimultaneousStrongGenerator);
    result.method = DimMethod::CoverShortcut;
  }
  if (!result.witness.ok()) throw InvariantError("complement pair witness failed verification");
  return result;
}

}  // namespace simdim
