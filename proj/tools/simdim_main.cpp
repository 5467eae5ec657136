#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "simdim/bounds.hpp"
#include "simdim/dimension.hpp"
#include "simdim/errors.hpp"
#include "simdim/families.hpp"
#include "simdim/family_io.hpp"
#include "simdim/reduction.hpp"
#include "simdim/report.hpp"
#include "simdim/rng.hpp"
#include "simdim/strong_resolving.hpp"

namespace {

using simdim::Json;

struct Output {
  std::string format = "table";
  std::string out_path;

  void emit_report(const Json& report) const {
    emit(format == "json" ? simdim::render_json(report) : simdim::render_table(report));
  }

  void emit(const std::string& text) const {
    if (out_path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(out_path);
    if (!f) throw simdim::Error("cannot write to '" + out_path + "'");
    f << text;
  }
};

int default_exact_limit() {
  if (const char* env = std::getenv("SIMDIM_EXACT_LIMIT")) {
    try {
      return std::stoi(env);
    } catch (...) {
      throw simdim::PreconditionError("SIMDIM_EXACT_LIMIT is not an integer");
    }
  }
  return 16;
}

Json labels_of(const simdim::GraphFamily& f, const std::vector<int>& vertices) {
  Json arr = Json::array();
  for (int v : vertices) arr.push_back(f.labels[v]);
  return arr;
}

Json graph_stats(const simdim::GraphFamily& f, int i) {
  const auto& g = f.members[i];
  simdim::DistanceMatrix d = simdim::all_pairs_distances(g);
  simdim::DimensionReport dim = simdim::strong_dimension(g);
  Json row;
  row["name"] = f.names[i];
  row["n"] = g.n;
  row["m"] = g.edge_count();
  row["diameter"] = d.diameter;
  row["boundary"] = simdim::boundary(g).size();
  row["simplicial"] = simdim::simplicial_vertices(g).size();
  row["dim_s"] = dim.value;
  row["witness"] = labels_of(f, dim.witness.subset.vertices);
  return row;
}

int run_dims(const std::string& path, bool oracle, int exact_limit, const Output& out) {
  simdim::GraphFamily f = simdim::load_family_file(path);
  simdim::require_connected_members(f);
  Json report;
  report["command"] = "dims";
  report["file"] = path;
  report["n"] = f.n();
  Json graphs = Json::array();
  for (int i = 0; i < f.size(); ++i) graphs.push_back(graph_stats(f, i));
  report["graphs"] = graphs;
  simdim::DimensionReport sd = simdim::simultaneous_strong_dimension(f);
  report["family"]["sd_s"] = sd.value;
  report["family"]["witness"] = labels_of(f, sd.witness.subset.vertices);
  report["family"]["method"] = simdim::to_string(sd.method);
  report["family"]["witness_verified"] = sd.witness.ok();
  bool agree = true;
  if (oracle) {
    simdim::DimensionReport bf = simdim::brute_force_simdim(f, exact_limit);
    report["oracle"]["sd_s"] = bf.value;
    report["oracle"]["per_member"] = bf.per_member;
    agree = (bf.value == sd.value);
    report["oracle"]["verdict"] = agree ? "AGREE" : "DISAGREE";
  }
  out.emit_report(report);
  if (!agree) throw simdim::InvariantError("oracle disagrees with the pipeline");
  return 0;
}

int run_srgraph(const std::string& path, const std::string& graph_name, const Output& out) {
  simdim::GraphFamily f = simdim::load_family_file(path);
  int idx = -1;
  if (graph_name.empty()) {
    if (f.size() != 1)
      throw simdim::PreconditionError("file has several graphs; pick one with --graph");
    idx = 0;
  } else {
    for (int i = 0; i < f.size(); ++i)
      if (f.names[i] == graph_name) idx = i;
    if (idx < 0) throw simdim::PreconditionError("unknown graph name '" + graph_name + "'");
  }
  const auto& g = f.members[idx];
  if (!simdim::is_connected(g))
    throw simdim::DisconnectedError("member '" + f.names[idx] + "' is not connected");
  simdim::StrongResolvingGraph sr = simdim::strong_resolving_graph(g);
  Json report;
  report["command"] = "srgraph";
  report["file"] = path;
  report["graph"] = f.names[idx];
  Json edges = Json::array();
  for (auto [u, v] : sr.edges()) {
    Json e = Json::array();
    e.push_back(f.labels[u]);
    e.push_back(f.labels[v]);
    edges.push_back(e);
  }
  report["sr_edges"] = edges;
  report["sr_edge_count"] = sr.edge_count();
  report["isolated"] = labels_of(f, sr.isolated_vertices());
  report["boundary"] = labels_of(f, simdim::boundary(g).vertices);
  report["simplicial"] = labels_of(f, simdim::simplicial_vertices(g).vertices);
  out.emit_report(report);
  return 0;
}

int run_complement_pair(const std::string& path, const Output& out) {
  simdim::GraphFamily f = simdim::load_family_file(path);
  if (f.size() != 1)
    throw simdim::PreconditionError("complement-pair expects a file with exactly one graph");
  const auto& g = f.members[0];
  simdim::DimensionReport pair = simdim::complement_pair_dimension(g);
  simdim::LabeledGraph gc = simdim::complement(g);
  simdim::DimensionReport beta_s = simdim::strong_resolving_cover_number(g);
  simdim::CoverResult beta = simdim::min_vertex_cover(g.n, g.edges());
  simdim::InteriorReport interior = simdim::interior_report(g);
  Json report;
  report["command"] = "complement-pair";
  report["file"] = path;
  report["graph"] = f.names[0];
  report["n"] = g.n;
  report["diameter"] = simdim::all_pairs_distances(g).diameter;
  report["complement_diameter"] = simdim::all_pairs_distances(gc).diameter;
  report["sd_s_pair"] = pair.value;
  report["method"] = simdim::to_string(pair.method);
  report["witness"] = labels_of(f, pair.witness.subset.vertices);
  report["dim_s"] = pair.per_member[0];
  report["dim_s_complement"] = pair.per_member[1];
  report["beta"] = beta.size;
  report["beta_s"] = beta_s.value;
  report["beta_ring"] = interior.beta_ring;
  out.emit_report(report);
  return 0;
}

int run_bounds(const std::string& path, int exact_limit, const Output& out) {
  simdim::GraphFamily f = simdim::load_family_file(path);
  simdim::require_connected_members(f);
  simdim::BoundsReport b = simdim::verify_all_bounds(f, exact_limit);
  Json report;
  report["command"] = "bounds";
  report["file"] = path;
  report["n"] = b.n;
  report["sd_s"] = b.sd_s;
  report["witness"] = labels_of(f, b.sd_witness);
  report["per_member_dim_s"] = b.per_member_dim;
  Json rows = Json::array();
  auto row = [&](const std::string& name, const std::string& rel, int value,
                 const std::string& note) {
    Json r;
    r["bound"] = name;
    r["relation"] = rel;
    r["value"] = value;
    r["note"] = note;
    rows.push_back(r);
  };
  row("max member dim_s", "lower", b.max_lower, "");
  row("sum of member dim_s", "upper", b.sum_bound, "");
  row("|family boundary| - 1", "upper", b.boundary_bound, "");
  row("n - twin-free clique", "upper", b.twin_free_clique_bound,
      b.all_diameter_two ? "equality (diameter-2 family)" : "");
  row("n - rho", "upper", b.rho_bound, b.rho_exact ? "" : "heuristic lower bound for rho");
  report["bounds"] = rows;
  report["twin_free_clique"] = b.twin_free_clique;
  report["rho"] = b.rho;
  report["rho_exact"] = b.rho_exact;
  report["rho_witness"] = labels_of(f, b.rho_witness);
  if (b.rho_common_leaf >= 0) report["rho_common_leaf"] = f.labels[b.rho_common_leaf];
  report["violations"] = b.violations;
  out.emit_report(report);
  if (!b.violations.empty()) throw simdim::InvariantError("bound violations detected");
  return 0;
}

int run_verify_reduction(const std::string& path, const Output& out) {
  std::ifstream in(path);
  if (!in) throw simdim::ParseError(path + ": cannot open file");
  simdim::Hsp2Instance inst = simdim::parse_hsp2_file(in, path);
  simdim::ReductionVerification v = simdim::verify_reduction(inst);
  Json report;
  report["command"] = "verify-reduction";
  report["file"] = path;
  report["ground_size"] = static_cast<int>(inst.ground.size());
  report["subset_count"] = static_cast<int>(inst.subsets.size());
  report["budget"] = inst.budget;
  report["hitting_set_size"] = v.hitting_set_size;
  Json hs = Json::array();
  for (int i : v.hitting_set) hs.push_back(inst.ground[i]);
  report["hitting_set"] = hs;
  report["sd_s"] = v.sd_s;
  report["expected_sd_s"] = v.hitting_set_size + 1;
  Json rows = Json::array();
  for (const auto& r : v.per_p) {
    Json j;
    j["p"] = r.p;
    j["hitting_set_le_p"] = r.hitting_set_le_p;
    j["sd_s_le_p_plus_1"] = r.sd_le_p_plus_1;
    j["consistent"] = r.consistent;
    rows.push_back(j);
  }
  report["per_p"] = rows;
  report["verdict"] = v.ok ? "PASS" : "FAIL";
  out.emit_report(report);
  if (!v.ok) throw simdim::InvariantError("reduction verification failed");
  return 0;
}

struct GenArgs {
  std::string kind;
  int n = 6;
  int k = 2;
  int r = 3;
  int s = 3;
  int t = 3;
  int spine = 3;
  int legs = 1;
  double prob = 0.5;
  std::string which = "fig1";
  std::string ground;
  std::string sets;
  int budget = 1;
  bool with_complement = false;
  std::uint64_t seed = 0;
};

simdim::Hsp2Instance parse_inline_instance(const GenArgs& a) {
  simdim::Hsp2Instance inst;
  std::istringstream gss(a.ground);
  std::string tok;
  while (std::getline(gss, tok, ','))
    if (!tok.empty()) inst.ground.push_back(tok);
  std::istringstream sss(a.sets);
  std::string set_tok;
  while (std::getline(sss, set_tok, ';')) {
    std::vector<int> c;
    std::istringstream es(set_tok);
    while (std::getline(es, tok, ',')) {
      if (tok.empty()) continue;
      int idx = -1;
      for (std::size_t i = 0; i < inst.ground.size(); ++i)
        if (inst.ground[i] == tok) idx = static_cast<int>(i);
      if (idx < 0) throw simdim::PreconditionError("unknown element '" + tok + "' in --sets");
      c.push_back(idx);
    }
    if (!c.empty()) inst.subsets.push_back(c);
  }
  inst.budget = a.budget;
  simdim::validate(inst);
  return inst;
}

simdim::Hsp2Instance random_instance(int n, int k, simdim::Rng& rng) {
  simdim::Hsp2Instance inst;
  for (int i = 0; i < n; ++i) inst.ground.push_back("v" + std::to_string(i + 1));
  for (int i = 0; i < k; ++i) {
    int a = rng.uniform(n);
    if (rng.chance(0.5)) {
      int b = rng.uniform(n - 1);
      if (b >= a) ++b;
      inst.subsets.push_back({a, b});
    } else {
      inst.subsets.push_back({a});
    }
  }
  inst.budget = 1 + rng.uniform(n);
  return inst;
}

int run_gen(const GenArgs& a, const Output& out) {
  using namespace simdim;
  GraphFamily fam;
  std::string extra_comment;
  Rng rng(a.seed);

  if (a.kind == "path") {
    fam = singleton_family(make_path(a.n), "P" + std::to_string(a.n));
  } else if (a.kind == "cycle") {
    fam = singleton_family(make_cycle(a.n), "C" + std::to_string(a.n));
  } else if (a.kind == "complete") {
    fam = singleton_family(make_complete(a.n), "K" + std::to_string(a.n));
  } else if (a.kind == "star") {
    fam = singleton_family(make_star(a.r), "K1_" + std::to_string(a.r));
  } else if (a.kind == "bipartite") {
    fam = singleton_family(make_complete_bipartite(a.r, a.s),
                           "K" + std::to_string(a.r) + "_" + std::to_string(a.s));
  } else if (a.kind == "hypercube") {
    fam = singleton_family(make_hypercube(a.r), "Q" + std::to_string(a.r));
  } else if (a.kind == "stars") {
    fam = make_star_family(a.r);
  } else if (a.kind == "shared-paths") {
    fam = make_shared_leaf_paths(a.n, a.k, a.seed);
  } else if (a.kind == "tree") {
    fam = singleton_family(make_random_tree(a.n, a.seed), "T");
  } else if (a.kind == "graph") {
    fam = singleton_family(make_random_connected_graph(a.n, a.prob, a.seed), "G");
  } else if (a.kind == "caterpillar") {
    fam = singleton_family(make_caterpillar(a.spine, a.legs), "T");
  } else if (a.kind == "figure") {
    fam = figure_family(a.which);
  } else if (a.kind == "para3") {
    fam = singleton_family(para3_construction(a.r, a.t, a.s), "G");
  } else if (a.kind == "hsp2") {
    if (out.out_path.empty())
      throw PreconditionError("gen hsp2 needs --out to place the instance file alongside");
    Hsp2Instance inst =
        a.ground.empty() ? random_instance(a.n, a.k, rng) : parse_inline_instance(a);
    ReductionInstance red = reduce_hsp2(inst);
    std::ofstream instf(out.out_path + ".hsp2");
    if (!instf) throw Error("cannot write to '" + out.out_path + ".hsp2'");
    write_hsp2_file(instf, inst);
    fam = red.family;
    extra_comment = "# ssd-budget " + std::to_string(red.ssd_budget) + "\n";
  } else {
    throw PreconditionError("unknown gen kind '" + a.kind + "'");
  }

  if (a.with_complement) {
    if (fam.size() != 1)
      throw PreconditionError("--with-complement works on single-graph kinds");
    LabeledGraph gc = complement(fam.members[0]);
    fam = make_family({fam.members[0], gc}, {fam.names[0], fam.names[0] + "c"});
  }

  out.emit(extra_comment + family_file_text(fam));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strong metric dimension toolkit"};
  app.require_subcommand(1);

  Output out;
  std::string file;
  bool oracle = false;
  int exact_limit = -1;
  std::string graph_name;
  GenArgs gen;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", out.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--out", out.out_path, "write output to a file");
    cmd->add_option("--exact-limit", exact_limit,
                    "size cap for exhaustive searches (env SIMDIM_EXACT_LIMIT)");
    cmd->add_option("--seed", gen.seed, "seed for randomized generators");
  };

  CLI::App* dims = app.add_subcommand("dims", "per-member and simultaneous strong dimension");
  dims->add_option("file", file, "family file")->required();
  dims->add_flag("--oracle", oracle, "cross-check with the definitional brute force");
  add_common(dims);

  CLI::App* sr = app.add_subcommand("srgraph", "strong resolving graph edge list");
  sr->add_option("file", file, "family file")->required();
  sr->add_option("--graph", graph_name, "graph name inside the file");
  add_common(sr);

  CLI::App* comp = app.add_subcommand("complement-pair", "Sd_s(G, G^c) and related quantities");
  comp->add_option("file", file, "family file with one graph")->required();
  add_common(comp);

  CLI::App* bounds = app.add_subcommand("bounds", "all bound checks for a family");
  bounds->add_option("file", file, "family file")->required();
  add_common(bounds);

  CLI::App* vred =
      app.add_subcommand("verify-reduction", "check a hitting-set instance end to end");
  vred->add_option("file", file, "hsp2 instance file")->required();
  add_common(vred);

  CLI::App* gcmd = app.add_subcommand("gen", "generate a family file");
  gcmd->add_option("kind", gen.kind,
                   "path|cycle|complete|star|bipartite|hypercube|stars|shared-paths|tree|graph|"
                   "caterpillar|figure|para3|hsp2")
      ->required();
  gcmd->add_option("-n,--count", gen.n, "vertex count");
  gcmd->add_option("-k", gen.k, "member / subset count");
  gcmd->add_option("-r", gen.r, "first size parameter");
  gcmd->add_option("-s", gen.s, "second size parameter");
  gcmd->add_option("-t", gen.t, "path length parameter");
  gcmd->add_option("--spine", gen.spine, "caterpillar spine length");
  gcmd->add_option("--legs", gen.legs, "caterpillar legs per spine vertex");
  gcmd->add_option("--prob", gen.prob, "edge probability for random graphs");
  gcmd->add_option("--which", gen.which, "figure selector (fig1..fig5, petersen)");
  gcmd->add_option("--ground", gen.ground, "hsp2 ground elements, comma separated");
  gcmd->add_option("--sets", gen.sets, "hsp2 subsets, ';' between sets, ',' inside");
  gcmd->add_option("--budget", gen.budget, "hsp2 budget");
  gcmd->add_flag("--with-complement", gen.with_complement, "append the complement as a member");
  add_common(gcmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage errors are exit code 1 regardless of CLI11's own codes
  }

  try {
    if (exact_limit < 0) exact_limit = default_exact_limit();
    if (dims->parsed()) return run_dims(file, oracle, exact_limit, out);
    if (sr->parsed()) return run_srgraph(file, graph_name, out);
    if (comp->parsed()) return run_complement_pair(file, out);
    if (bounds->parsed()) return run_bounds(file, exact_limit, out);
    if (vred->parsed()) return run_verify_reduction(file, out);
    if (gcmd->parsed()) return run_gen(gen, out);
  } catch (const simdim::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const simdim::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const simdim::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
