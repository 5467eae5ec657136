#include <doctest.h>

#include "simdim/cover.hpp"
#include "simdim/errors.hpp"
#include "simdim/families.hpp"
#include "test_util.hpp"

using namespace simdim;

TEST_SUITE("cover-solver") {

TEST_CASE("covers of standard graphs") {
  for (int n = 2; n <= 7; ++n) CHECK(min_vertex_cover(n, make_complete(n).edges()).size == n - 1);

  // C_5 needs 3: frozen after the subset oracle confirmed it
  CHECK(testutil::oracle_min_cover_size(5, make_cycle(5).edges()) == 3);
  CHECK(min_vertex_cover(5, make_cycle(5).edges()).size == 3);
  CHECK(brute_force_min_cover(5, make_cycle(5).edges()).size == 3);

  std::vector<std::pair<int, int>> matching = {{0, 1}, {2, 3}, {4, 5}};
  CHECK(min_vertex_cover(6, matching).size == 3);

  CHECK(min_vertex_cover(4, {}).size == 0);
  CHECK(brute_force_min_cover(4, {}).size == 0);
  CHECK(min_vertex_cover(4, make_path(4).edges()).size == 2);

  // Petersen: frozen after the oracle confirmed 6
  LabeledGraph pet = petersen_graph();
  CHECK(testutil::oracle_min_cover_size(pet.n, pet.edges()) == 6);
  CHECK(min_vertex_cover(pet.n, pet.edges()).size == 6);
  CHECK(brute_force_min_cover(pet.n, pet.edges()).size == 6);
}

TEST_CASE("brute force respects its size cap") {
  CHECK_THROWS_AS(brute_force_min_cover(25, {{0, 1}}, 20), SizeLimitError);
}

TEST_CASE("solver agrees with both brute forces on random graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 2 + seed % 11;
    LabeledGraph g = testutil::random_connected(n, 0.35, 2000 + seed);
    auto edges = g.edges();
    CoverResult fast = min_vertex_cover(n, edges);
    CoverResult slow = brute_force_min_cover(n, edges);
    CHECK(fast.size == slow.size);
    CHECK(fast.size == testutil::oracle_min_cover_size(n, edges));
    CHECK(is_vertex_cover(edges, fast.witness.vertices));
    CHECK(is_vertex_cover(edges, slow.witness.vertices));
    CHECK(fast.witness.size() == fast.size);
  }
}

TEST_CASE("cover plus independence equals n") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int n = 3 + seed % 8;
    LabeledGraph g = testutil::random_connected(n, 0.5, 3000 + seed);
    int beta = min_vertex_cover(n, g.edges()).size;
    int alpha = max_clique(complement(g)).size;
    CHECK(beta + alpha == n);
  }
}

TEST_CASE("every reduction rule can be disabled without changing the size") {
  CoverOptions all;
  CoverOptions no_deg1;
  no_deg1.degree_one_rule = false;
  CoverOptions no_high;
  no_high.high_degree_rule = false;
  CoverOptions no_lb;
  no_lb.matching_lower_bound = false;
  CoverOptions none{false, false, false};
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    int n = 2 + seed % 13;
    LabeledGraph g = testutil::random_connected(n, 0.25 + 0.05 * (seed % 6), 4000 + seed);
    auto edges = g.edges();
    int reference = min_vertex_cover(n, edges, all).size;
    CHECK(min_vertex_cover(n, edges, no_deg1).size == reference);
    CHECK(min_vertex_cover(n, edges, no_high).size == reference);
    CHECK(min_vertex_cover(n, edges, no_lb).size == reference);
    CHECK(min_vertex_cover(n, edges, none).size == reference);
  }
}

TEST_CASE("constrained clique") {
  LabeledGraph k4 = make_complete(4);
  CHECK(max_clique(k4).size == 4);
  // in a complete graph every pair is a true-twin pair
  auto no_true_twins = [&](int u, int v) {
    return twin_relation(k4, u, v) != TwinKind::TrueTwins;
  };
  CHECK(max_constrained_clique(k4, no_true_twins).size == 1);
  CHECK(max_clique(make_cycle(5)).size == 2);
}

TEST_CASE("clique solver agrees with the subset oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int n = 2 + seed % 10;
    LabeledGraph g = testutil::random_connected(n, 0.55, 5000 + seed);
    CHECK(max_clique(g).size == testutil::oracle_max_clique_size(g));
  }
}

TEST_CASE("deterministic witnesses") {
  LabeledGraph g = testutil::random_connected(10, 0.4, 99);
  CoverResult a = min_vertex_cover(g.n, g.edges());
  CoverResult b = min_vertex_cover(g.n, g.edges());
  CHECK(a.witness.vertices == b.witness.vertices);
  CHECK(a.explored == b.explored);
  CliqueResult c1 = max_clique(g);
  CliqueResult c2 = max_clique(g);
  CHECK(c1.witness.vertices == c2.witness.vertices);
}

}  // TEST_SUITE
