#include <doctest.h>

#include <stdexcept>

#include "gcol/exact.hpp"
#include "gcol/generators.hpp"
#include "gcol/rng.hpp"

using namespace gcol;

TEST_SUITE("generators") {

TEST_CASE("erdos renyi endpoints") {
  CHECK(gen_erdos_renyi(10, 0.0, 4).edge_count() == 0);
  CHECK(gen_erdos_renyi(10, 1.0, 4).edge_count() == 45);
  CHECK(gen_erdos_renyi(30, 0.4, 9) == gen_erdos_renyi(30, 0.4, 9));
  CHECK(gen_erdos_renyi(30, 0.4, 9) != gen_erdos_renyi(30, 0.4, 10));
  CHECK_THROWS_AS(gen_erdos_renyi(5, 1.5, 0), std::invalid_argument);
}

TEST_CASE("watts strogatz keeps the lattice edge count") {
  for (std::uint64_t seed : {1, 2, 3}) {
    Graph g = gen_watts_strogatz(20, 4, 0.5, seed);
    CHECK(g.n() == 20);
    CHECK(g.edge_count() == 40);  // rewiring replaces, never adds
  }
  CHECK_THROWS_AS(gen_watts_strogatz(10, 3, 0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_watts_strogatz(10, 10, 0.5, 0), std::invalid_argument);
}

TEST_CASE("barabasi albert edge count follows the construction") {
  Graph g = gen_barabasi_albert(20, 2, 5);
  CHECK(g.edge_count() == 1 + 2 * 18);  // seed clique C(2,2)=1, then 2 per newcomer
  CHECK(gen_barabasi_albert(15, 3, 7).edge_count() == 3 + 3 * 12);
  CHECK_THROWS_AS(gen_barabasi_albert(5, 5, 0), std::invalid_argument);
}

TEST_CASE("gaussian partition produces a simple graph deterministically") {
  Graph g = gen_gaussian_partition(40, 10, 3, 0.6, 0.1, 11);
  CHECK(g.n() == 40);
  CHECK(g == gen_gaussian_partition(40, 10, 3, 0.6, 0.1, 11));
}

TEST_CASE("queen boards") {
  Graph q55 = gen_queen(5, 5);
  CHECK(q55.n() == 25);
  Graph row = gen_queen(1, 4);  // one row: every pair shares the row
  CHECK(row.edge_count() == 6);
  Graph q22 = gen_queen(2, 2);
  CHECK(q22.edge_count() == 6);  // K4
}

TEST_CASE("known chromatic construction") {
  auto empty = gen_known_chromatic(10, 1, 1.0, 3);
  CHECK(empty.graph.edge_count() == 0);
  CHECK(empty.k == 1);

  auto tri = gen_known_chromatic(6, 3, 1.0, 3);
  CHECK(tri.graph.edge_count() == 12);  // complete tripartite K_{2,2,2}
  CHECK(exact_chromatic(tri.graph).chromatic_number == 3);

  for (std::uint64_t s = 0; s < 10; ++s) {
    auto bg = gen_known_chromatic(20, 4, 0.5, s);
    CHECK(is_valid_colouring(bg.graph, bg.witness));
    CHECK(is_complete_colouring(bg.witness));
    CHECK(count_colours(bg.witness) <= bg.k);
  }
  CHECK_THROWS_AS(gen_known_chromatic(3, 4, 0.5, 0), std::invalid_argument);
}

TEST_CASE("leighton-like construction") {
  auto kk = gen_leighton_like(5, 5, 1);
  CHECK(kk.graph.edge_count() == 10);  // n == k collapses to K_k

  auto bg = gen_leighton_like(8, 3, 2);
  CHECK(exact_chromatic(bg.graph).chromatic_number == 3);
  CHECK(is_valid_colouring(bg.graph, bg.witness));

  // planted clique: one representative per group, pairwise adjacent
  for (std::uint64_t s = 0; s < 6; ++s) {
    auto b = gen_leighton_like(20, 4, s);
    std::vector<int> reps;
    for (int g = 0; g < 4; ++g)
      for (int v = 0; v < 20; ++v)
        if (b.witness[v] == g) {
          reps.push_back(v);
          break;
        }
    REQUIRE(reps.size() == 4);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK(b.graph.has_edge(reps[i], reps[j]));
  }
}

TEST_CASE("spinrad structure") {
  CHECK(gen_spinrad(4).n() == 24);
  CHECK_THROWS_AS(gen_spinrad(3), std::invalid_argument);
  for (int m = 4; m <= 10; ++m) {
    Graph g = gen_spinrad(m);
    CHECK(g.n() == 7 * m - 4);
    // all B and C vertices have degree exactly 2m
    for (int j = 0; j < 2 * (m - 1); ++j) CHECK(g.degree(m - 2 + j) == 2 * m);
    ColourAssignment w = spinrad_witness(m);
    CHECK(is_valid_colouring(g, w));  // the 3-partition is independent-by-parts
    CHECK(count_colours(w) == 3);
    CHECK(g == gen_spinrad(m));
  }
}

TEST_CASE("mycielskian sizes") {
  CHECK(gen_mycielskian(2).n() == 5);    // C5
  CHECK(gen_mycielskian(3).n() == 11);
  CHECK(gen_mycielskian(5).n() == 47);
  CHECK(gen_mycielskian(6).n() == 95);
  CHECK(gen_mycielskian(7).n() == 191);
  CHECK(exact_chromatic(gen_mycielskian(3)).chromatic_number == 4);
}

}  // TEST_SUITE
