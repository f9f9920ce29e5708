#include <doctest.h>

#include <stdexcept>

#include "gcol/exact.hpp"
#include "gcol/generators.hpp"
#include "gcol/rng.hpp"
#include "oracles.hpp"

using namespace gcol;

namespace {

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph::from_edges(10, edges);
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("small named graphs") {
  CHECK(exact_chromatic(gen_erdos_renyi(4, 1.0, 0)).chromatic_number == 4);  // K4
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(exact_chromatic(c5).chromatic_number == 3);
  CHECK(exact_chromatic(Graph::from_edges(0, {})).chromatic_number == 0);
  CHECK(exact_chromatic(Graph::from_edges(1, {})).chromatic_number == 1);
  CHECK(exact_chromatic(gen_queen(5, 5)).chromatic_number == 5);
}

TEST_CASE("petersen graph cross-checked against enumeration") {
  Graph p = petersen();
  ExactResult r = exact_chromatic(p);
  CHECK(r.chromatic_number == 3);
  CHECK(oracle::brute_force_chromatic(p) == 3);
}

TEST_CASE("matches brute force on random graphs up to n=8") {
  Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    int n = 1 + static_cast<int>(rng.below(8));
    Graph g = gen_erdos_renyi(n, rng.uniform_real(0.0, 1.0), rng.next_u64());
    ExactResult r = exact_chromatic(g);
    CHECK(!r.node_budget_hit);
    CHECK(r.chromatic_number == oracle::brute_force_chromatic(g));
    CHECK(is_valid_colouring(g, r.witness));
    CHECK(is_complete_colouring(r.witness));
    CHECK(count_colours(r.witness) == r.chromatic_number);
  }
}

TEST_CASE("witness uses exactly chi colours on structured graphs") {
  for (int m : {4, 5}) {
    ExactResult r = exact_chromatic(gen_spinrad(m));
    CHECK(r.chromatic_number == 3);
    CHECK(count_colours(r.witness) == 3);
  }
  CHECK(exact_chromatic(gen_known_chromatic(12, 4, 0.9, 5).graph).chromatic_number <= 4);
}

TEST_CASE("node budget returns flagged bounds instead of throwing") {
  // mycielski graphs have clique number 2, so the lower bound cannot close
  // the gap and the search must actually run
  Graph g = gen_mycielskian(4);
  ExactResult r = exact_chromatic(g, 10);  // tiny budget
  CHECK(r.node_budget_hit);
  CHECK(r.lower_bound >= 1);
  CHECK(r.lower_bound <= r.chromatic_number);
  CHECK(is_valid_colouring(g, r.witness));
  CHECK(count_colours(r.witness) == r.chromatic_number);  // best known colouring
  ExactResult full = exact_chromatic(g);
  CHECK(!full.node_budget_hit);
  CHECK(full.chromatic_number == 5);
  CHECK(full.chromatic_number <= r.chromatic_number);
}

}  // TEST_SUITE
