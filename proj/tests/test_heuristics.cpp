#include <doctest.h>

#include <stdexcept>

#include "gcol/exact.hpp"
#include "gcol/generators.hpp"
#include "gcol/heuristics.hpp"
#include "gcol/rng.hpp"
#include "oracles.hpp"

using namespace gcol;

TEST_SUITE("heuristics") {

TEST_CASE("greedy colours the triangle in visit order") {
  Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  ColourAssignment c = greedy_colour(k3, {2, 0, 1});
  CHECK(c[2] == 0);
  CHECK(c[0] == 1);
  CHECK(c[1] == 2);
}

TEST_CASE("greedy path endpoints first") {
  Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
  ColourAssignment c = greedy_colour(path, {0, 2, 1});
  CHECK(c == ColourAssignment{0, 1, 0});
}

TEST_CASE("greedy rejects non-permutations") {
  Graph g = Graph::from_edges(3, {{0, 1}});
  CHECK_THROWS_AS(greedy_colour(g, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(greedy_colour(g, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(greedy_colour(g, {0, 1, 3}), std::invalid_argument);
}

TEST_CASE("largest first puts the star centre first") {
  Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(order_largest_first(star)[0] == 0);
  CHECK(count_colours(greedy_colour(star, order_largest_first(star))) == 2);
}

TEST_CASE("smallest last on a clique is the identity order") {
  Graph k5 = gen_erdos_renyi(5, 1.0, 0);
  CHECK(order_smallest_last(k5) == VertexOrder{0, 1, 2, 3, 4});
}

TEST_CASE("random order is a seeded permutation") {
  Graph g = gen_erdos_renyi(12, 0.5, 3);
  VertexOrder a = order_random(g, 1), b = order_random(g, 1), c = order_random(g, 2);
  CHECK(a == b);
  CHECK(a != c);
  VertexOrder sorted = a;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == VertexOrder{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
}

TEST_CASE("some order achieves the chromatic number (7-vertex brute force)") {
  Rng rng(5);
  for (int i = 0; i < 8; ++i) {
    Graph g = gen_erdos_renyi(7, rng.uniform_real(0.2, 0.8), rng.next_u64());
    CHECK(oracle::min_greedy_over_all_orders(g) == exact_chromatic(g).chromatic_number);
  }
}

TEST_CASE("dsatur hits queen5_5 optimally and fails on the adversarial family") {
  CHECK(count_colours(dsatur(gen_queen(5, 5))) == 5);
  CHECK(count_colours(dsatur(gen_spinrad(4))) == 4);
  CHECK(count_colours(dsatur(Graph::from_edges(5, {}))) == 1);
}

TEST_CASE("baseline dispatch") {
  Graph q = gen_queen(5, 5);
  CHECK(count_colours(run_baseline("dsatur", q, 0)) == 5);
  Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(count_colours(run_baseline("random", k3, 99)) == 3);
  Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(count_colours(run_baseline("lf", star, 0)) == 2);
  CHECK_THROWS_AS(run_baseline("tabu", k3, 0), std::invalid_argument);
}

TEST_CASE("every heuristic is complete, valid and within maxdeg+1") {
  Rng rng(17);
  for (int i = 0; i < 25; ++i) {
    Graph g;
    switch (i % 5) {
      case 0: g = gen_erdos_renyi(4 + rng.below(30), rng.uniform_real(0.1, 0.9), rng.next_u64()); break;
      case 1: g = gen_barabasi_albert(5 + rng.below(25), 2, rng.next_u64()); break;
      case 2: g = gen_queen(3, 3 + rng.below(4)); break;
      case 3: g = gen_spinrad(4 + rng.below(4)); break;
      default: g = gen_gaussian_partition(10 + rng.below(20), 5, 3, 0.5, 0.1, rng.next_u64());
    }
    for (const char* name : {"random", "lf", "sl", "dsatur"}) {
      ColourAssignment c = run_baseline(name, g, rng.next_u64());
      CHECK(is_complete_colouring(c));
      CHECK(is_valid_colouring(g, c));
      CHECK(count_colours(c) <= g.max_degree() + 1);
    }
  }
}

}  // TEST_SUITE
