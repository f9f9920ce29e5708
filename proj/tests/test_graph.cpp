#include <doctest.h>

#include <sstream>

#include "gcol/dimacs.hpp"
#include "gcol/generators.hpp"
#include "gcol/graph.hpp"
#include "gcol/rng.hpp"

using namespace gcol;

TEST_SUITE("graph_core") {

TEST_CASE("from_edges normalises and validates") {
  Graph g = Graph::from_edges(3, {{1, 0}, {0, 1}, {1, 2}});
  CHECK(g.n() == 3);
  CHECK(g.edge_count() == 2);  // duplicate collapsed, orientation canonical
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);

  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("colouring validity and colour count") {
  Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_valid_colouring(k3, {0, 1, 2}));
  CHECK(count_colours({0, 1, 2}) == 3);
  CHECK(!is_valid_colouring(k3, {0, 0, 1}));
  CHECK(is_valid_colouring(k3, {0, -1, 1}));  // edges with an uncoloured endpoint are ignored
  CHECK(!is_valid_colouring(k3, {0, -1, 0}));  // 0-2 is an edge with both ends coloured
  CHECK(count_colours({0, -1, 0}) == 1);
  CHECK(!is_complete_colouring({0, -1, 0}));
  CHECK_THROWS_AS(is_valid_colouring(k3, {0, 1}), std::invalid_argument);
}

TEST_CASE("dimacs parses the triangle") {
  std::istringstream in("c demo\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  Graph g = parse_dimacs(in);
  CHECK(g.n() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 2));
}

TEST_CASE("dimacs collapses duplicates and reversed lines") {
  std::istringstream in("p edge 2 1\ne 1 2\ne 2 1\n");
  std::string warn;
  Graph g = parse_dimacs(in, &warn);
  CHECK(g.edge_count() == 1);
  CHECK(warn.empty());  // collapsed count matches the declared count

  std::istringstream in2("p edge 2 2\ne 1 2\ne 2 1\n");
  Graph g2 = parse_dimacs(in2, &warn);
  CHECK(g2.edge_count() == 1);
  CHECK(!warn.empty());  // declared 2, only 1 distinct
}

TEST_CASE("dimacs declared edge count mismatch warns but parses") {
  std::istringstream in("p edge 3 9\ne 1 2\n");
  std::string warn;
  Graph g = parse_dimacs(in, &warn);
  CHECK(g.edge_count() == 1);
  CHECK(warn.find("declared 9") != std::string::npos);
}

TEST_CASE("dimacs errors carry line numbers") {
  auto parse = [](const char* text) {
    std::istringstream in(text);
    return parse_dimacs(in);
  };
  CHECK_THROWS_AS(parse("e 1 2\n"), DimacsError);          // edge before p
  CHECK_THROWS_AS(parse("p edge 2 1\ne 1 5\n"), DimacsError);  // out of range
  CHECK_THROWS_AS(parse("p edge 2 1\ne 1 1\n"), DimacsError);  // self loop
  CHECK_THROWS_AS(parse("p edge 2 1\ne one 2\n"), DimacsError);
  CHECK_THROWS_AS(parse("c nothing else\n"), DimacsError);  // missing p line
  try {
    parse("p edge 2 1\ne 1 9\n");
  } catch (const DimacsError& e) {
    CHECK(e.line_number == 2);
  }
}

TEST_CASE("dimacs writer emits sorted canonical lines") {
  Graph k3 = Graph::from_edges(3, {{2, 0}, {1, 0}, {2, 1}});
  CHECK(to_dimacs(k3) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  Graph empty = Graph::from_edges(4, {});
  CHECK(to_dimacs(empty) == "p edge 4 0\n");
}

TEST_CASE("round trip: parse(write(g)) == g over random graphs") {
  Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    int n = 2 + static_cast<int>(rng.below(40));
    Graph g;
    switch (i % 3) {
      case 0: g = gen_erdos_renyi(n, rng.uniform_real(0.0, 1.0), rng.next_u64()); break;
      case 1: {
        int k = 2 * (1 + static_cast<int>(rng.below(3)));
        if (k >= n) k = (n - 1) / 2 * 2;
        if (k < 2) { g = gen_erdos_renyi(n, 0.5, rng.next_u64()); break; }
        g = gen_watts_strogatz(n, k, rng.uniform_real(0.0, 1.0), rng.next_u64());
        break;
      }
      default: g = gen_barabasi_albert(n, 1 + static_cast<int>(rng.below(std::min(n - 1, 4))), rng.next_u64());
    }
    std::istringstream in(to_dimacs(g));
    CHECK(parse_dimacs(in) == g);
  }
}

}  // TEST_SUITE
