#pragma once

#include <cstdint>

#include "gcol/graph.hpp"

namespace gcol {

struct ExactResult {
  int chromatic_number = 0;  // proven when !node_budget_hit, else best upper bound
  int lower_bound = 0;       // best proven lower bound
  ColourAssignment witness;  // complete valid colouring with chromatic_number colours
  bool node_budget_hit = false;
  std::uint64_t nodes = 0;
};

// Branch and bound over colour classes: DSATUR vertex selection, greedy
// clique lower bound, DSATUR upper bound, colours introduced in ascending
// order (the first branch vertex is pinned to colour 0). Intended for
// n up to ~30; beyond the node budget it returns the best known bounds
// with node_budget_hit set instead of throwing.
ExactResult exact_chromatic(const Graph& g, std::uint64_t node_budget = 20'000'000);

}  // namespace gcol
