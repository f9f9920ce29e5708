// Test-only reference implementations, kept independent of the library's
// search and gradient code on purpose.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "gcol/graph.hpp"
#include "gcol/heuristics.hpp"

namespace gcol::oracle {

inline bool colourable_rec(const Graph& g, std::vector<int>& colours, int v, int k) {
  if (v == g.n()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int w : g.neighbours(v))
      if (w < v && colours[w] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    colours[v] = c;
    if (colourable_rec(g, colours, v + 1, k)) return true;
  }
  colours[v] = -1;
  return false;
}

// Exhaustive enumeration over colour assignments (intended for n <= ~10).
inline int brute_force_chromatic(const Graph& g) {
  if (g.n() == 0) return 0;
  for (int k = 1; k <= g.n(); ++k) {
    std::vector<int> colours(g.n(), -1);
    if (colourable_rec(g, colours, 0, k)) return k;
  }
  return g.n();
}

// Minimum colours over every vertex ordering fed to the greedy engine
// (n <= 7 keeps this under 5040 orders).
inline int min_greedy_over_all_orders(const Graph& g) {
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  int best = g.n() == 0 ? 0 : g.n();
  do {
    best = std::min(best, count_colours(greedy_colour(g, order)));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace gcol::oracle
