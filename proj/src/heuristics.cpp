#include "gcol/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gcol/rng.hpp"

namespace gcol {

namespace {

int lowest_permissible(const Graph& g, const ColourAssignment& colours, int v) {
  std::vector<char> used;
  for (int w : g.neighbours(v)) {
    int c = colours[w];
    if (c < 0) continue;
    if (c >= static_cast<int>(used.size())) used.resize(c + 1, 0);
    used[c] = 1;
  }
  int c = 0;
  while (c < static_cast<int>(used.size()) && used[c]) ++c;
  return c;
}

}  // namespace

ColourAssignment greedy_colour(const Graph& g, const VertexOrder& order) {
  if (static_cast<int>(order.size()) != g.n())
    throw std::invalid_argument("greedy_colour: order length mismatch");
  std::vector<char> seen(g.n(), 0);
  for (int v : order) {
    if (v < 0 || v >= g.n() || seen[v])
      throw std::invalid_argument("greedy_colour: order is not a permutation");
    seen[v] = 1;
  }
  ColourAssignment colours(g.n(), -1);
  for (int v : order) colours[v] = lowest_permissible(g, colours, v);
  return colours;
}

VertexOrder order_random(const Graph& g, std::uint64_t seed) {
  VertexOrder order(g.n());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(order);
  return order;
}

VertexOrder order_largest_first(const Graph& g) {
  VertexOrder order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  return order;
}

VertexOrder order_smallest_last(const Graph& g) {
  int n = g.n();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<char> removed(n, 0);
  VertexOrder order(n);
  // positions fill back to front; degree ties send the higher index later,
  // so equal-degree vertices keep ascending order in the result
  for (int pos = n - 1; pos >= 0; --pos) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (removed[v]) continue;
      if (best < 0 || deg[v] < deg[best] || (deg[v] == deg[best] && v > best)) best = v;
    }
    removed[best] = 1;
    order[pos] = best;
    for (int w : g.neighbours(best))
      if (!removed[w]) --deg[w];
  }
  return order;
}

ColourAssignment dsatur(const Graph& g) {
  int n = g.n();
  ColourAssignment colours(n, -1);
  std::vector<std::set<int>> neighbour_colours(n);
  std::vector<int> uncoloured_deg(n);
  for (int v = 0; v < n; ++v) uncoloured_deg[v] = g.degree(v);

  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (colours[v] >= 0) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      auto sat = [&](int x) { return static_cast<int>(neighbour_colours[x].size()); };
      if (sat(v) != sat(best)) {
        if (sat(v) > sat(best)) best = v;
      } else if (uncoloured_deg[v] != uncoloured_deg[best]) {
        if (uncoloured_deg[v] > uncoloured_deg[best]) best = v;
      }  // index ascending: keep earlier vertex on full tie
    }
    int c = 0;
    for (int used : neighbour_colours[best]) {
      if (used != c) break;
      ++c;
    }
    colours[best] = c;
    for (int w : g.neighbours(best)) {
      neighbour_colours[w].insert(c);
      --uncoloured_deg[w];
    }
  }
  return colours;
}

ColourAssignment run_baseline(const std::string& name, const Graph& g, std::uint64_t seed) {
  if (name == "random") return greedy_colour(g, order_random(g, seed));
  if (name == "lf") return greedy_colour(g, order_largest_first(g));
  if (name == "sl") return greedy_colour(g, order_smallest_last(g));
  if (name == "dsatur") return dsatur(g);
  throw std::invalid_argument("unknown baseline heuristic: " + name);
}

}  // namespace gcol
