#include "gcol/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gcol {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("graph: self-loop on vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  g.adj_.resize(n);
  for (auto [u, v] : edges) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.edges_ = std::move(edges);
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool is_valid_colouring(const Graph& g, const ColourAssignment& colours) {
  if (static_cast<int>(colours.size()) != g.n())
    throw std::invalid_argument("colouring length does not match vertex count");
  for (auto [u, v] : g.edges()) {
    if (colours[u] >= 0 && colours[u] == colours[v]) return false;
  }
  return true;
}

int count_colours(const ColourAssignment& colours) {
  std::unordered_set<int> used;
  for (int c : colours)
    if (c >= 0) used.insert(c);
  return static_cast<int>(used.size());
}

bool is_complete_colouring(const ColourAssignment& colours) {
  for (int c : colours)
    if (c < 0) return false;
  return true;
}

}  // namespace gcol
