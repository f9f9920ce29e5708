#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gcol {

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// safe to share across threads.
class Graph {
 public:
  Graph() = default;

  // Normalises edges to (u<v), sorts, collapses duplicates. Throws
  // std::invalid_argument on self-loops or endpoints outside [0,n).
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool has_edge(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;   // canonical: u < v, sorted
  std::vector<std::vector<int>> adj_;        // sorted neighbour lists
};

// Colour arrays use -1 for "uncoloured"; colours are 0,1,2,...
using ColourAssignment = std::vector<int>;

// True iff every edge with both endpoints coloured has distinct endpoint
// colours. Throws std::invalid_argument if the array length is not g.n().
bool is_valid_colouring(const Graph& g, const ColourAssignment& colours);

// Number of distinct non-negative colours.
int count_colours(const ColourAssignment& colours);

bool is_complete_colouring(const ColourAssignment& colours);

}  // namespace gcol
