#pragma once

#include <cstdint>

#include "gcol/graph.hpp"

namespace gcol {

// All generators are pure functions of (parameters, seed): identical
// arguments produce identical graphs on every platform (see Rng).

Graph gen_erdos_renyi(int n, double p, std::uint64_t seed);

// Ring lattice with k neighbours per vertex (k even, k < n), each clockwise
// edge rewired with probability beta.
Graph gen_watts_strogatz(int n, int k, double beta, std::uint64_t seed);

// Preferential attachment: complete graph on m_attach seed vertices, every
// later vertex attaches to m_attach distinct existing vertices. Edge count
// is therefore C(m_attach,2) + m_attach*(n - m_attach).
Graph gen_barabasi_albert(int n, int m_attach, std::uint64_t seed);

// Gaussian random partition: group sizes drawn from N(mean_size,
// mean_size/shape) until n vertices are covered; edge probability p_in
// within groups, p_out across.
Graph gen_gaussian_partition(int n, double mean_size, double shape, double p_in, double p_out,
                             std::uint64_t seed);

// Board squares adjacent iff they share a row, column or diagonal.
Graph gen_queen(int rows, int cols);

struct BoundedGraph {
  Graph graph;
  int k;                      // chromatic bound certified by construction
  ColourAssignment witness;   // k-colouring realising the bound
};

// Random k-partite graph: k nonempty near-equal groups, inter-group edges
// with probability p. The group assignment is a valid k-colouring, so
// chi <= k by construction.
BoundedGraph gen_known_chromatic(int n, int k, double p, std::uint64_t seed);

// k-partite graph with one planted k-clique (one representative per group,
// pairwise joined) plus random inter-group edges, giving chi = k exactly.
BoundedGraph gen_leighton_like(int n, int k, std::uint64_t seed);

// Adversarial family on n = 7m-4 vertices for which DSATUR needs m colours
// although chi = 3. Vertex layout, in index order:
//   a_1..a_{m-2}, b_1..b_{m-1}, c_2..c_m, b'_1..b'_{2m}, c'_1..c'_{2m}
// Edges: (a_i,b_j) for i != j; (a_i,c_j) for i < j; the ladder (b_{i-1},c_i)
// for 2 <= i <= m; plus padding edges from B to B' and C to C', assigned in
// ascending index order, bringing every B and C degree to exactly 2m.
Graph gen_spinrad(int m);

// The 3-colouring {A u B' u C', B, C}; certifies chi <= 3 independently of
// any solver.
ColourAssignment spinrad_witness(int m);

// DIMACS-style myciel{k}: k-1 Mycielskian steps from K2; n = 3*2^(k-1) - 1,
// chromatic number k+1, triangle-free.
Graph gen_mycielskian(int k);

}  // namespace gcol
