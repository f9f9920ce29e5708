#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcol/graph.hpp"

namespace gcol {

using VertexOrder = std::vector<int>;

// Colours vertices in the given order, assigning each the smallest
// non-negative colour unused by its already-coloured neighbours. Throws if
// `order` is not a permutation of 0..n-1.
ColourAssignment greedy_colour(const Graph& g, const VertexOrder& order);

// Uniform random permutation from the seed.
VertexOrder order_random(const Graph& g, std::uint64_t seed);

// Degree descending, ties by vertex index ascending.
VertexOrder order_largest_first(const Graph& g);

// Repeatedly sends a minimum-residual-degree vertex to the back of the
// order and removes it; ties resolve so that equal-degree vertices appear
// in ascending index order in the result (a clique yields 0,1,...,n-1).
VertexOrder order_smallest_last(const Graph& g);

// Dynamic greedy: always colours the uncoloured vertex with the most
// distinct neighbour colours; ties by higher uncoloured degree, then lower
// index. All tie-breaking in this module is deliberately centralised here
// and in the order_* functions, since benchmark excesses depend on it.
ColourAssignment dsatur(const Graph& g);

// name in {random, lf, sl, dsatur}; seed only affects "random".
ColourAssignment run_baseline(const std::string& name, const Graph& g, std::uint64_t seed);

}  // namespace gcol
