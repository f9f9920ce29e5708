#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "gcol/graph.hpp"

namespace gcol {

struct DimacsError : std::runtime_error {
  DimacsError(const std::string& msg, int line)
      : std::runtime_error("dimacs:" + std::to_string(line) + ": " + msg), line_number(line) {}
  int line_number;
};

// DIMACS .col reader. Comment lines start with 'c'; one "p edge <n> <m>"
// line; "e <u> <v>" lines with 1-based endpoints. Duplicate and reversed
// edge lines collapse to one edge. A mismatch between the declared edge
// count and the collapsed count is reported through `warning` (when given)
// rather than treated as an error, since published instances are known to
// be inconsistent.
Graph parse_dimacs(std::istream& in, std::string* warning = nullptr);
Graph parse_dimacs_file(const std::string& path, std::string* warning = nullptr);

// Emits "p edge n m" then one "e u v" line per edge, 1-based, lower
// endpoint first, sorted; the exact byte layout parse_dimacs round-trips.
void write_dimacs(const Graph& g, std::ostream& out);
std::string to_dimacs(const Graph& g);
void write_dimacs_file(const Graph& g, const std::string& path);

}  // namespace gcol
