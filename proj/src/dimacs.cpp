#include "gcol/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace gcol {

Graph parse_dimacs(std::istream& in, std::string* warning) {
  std::string line;
  int lineno = 0;
  bool have_p = false;
  int n = 0;
  long declared_m = 0;
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag.empty() || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (!(ss >> kind >> n >> declared_m) || (kind != "edge" && kind != "edges" && kind != "col"))
        throw DimacsError("malformed problem line", lineno);
      if (n < 0) throw DimacsError("negative vertex count", lineno);
      have_p = true;
    } else if (tag == "e") {
      if (!have_p) throw DimacsError("edge line before problem line", lineno);
      int u, v;
      if (!(ss >> u >> v)) throw DimacsError("malformed edge line", lineno);
      if (u < 1 || v < 1 || u > n || v > n)
        throw DimacsError("edge endpoint out of range [1," + std::to_string(n) + "]", lineno);
      if (u == v) throw DimacsError("self-loop", lineno);
      edges.emplace_back(u - 1, v - 1);
    } else if (tag == "n") {
      continue;  // node-weight lines in some variants; irrelevant here
    } else {
      throw DimacsError("unrecognised line type '" + tag + "'", lineno);
    }
  }
  if (!have_p) throw DimacsError("missing problem line", lineno == 0 ? 1 : lineno);

  Graph g = Graph::from_edges(n, std::move(edges));
  if (warning && g.edge_count() != declared_m) {
    *warning = "declared " + std::to_string(declared_m) + " edges, found " +
               std::to_string(g.edge_count()) + " distinct";
  }
  return g;
}

Graph parse_dimacs_file(const std::string& path, std::string* warning) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_dimacs(in, warning);
}

void write_dimacs(const Graph& g, std::ostream& out) {
  out << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  write_dimacs(g, out);
  return out.str();
}

void write_dimacs_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_dimacs(g, out);
}

}  // namespace gcol
