#include "gcol/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "gcol/heuristics.hpp"

namespace gcol {

namespace {

// Greedy clique, multi-start: seeded at every vertex, extending by degree
// descending. Returns the largest clique found (a lower bound on chi).
std::vector<int> greedy_clique(const Graph& g) {
  int n = g.n();
  std::vector<int> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  std::vector<int> best;
  for (int s = 0; s < n; ++s) {
    std::vector<int> clique = {s};
    for (int v : by_degree) {
      if (v == s) continue;
      bool ok = true;
      for (int u : clique)
        if (!g.has_edge(u, v)) {
          ok = false;
          break;
        }
      if (ok) clique.push_back(v);
    }
    if (clique.size() > best.size()) best = clique;
  }
  return best;
}

constexpr int kMaxColours = 64;  // colour bitmask width

struct BnB {
  const Graph& g;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  int best_k;
  ColourAssignment best;
  ColourAssignment cur;
  std::vector<std::uint64_t> nb_mask;  // colours present among coloured neighbours
  std::vector<std::vector<int>> nb_count;  // per vertex, per colour
  std::vector<int> unc_deg;
  int lb;

  BnB(const Graph& graph, std::uint64_t node_budget, int ub, ColourAssignment ub_witness,
      int clique_lb)
      : g(graph),
        budget(node_budget),
        best_k(ub),
        best(std::move(ub_witness)),
        cur(graph.n(), -1),
        nb_mask(graph.n(), 0),
        nb_count(graph.n(), std::vector<int>(std::min(ub, kMaxColours), 0)),
        unc_deg(graph.n()),
        lb(clique_lb) {
    for (int v = 0; v < g.n(); ++v) unc_deg[v] = g.degree(v);
  }

  // DSATUR selection: max saturation, then max uncoloured degree, then index
  int select() const {
    int pick = -1, pick_sat = -1;
    for (int v = 0; v < g.n(); ++v) {
      if (cur[v] >= 0) continue;
      int sat = std::popcount(nb_mask[v]);
      if (pick < 0 || sat > pick_sat || (sat == pick_sat && unc_deg[v] > unc_deg[pick])) {
        pick = v;
        pick_sat = sat;
      }
    }
    return pick;
  }

  void assign(int v, int c) {
    cur[v] = c;
    for (int w : g.neighbours(v)) {
      if (++nb_count[w][c] == 1) nb_mask[w] |= (1ULL << c);
      --unc_deg[w];
    }
  }

  void unassign(int v, int c) {
    cur[v] = -1;
    for (int w : g.neighbours(v)) {
      if (--nb_count[w][c] == 0) nb_mask[w] &= ~(1ULL << c);
      ++unc_deg[w];
    }
  }

  void dfs(int coloured, int used) {
    if (budget_hit || best_k == lb) return;
    if (++nodes > budget) {
      budget_hit = true;
      return;
    }
    if (used >= best_k) return;
    if (coloured == g.n()) {
      best_k = used;
      best = cur;
      return;
    }
    int v = select();
    std::uint64_t mask = nb_mask[v];
    // existing colours, plus one new colour when that still beats best_k
    int cap = std::min(used + 1, best_k - 1);
    for (int c = 0; c < cap; ++c) {
      if ((mask >> c) & 1ULL) continue;
      assign(v, c);
      dfs(coloured + 1, std::max(used, c + 1));
      unassign(v, c);
      if (budget_hit || best_k == lb) return;
    }
  }
};

}  // namespace

ExactResult exact_chromatic(const Graph& g, std::uint64_t node_budget) {
  ExactResult res;
  if (g.n() == 0) return res;

  ColourAssignment ub_witness = dsatur(g);
  int ub = count_colours(ub_witness);
  int lb = std::max<int>(1, static_cast<int>(greedy_clique(g).size()));

  if (ub > kMaxColours) {  // beyond the mask width; such instances are out of scope
    res.chromatic_number = ub;
    res.lower_bound = lb;
    res.witness = std::move(ub_witness);
    res.node_budget_hit = true;
    return res;
  }

  BnB solver(g, node_budget, ub, std::move(ub_witness), lb);
  if (ub > lb) {
    // colour classes are interchangeable: pin the first vertex to colour 0
    int v0 = solver.select();
    solver.assign(v0, 0);
    solver.dfs(1, 1);
  }
  res.chromatic_number = solver.best_k;
  res.lower_bound = solver.budget_hit ? lb : solver.best_k;
  res.witness = std::move(solver.best);
  res.node_budget_hit = solver.budget_hit;
  res.nodes = solver.nodes;
  return res;
}

}  // namespace gcol
