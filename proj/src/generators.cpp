#include "gcol/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "gcol/rng.hpp"

namespace gcol {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Graph gen_erdos_renyi(int n, double p, std::uint64_t seed) {
  require(n >= 1, "erdos_renyi: n must be >= 1");
  require(p >= 0.0 && p <= 1.0, "erdos_renyi: p must be in [0,1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_watts_strogatz(int n, int k, double beta, std::uint64_t seed) {
  require(n >= 1, "watts_strogatz: n must be >= 1");
  require(k >= 0 && k % 2 == 0 && k < n, "watts_strogatz: k must be even and < n");
  require(beta >= 0.0 && beta <= 1.0, "watts_strogatz: beta must be in [0,1]");
  Rng rng(seed);
  std::set<std::pair<int, int>> edges;
  auto canon = [](int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; };
  for (int j = 1; j <= k / 2; ++j)
    for (int u = 0; u < n; ++u) edges.insert(canon(u, (u + j) % n));
  for (int j = 1; j <= k / 2; ++j) {
    for (int u = 0; u < n; ++u) {
      int v = (u + j) % n;
      if (!rng.bernoulli(beta)) continue;
      // replace (u,v) by (u,w) for a uniformly random non-neighbour w
      std::vector<int> candidates;
      for (int w = 0; w < n; ++w)
        if (w != u && !edges.count(canon(u, w))) candidates.push_back(w);
      if (candidates.empty()) continue;
      int w = candidates[rng.below(candidates.size())];
      edges.erase(canon(u, v));
      edges.insert(canon(u, w));
    }
  }
  return Graph::from_edges(n, {edges.begin(), edges.end()});
}

Graph gen_barabasi_albert(int n, int m_attach, std::uint64_t seed) {
  require(n >= 1, "barabasi_albert: n must be >= 1");
  require(m_attach >= 1 && m_attach < n, "barabasi_albert: need 1 <= m_attach < n");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> targets;  // vertex repeated once per incident edge
  for (int u = 0; u < m_attach; ++u)
    for (int v = u + 1; v < m_attach; ++v) {
      edges.emplace_back(u, v);
      targets.push_back(u);
      targets.push_back(v);
    }
  for (int v = m_attach; v < n; ++v) {
    std::set<int> chosen;
    while (static_cast<int>(chosen.size()) < m_attach) {
      int t = targets.empty() ? static_cast<int>(rng.below(v))
                              : targets[rng.below(targets.size())];
      chosen.insert(t);
    }
    for (int t : chosen) {
      edges.emplace_back(t, v);
      targets.push_back(t);
      targets.push_back(v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_gaussian_partition(int n, double mean_size, double shape, double p_in, double p_out,
                             std::uint64_t seed) {
  require(n >= 1, "gaussian_partition: n must be >= 1");
  require(mean_size >= 1.0, "gaussian_partition: mean_size must be >= 1");
  require(shape > 0.0, "gaussian_partition: shape must be > 0");
  require(p_in >= 0.0 && p_in <= 1.0 && p_out >= 0.0 && p_out <= 1.0,
          "gaussian_partition: probabilities must be in [0,1]");
  Rng rng(seed);
  std::vector<int> group(n);
  int assigned = 0, gid = 0;
  while (assigned < n) {
    double s = rng.normal(mean_size, std::sqrt(mean_size / shape));
    int size = std::max(1, static_cast<int>(std::lround(s)));
    size = std::min(size, n - assigned);
    for (int i = 0; i < size; ++i) group[assigned++] = gid;
    ++gid;
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(group[u] == group[v] ? p_in : p_out)) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_queen(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "queen: rows and cols must be >= 1");
  int n = rows * cols;
  std::vector<std::pair<int, int>> edges;
  for (int r1 = 0; r1 < rows; ++r1)
    for (int c1 = 0; c1 < cols; ++c1)
      for (int r2 = r1; r2 < rows; ++r2)
        for (int c2 = (r2 == r1 ? c1 + 1 : 0); c2 < cols; ++c2)
          if (r1 == r2 || c1 == c2 || r1 - c1 == r2 - c2 || r1 + c1 == r2 + c2)
            edges.emplace_back(r1 * cols + c1, r2 * cols + c2);
  return Graph::from_edges(n, std::move(edges));
}

namespace {

// near-equal contiguous split of 0..n-1 into k groups
std::vector<int> contiguous_groups(int n, int k) {
  std::vector<int> group(n);
  int base = n / k, extra = n % k, v = 0;
  for (int g = 0; g < k; ++g) {
    int size = base + (g < extra ? 1 : 0);
    for (int i = 0; i < size; ++i) group[v++] = g;
  }
  return group;
}

}  // namespace

BoundedGraph gen_known_chromatic(int n, int k, double p, std::uint64_t seed) {
  require(n >= 1, "known_chromatic: n must be >= 1");
  require(k >= 1 && k <= n, "known_chromatic: need 1 <= k <= n");
  require(p >= 0.0 && p <= 1.0, "known_chromatic: p must be in [0,1]");
  Rng rng(seed);
  std::vector<int> group = contiguous_groups(n, k);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (group[u] != group[v] && rng.bernoulli(p)) edges.emplace_back(u, v);
  return {Graph::from_edges(n, std::move(edges)), k, group};
}

BoundedGraph gen_leighton_like(int n, int k, std::uint64_t seed) {
  require(n >= 1, "leighton_like: n must be >= 1");
  require(k >= 1 && k <= n, "leighton_like: need 1 <= k <= n");
  Rng rng(seed);
  double p = rng.uniform_real(0.2, 0.6);  // background inter-group density
  std::vector<int> group = contiguous_groups(n, k);
  // first vertex of each group is its clique representative
  std::vector<int> rep(k, -1);
  for (int v = 0; v < n; ++v)
    if (rep[group[v]] < 0) rep[group[v]] = v;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(rep[i], rep[j]);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (group[u] != group[v] && rng.bernoulli(p)) edges.emplace_back(u, v);
  return {Graph::from_edges(n, std::move(edges)), k, group};
}

namespace {

struct SpinradIndex {
  int m;
  int a(int i) const { return i - 1; }                    // i in 1..m-2
  int b(int j) const { return (m - 2) + (j - 1); }        // j in 1..m-1
  int c(int j) const { return (2 * m - 3) + (j - 2); }    // j in 2..m
  int bp(int t) const { return (3 * m - 4) + (t - 1); }   // t in 1..2m
  int cp(int t) const { return (5 * m - 4) + (t - 1); }   // t in 1..2m
  int n() const { return 7 * m - 4; }
};

}  // namespace

Graph gen_spinrad(int m) {
  require(m >= 4, "spinrad: m must be >= 4");
  SpinradIndex ix{m};
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= m - 2; ++i)
    for (int j = 1; j <= m - 1; ++j)
      if (i != j) edges.emplace_back(ix.a(i), ix.b(j));
  for (int i = 1; i <= m - 2; ++i)
    for (int j = 2; j <= m; ++j)
      if (i < j) edges.emplace_back(ix.a(i), ix.c(j));
  // ladder (b_{i-1}, c_i) over the full range 2..m; see module notes: with
  // the endpoints dropped DSATUR colours the family optimally, so the
  // adversarial behaviour requires the closed range
  for (int i = 2; i <= m; ++i) edges.emplace_back(ix.b(i - 1), ix.c(i));

  std::vector<int> deg(ix.n(), 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  for (int j = 1; j <= m - 1; ++j) {
    int t = 1;
    while (deg[ix.b(j)] < 2 * m) {
      edges.emplace_back(ix.b(j), ix.bp(t));
      ++deg[ix.b(j)];
      ++t;
    }
  }
  for (int j = 2; j <= m; ++j) {
    int t = 1;
    while (deg[ix.c(j)] < 2 * m) {
      edges.emplace_back(ix.c(j), ix.cp(t));
      ++deg[ix.c(j)];
      ++t;
    }
  }
  return Graph::from_edges(ix.n(), std::move(edges));
}

ColourAssignment spinrad_witness(int m) {
  require(m >= 4, "spinrad: m must be >= 4");
  SpinradIndex ix{m};
  ColourAssignment colours(ix.n(), 0);  // A, B', C' -> 0
  for (int j = 1; j <= m - 1; ++j) colours[ix.b(j)] = 1;
  for (int j = 2; j <= m; ++j) colours[ix.c(j)] = 2;
  return colours;
}

Graph gen_mycielskian(int k) {
  require(k >= 1, "mycielskian: k must be >= 1");
  int n = 2;
  std::vector<std::pair<int, int>> edges = {{0, 1}};
  for (int step = 1; step < k; ++step) {
    // M(G): originals 0..n-1, shadow of v at n+v, apex 2n
    std::vector<std::pair<int, int>> next = edges;
    for (auto [u, v] : edges) {
      next.emplace_back(u, n + v);
      next.emplace_back(v, n + u);
    }
    for (int v = 0; v < n; ++v) next.emplace_back(n + v, 2 * n);
    edges = std::move(next);
    n = 2 * n + 1;
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace gcol
