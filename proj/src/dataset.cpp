#include "gcol/dataset.hpp"

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <stdexcept>

#include "gcol/dimacs.hpp"
#include "gcol/generators.hpp"

namespace gcol {

namespace {

using Json = nlohmann::json;

// rows x cols factorisations with rows, cols >= 2 and product in range;
// queen boards are re-drawn from these
std::vector<std::pair<int, int>> queen_shapes(int n_min, int n_max) {
  std::vector<std::pair<int, int>> shapes;
  for (int r = 2; r * 2 <= n_max; ++r)
    for (int c = r; r * c <= n_max; ++c)
      if (r * c >= n_min) shapes.emplace_back(r, c);
  return shapes;
}

}  // namespace

SampledGraph sample_family_graph(int n_min, int n_max, Rng& rng) {
  if (n_min < 2 || n_max < n_min) throw std::invalid_argument("bad size range");
  static const char* families[7] = {"erdos_renyi",        "watts_strogatz", "barabasi_albert",
                                    "queen",              "gaussian_partition",
                                    "known_chromatic",    "leighton_like"};
  int fam = static_cast<int>(rng.below(7));
  int n = rng.uniform_int(n_min, n_max);
  std::uint64_t seed = rng.next_u64();
  SampledGraph out;
  out.family = families[fam];
  Json params;
  switch (fam) {
    case 0: {
      double p = rng.uniform_real(0.1, 0.9);
      params = {{"n", n}, {"p", p}};
      out.graph = gen_erdos_renyi(n, p, seed);
      break;
    }
    case 1: {
      int k_half_max = std::max(0, std::min(8, n - 1) / 2);
      int k = k_half_max == 0 ? 0 : 2 * rng.uniform_int(1, k_half_max);
      double beta = rng.uniform_real(0.1, 0.9);
      params = {{"n", n}, {"k", k}, {"beta", beta}};
      out.graph = gen_watts_strogatz(n, k, beta, seed);
      break;
    }
    case 2: {
      int m = rng.uniform_int(1, std::min(6, n - 1));
      params = {{"n", n}, {"m_attach", m}};
      out.graph = gen_barabasi_albert(n, m, seed);
      break;
    }
    case 3: {
      auto shapes = queen_shapes(n_min, n_max);
      if (shapes.empty()) {  // degenerate ranges fall back to Erdos-Renyi
        double p = rng.uniform_real(0.1, 0.9);
        out.family = "erdos_renyi";
        params = {{"n", n}, {"p", p}};
        out.graph = gen_erdos_renyi(n, p, seed);
        break;
      }
      auto [r, c] = shapes[rng.below(shapes.size())];
      params = {{"rows", r}, {"cols", c}};
      out.graph = gen_queen(r, c);
      break;
    }
    case 4: {
      double mean_size = rng.uniform_real(std::max(2.0, n / 5.0), std::max(3.0, n / 2.0));
      double shape = rng.uniform_real(2.0, 4.0);
      double p_in = rng.uniform_real(0.3, 0.7);
      double p_out = rng.uniform_real(0.05, 0.3);
      params = {{"n", n}, {"mean_size", mean_size}, {"shape", shape}, {"p_in", p_in}, {"p_out", p_out}};
      out.graph = gen_gaussian_partition(n, mean_size, shape, p_in, p_out, seed);
      break;
    }
    case 5: {
      int k_hi = std::max(1, std::min(10, n / 2));
      int k = rng.uniform_int(std::min(3, k_hi), k_hi);
      double p = rng.uniform_real(0.3, 0.9);
      params = {{"n", n}, {"k", k}, {"p", p}};
      auto bg = gen_known_chromatic(n, k, p, seed);
      out.graph = std::move(bg.graph);
      out.chi_upper = bg.k;
      break;
    }
    default: {
      int k_hi = std::max(1, std::min(10, n / 3));
      int k = rng.uniform_int(std::min(3, k_hi), k_hi);
      params = {{"n", n}, {"k", k}};
      auto bg = gen_leighton_like(n, k, seed);
      out.graph = std::move(bg.graph);
      out.chi_upper = bg.k;
      break;
    }
  }
  params["seed"] = seed;
  out.params = params.dump();
  return out;
}

std::vector<ManifestEntry> build_dataset(const DatasetOptions& opts) {
  if (opts.count < 1) throw std::invalid_argument("dataset: count must be >= 1");
  std::filesystem::create_directories(opts.out_dir);
  std::ofstream manifest(std::filesystem::path(opts.out_dir) / "manifest.jsonl");
  if (!manifest) throw std::runtime_error("cannot write manifest in " + opts.out_dir);

  Rng rng(opts.seed);
  std::vector<ManifestEntry> entries;
  entries.reserve(opts.count);
  for (int i = 0; i < opts.count; ++i) {
    SampledGraph sg = sample_family_graph(opts.n_min, opts.n_max, rng);
    char name[32];
    std::snprintf(name, sizeof name, "g_%06d.col", i);
    write_dimacs_file(sg.graph, (std::filesystem::path(opts.out_dir) / name).string());
    ManifestEntry e;
    e.path = name;
    e.family = sg.family;
    e.params = sg.params;
    e.seed = opts.seed;
    e.n = sg.graph.n();
    e.chi_upper = sg.chi_upper;
    Json line = {{"path", e.path}, {"family", e.family}, {"params", Json::parse(e.params)},
                 {"seed", e.seed}, {"n", e.n}};
    if (e.chi_upper >= 0) line["chi_upper"] = e.chi_upper;
    manifest << line.dump() << '\n';
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<Graph> sample_dataset(int count, int n_min, int n_max, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Graph> graphs;
  graphs.reserve(count);
  for (int i = 0; i < count; ++i) graphs.push_back(sample_family_graph(n_min, n_max, rng).graph);
  return graphs;
}

std::vector<ManifestEntry> load_manifest(const std::string& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw std::runtime_error("cannot open " + manifest_path);
  std::vector<ManifestEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j = Json::parse(line);
    ManifestEntry e;
    e.path = j.at("path").get<std::string>();
    e.family = j.at("family").get<std::string>();
    e.params = j.at("params").dump();
    e.seed = j.at("seed").get<std::uint64_t>();
    e.n = j.at("n").get<int>();
    if (j.contains("chi_upper")) e.chi_upper = j.at("chi_upper").get<int>();
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<Graph> load_manifest_graphs(const std::string& manifest_path) {
  auto dir = std::filesystem::path(manifest_path).parent_path();
  std::vector<Graph> graphs;
  for (const auto& e : load_manifest(manifest_path))
    graphs.push_back(parse_dimacs_file((dir / e.path).string()));
  return graphs;
}

}  // namespace gcol
