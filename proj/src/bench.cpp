#include "gcol/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "gcol/dataset.hpp"
#include "gcol/generators.hpp"
#include "gcol/heuristics.hpp"

namespace gcol {

namespace {

// index-sliced parallel loop; results must be written to per-index slots
void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < std::min(jobs, count); ++t)
    workers.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& w : workers) w.join();
}

std::pair<double, double> mean_and_stderr(const std::vector<double>& xs) {
  if (xs.empty()) return {0.0, 0.0};
  double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (xs.size() - 1)) / std::sqrt(static_cast<double>(xs.size()))};
}

std::string csv_double(double x) {
  if (!std::isfinite(x)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

const std::vector<Color02Info>& color02_table() {
  static const std::vector<Color02Info> table = {
      {"queen5_5", 25, 5},   {"queen6_6", 36, 7},   {"myciel5", 47, 6},
      {"queen7_7", 49, 7},   {"queen8_8", 64, 9},   {"1-Insertions_4", 67, 4},
      {"huck", 74, 11},      {"jean", 80, 10},      {"queen9_9", 81, 10},
      {"david", 87, 11},     {"mug88_1", 88, 4},    {"myciel6", 95, 7},
      {"queen8_12", 96, 12}, {"games120", 120, 9},  {"queen11_11", 121, 11},
      {"anna", 138, 11},     {"2-Insertions_4", 149, 4}, {"queen13_13", 169, 13},
      {"myciel7", 191, 8},   {"homer", 561, 13},
  };
  return table;
}

std::optional<int> color02_chi(const std::string& stem) {
  for (const auto& e : color02_table())
    if (e.stem == stem) return e.chi;
  return std::nullopt;
}

std::optional<Graph> make_color02_instance(const std::string& stem) {
  if (stem.rfind("queen", 0) == 0) {
    auto sep = stem.find('_');
    if (sep == std::string::npos) return std::nullopt;
    int rows = std::atoi(stem.substr(5, sep - 5).c_str());
    int cols = std::atoi(stem.substr(sep + 1).c_str());
    if (rows < 1 || cols < 1) return std::nullopt;
    return gen_queen(rows, cols);
  }
  if (stem.rfind("myciel", 0) == 0) {
    int k = std::atoi(stem.substr(6).c_str());
    if (k < 2) return std::nullopt;
    return gen_mycielskian(k);
  }
  return std::nullopt;  // data-derived instance; needs the published file
}

std::vector<BenchRow> run_benchmark(const std::vector<NamedGraph>& instances,
                                    const std::vector<std::string>& heuristics,
                                    const std::vector<CheckpointData>& policies, int random_runs,
                                    std::uint64_t seed, int jobs) {
  if (random_runs < 1) throw std::invalid_argument("random_runs must be >= 1");
  int rows_per_instance = static_cast<int>(heuristics.size()) + (policies.empty() ? 0 : 1);
  std::vector<BenchRow> rows(instances.size() * rows_per_instance);

  parallel_for(static_cast<int>(instances.size()), jobs, [&](int i) {
    const NamedGraph& inst = instances[i];
    int slot = i * rows_per_instance;
    for (const std::string& h : heuristics) {
      BenchRow r;
      r.instance = inst.name;
      r.n = inst.graph.n();
      r.chi = inst.chi;
      r.heuristic = h;
      if (h == "random") {
        std::vector<double> colours;
        for (int run = 0; run < random_runs; ++run)
          colours.push_back(
              count_colours(run_baseline("random", inst.graph, mix_seed(seed, i * 100003 + run))));
        std::tie(r.colours, r.stderr_mean) = mean_and_stderr(colours);
        r.runs = random_runs;
      } else {
        r.colours = count_colours(run_baseline(h, inst.graph, seed));
        r.runs = 1;
      }
      if (inst.chi >= 0) r.excess = r.colours - inst.chi;
      rows[slot++] = std::move(r);
    }
    if (!policies.empty()) {
      BenchRow r;
      r.instance = inst.name;
      r.n = inst.graph.n();
      r.chi = inst.chi;
      r.heuristic = "policy";
      std::vector<double> colours;
      for (const CheckpointData& cd : policies) {
        EvalSummary s = evaluate(cd.params, {inst.graph}, cd.mode, mix_seed(cd.seed, i));
        colours.push_back(s.colours[0]);
      }
      std::tie(r.colours, r.stderr_mean) = mean_and_stderr(colours);
      r.runs = static_cast<int>(policies.size());
      if (inst.chi >= 0) r.excess = r.colours - inst.chi;
      rows[slot++] = std::move(r);
    }
  });
  return rows;
}

void write_benchmark_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "instance,n,chi,heuristic,colours,excess,runs,stderr\n";
  for (const auto& r : rows) {
    out << r.instance << ',' << r.n << ',';
    if (r.chi >= 0) out << r.chi;
    out << ',' << r.heuristic << ',' << csv_double(r.colours) << ',' << csv_double(r.excess) << ','
        << r.runs << ',' << csv_double(r.stderr_mean) << '\n';
  }
}

std::vector<SpinradRow> run_spinrad(const std::vector<int>& ms,
                                    const std::vector<std::string>& heuristics,
                                    const std::vector<CheckpointData>& policies,
                                    std::uint64_t seed) {
  std::vector<SpinradRow> rows;
  for (int m : ms) {
    Graph g = gen_spinrad(m);
    // certify chi = 3 independently of any solver: the construction's
    // 3-partition must be a valid complete colouring, and the family
    // contains a triangle for m >= 4
    ColourAssignment witness = spinrad_witness(m);
    if (!is_valid_colouring(g, witness) || count_colours(witness) != 3)
      throw std::logic_error("spinrad witness failed validation");
    for (const std::string& h : heuristics) {
      SpinradRow r;
      r.m = m;
      r.n = g.n();
      r.heuristic = h;
      double c = count_colours(run_baseline(h, g, seed));
      r.colours_min = r.colours_mean = r.colours_max = c;
      rows.push_back(std::move(r));
    }
    if (!policies.empty()) {
      SpinradRow r;
      r.m = m;
      r.n = g.n();
      r.heuristic = "policy";
      double sum = 0.0, mn = 1e300, mx = -1e300;
      for (const CheckpointData& cd : policies) {
        EvalSummary s = evaluate(cd.params, {g}, cd.mode, mix_seed(cd.seed, m));
        double c = s.colours[0];
        sum += c;
        mn = std::min(mn, c);
        mx = std::max(mx, c);
      }
      r.colours_min = mn;
      r.colours_mean = sum / policies.size();
      r.colours_max = mx;
      r.runs = static_cast<int>(policies.size());
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

void write_spinrad_csv(const std::vector<SpinradRow>& rows, std::ostream& out) {
  out << "m,n,chi,heuristic,colours_min,colours_mean,colours_max,runs\n";
  for (const auto& r : rows)
    out << r.m << ',' << r.n << ',' << r.chi << ',' << r.heuristic << ','
        << csv_double(r.colours_min) << ',' << csv_double(r.colours_mean) << ','
        << csv_double(r.colours_max) << ',' << r.runs << '\n';
}

std::vector<ScalingRow> run_scaling(const std::vector<int>& sizes, int per_size,
                                    const std::vector<std::string>& heuristics,
                                    const std::vector<CheckpointData>& policies,
                                    std::uint64_t seed, int jobs) {
  if (per_size < 1) throw std::invalid_argument("per_size must be >= 1");
  if (!std::is_sorted(sizes.begin(), sizes.end()))
    throw std::invalid_argument("sizes must be ascending");

  int rows_per_size = static_cast<int>(heuristics.size()) + (policies.empty() ? 0 : 1);
  std::vector<ScalingRow> rows(sizes.size() * rows_per_size);
  parallel_for(static_cast<int>(sizes.size()), jobs, [&](int si) {
    int size = sizes[si];
    Rng rng(mix_seed(seed, si));
    std::vector<Graph> graphs;
    for (int i = 0; i < per_size; ++i)
      graphs.push_back(sample_family_graph(size, size, rng).graph);

    int slot = si * rows_per_size;
    for (const std::string& h : heuristics) {
      std::vector<double> colours;
      for (std::size_t i = 0; i < graphs.size(); ++i)
        colours.push_back(count_colours(run_baseline(h, graphs[i], mix_seed(seed, si * 1000 + i))));
      ScalingRow r;
      r.size = size;
      r.heuristic = h;
      std::tie(r.mean_colours, r.stderr_mean) = mean_and_stderr(colours);
      r.graphs = per_size;
      rows[slot++] = std::move(r);
    }
    if (!policies.empty()) {
      std::vector<double> colours;
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        double sum = 0.0;
        for (const CheckpointData& cd : policies)
          sum += evaluate(cd.params, {graphs[i]}, cd.mode, mix_seed(cd.seed, si * 1000 + i)).mean;
        colours.push_back(sum / policies.size());
      }
      ScalingRow r;
      r.size = size;
      r.heuristic = "policy";
      std::tie(r.mean_colours, r.stderr_mean) = mean_and_stderr(colours);
      r.graphs = per_size;
      rows[slot++] = std::move(r);
    }
  });
  return rows;
}

void write_scaling_csv(const std::vector<ScalingRow>& rows, std::ostream& out) {
  out << "size,heuristic,mean_colours,stderr,graphs\n";
  for (const auto& r : rows)
    out << r.size << ',' << r.heuristic << ',' << csv_double(r.mean_colours) << ','
        << csv_double(r.stderr_mean) << ',' << r.graphs << '\n';
}

std::uint64_t train_config_hash_without_encoding(const TrainConfig& cfg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto fold = [&h](std::uint64_t x) {
    h ^= x;
    h *= 0x100000001b3ULL;
  };
  auto fold_double = [&](double x) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, sizeof bits);
    fold(bits);
  };
  fold(static_cast<std::uint64_t>(cfg.episodes));
  fold_double(cfg.lr);
  fold(static_cast<std::uint64_t>(cfg.batch_size));
  fold_double(cfg.tau);
  fold_double(cfg.gamma);
  fold_double(cfg.eps_start);
  fold_double(cfg.eps_end);
  fold(cfg.buffer_capacity);
  fold(static_cast<std::uint64_t>(cfg.grad_steps_per_action));
  fold(static_cast<std::uint64_t>(cfg.update_every));
  fold(static_cast<std::uint64_t>(cfg.eval_period));
  fold(cfg.seed);
  return h;
}

AblationResult run_ablation(TrainConfig base, const std::vector<Graph>& train_graphs,
                            const std::vector<Graph>& val_graphs) {
  AblationResult out;
  out.config_hash = train_config_hash_without_encoding(base);
  std::string out_dir = base.out_dir;

  TrainConfig complete_cfg = base;
  complete_cfg.mode = EncodingMode::kComplete;
  if (!out_dir.empty()) complete_cfg.out_dir = out_dir + "/complete";
  out.complete = train(complete_cfg, train_graphs, val_graphs);

  TrainConfig topo_cfg = base;
  topo_cfg.mode = EncodingMode::kTopology;
  if (!out_dir.empty()) topo_cfg.out_dir = out_dir + "/topology";
  out.topology = train(topo_cfg, train_graphs, val_graphs);
  return out;
}

}  // namespace gcol
