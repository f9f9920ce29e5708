// gcolor: graph-colouring heuristics laboratory command line.
//
// Exit codes: 0 success, 1 usage/config error, 2 instance parse error,
// 3 exact-solver node budget exceeded.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "gcol/bench.hpp"
#include "gcol/dataset.hpp"
#include "gcol/dimacs.hpp"
#include "gcol/dqn.hpp"
#include "gcol/exact.hpp"
#include "gcol/generators.hpp"
#include "gcol/heuristics.hpp"

namespace fs = std::filesystem;
using namespace gcol;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

std::vector<CheckpointData> load_checkpoints(const std::vector<std::string>& paths) {
  std::vector<CheckpointData> out;
  for (const auto& p : paths) out.push_back(load_checkpoint(p));
  return out;
}

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

// chi for a benchmark instance: published table first, then the exact
// solver for small graphs, else unknown (-1)
int lookup_chi(const std::string& stem, const Graph& g, std::uint64_t budget) {
  if (auto chi = color02_chi(stem)) return *chi;
  if (g.n() <= 30) {
    ExactResult r = exact_chromatic(g, budget);
    if (!r.node_budget_hit) return r.chromatic_number;
  }
  return -1;
}

std::vector<NamedGraph> collect_instances(const std::string& dir, bool color02_generated,
                                          std::uint64_t budget) {
  std::vector<NamedGraph> out;
  if (!dir.empty()) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
      if (e.path().extension() == ".col") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      std::string warn;
      NamedGraph ng;
      ng.name = f.stem().string();
      ng.graph = parse_dimacs_file(f.string(), &warn);
      if (!warn.empty()) std::cerr << f.filename().string() << ": " << warn << "\n";
      ng.chi = lookup_chi(ng.name, ng.graph, budget);
      out.push_back(std::move(ng));
    }
  }
  if (color02_generated) {
    for (const auto& info : color02_table()) {
      bool already = std::any_of(out.begin(), out.end(),
                                 [&](const NamedGraph& g) { return g.name == info.stem; });
      if (already) continue;
      if (auto g = make_color02_instance(info.stem)) {
        out.push_back({info.stem, std::move(*g), info.chi});
      } else {
        std::cerr << "note: " << info.stem
                  << " is data-derived and cannot be regenerated; supply its .col file\n";
      }
    }
  }
  return out;
}

std::vector<std::string> split_heuristics(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  for (const auto& h : out)
    if (h != "random" && h != "lf" && h != "sl" && h != "dsatur")
      throw CLI::ValidationError("unknown heuristic: " + h);
  return out;
}

template <class Rows, class Writer>
void emit_csv(const Rows& rows, const Writer& writer, const std::string& out_path) {
  if (out_path.empty()) {
    writer(rows, std::cout);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  writer(rows, out);
}

void add_train_options(CLI::App* cmd, TrainConfig& cfg) {
  cmd->add_option("--episodes", cfg.episodes, "training episodes");
  cmd->add_option("--lr", cfg.lr, "Adam learning rate");
  cmd->add_option("--batch", cfg.batch_size, "replay batch size");
  cmd->add_option("--tau", cfg.tau, "target network soft-update coefficient");
  cmd->add_option("--gamma", cfg.gamma, "discount factor");
  cmd->add_option("--eps-start", cfg.eps_start, "initial exploration rate");
  cmd->add_option("--eps-end", cfg.eps_end, "final exploration rate");
  cmd->add_option("--buffer", cfg.buffer_capacity, "replay buffer capacity");
  cmd->add_option("--grad-steps", cfg.grad_steps_per_action, "gradient steps per update");
  cmd->add_option("--update-every", cfg.update_every, "decisions between updates");
  cmd->add_option("--eval-period", cfg.eval_period, "episodes between validation passes");
}

int run(int argc, char** argv) {
  CLI::App app{"graph-colouring heuristics laboratory"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags (--seed/--out/--jobs) may follow the subcommand

  std::uint64_t seed = 0;
  std::string out_path;
  int jobs = 1;
  app.add_option("--seed", seed, "master seed")->capture_default_str();
  app.add_option("--out", out_path, "output file or directory");
  app.add_option("--jobs", jobs, "worker threads for instance-parallel sweeps")
      ->capture_default_str();

  // dataset
  auto* cmd_dataset = app.add_subcommand(
      "dataset",
      "generate a training dataset (7 families; Erdos-Renyi p in [0.1,0.9], Watts-Strogatz "
      "k in {2..8} beta in [0.1,0.9], Barabasi-Albert m in [1,6], queen boards fitting the "
      "size range, Gaussian partition mean in [n/5,n/2] p_in [0.3,0.7] p_out [0.05,0.3], "
      "k-partite and clique-planted graphs with k in [3,10])");
  int ds_count = 1000, ds_nmin = 15, ds_nmax = 50;
  cmd_dataset->add_option("--count", ds_count, "number of graphs")->capture_default_str();
  cmd_dataset->add_option("--n-min", ds_nmin, "minimum size")->capture_default_str();
  cmd_dataset->add_option("--n-max", ds_nmax, "maximum size")->capture_default_str();

  // benchmark
  auto* cmd_bench = app.add_subcommand("benchmark", "run heuristics over benchmark instances");
  std::string bench_dir;
  bool bench_color02 = false;
  std::string bench_heur = "random,lf,sl,dsatur";
  std::vector<std::string> bench_ckpts;
  int random_runs = 100;
  std::uint64_t chi_budget = 20'000'000;
  cmd_bench->add_option("--instances", bench_dir, "directory of .col files");
  cmd_bench->add_flag("--color02", bench_color02,
                      "add the regenerable instances of the published comparison table");
  cmd_bench->add_option("--heuristics", bench_heur, "comma list of random,lf,sl,dsatur")
      ->capture_default_str();
  cmd_bench->add_option("--checkpoints", bench_ckpts, "policy checkpoint files");
  cmd_bench->add_option("--random-runs", random_runs, "runs for the random baseline")
      ->capture_default_str();
  cmd_bench->add_option("--chi-budget", chi_budget, "node budget for on-the-fly exact chi")
      ->capture_default_str();

  // spinrad
  auto* cmd_spin = app.add_subcommand("spinrad", "adversarial family report");
  std::vector<int> spin_ms = {4, 5, 6, 7, 8};
  std::string spin_heur = "dsatur";
  std::vector<std::string> spin_ckpts;
  cmd_spin->add_option("--m", spin_ms, "family parameters (each >= 4)")->capture_default_str();
  cmd_spin->add_option("--heuristics", spin_heur, "comma list")->capture_default_str();
  cmd_spin->add_option("--checkpoints", spin_ckpts, "policy checkpoint files");

  // scaling
  auto* cmd_scale = app.add_subcommand("scaling", "mean colours vs graph size");
  std::vector<int> sizes = {25, 50, 100, 200, 500};
  int per_size = 30;
  std::string scale_heur = "random,dsatur";
  std::vector<std::string> scale_ckpts;
  cmd_scale->add_option("--sizes", sizes, "graph sizes, ascending")->capture_default_str();
  cmd_scale->add_option("--per-size", per_size, "graphs per size")->capture_default_str();
  cmd_scale->add_option("--heuristics", scale_heur, "comma list")->capture_default_str();
  cmd_scale->add_option("--checkpoints", scale_ckpts, "policy checkpoint files");

  // ablation
  auto* cmd_abl = app.add_subcommand(
      "ablation", "paired training runs: complete-graph vs topology-preserving encoding");
  TrainConfig abl_cfg;
  abl_cfg.episodes = 2000;
  int abl_count = 200, abl_nmin = 10, abl_nmax = 15, abl_val = 50;
  add_train_options(cmd_abl, abl_cfg);
  cmd_abl->add_option("--count", abl_count, "training graphs")->capture_default_str();
  cmd_abl->add_option("--n-min", abl_nmin, "")->capture_default_str();
  cmd_abl->add_option("--n-max", abl_nmax, "")->capture_default_str();
  cmd_abl->add_option("--val-count", abl_val, "validation graphs")->capture_default_str();

  // exact
  auto* cmd_exact = app.add_subcommand("exact", "exact chromatic number of an instance");
  std::string exact_file;
  std::uint64_t exact_budget = 20'000'000;
  cmd_exact->add_option("instance", exact_file, ".col file")->required();
  cmd_exact->add_option("--budget", exact_budget, "search node budget")->capture_default_str();

  // color
  auto* cmd_color = app.add_subcommand("color", "colour an instance with one heuristic or policy");
  std::string color_file, color_heur = "dsatur", color_ckpt;
  cmd_color->add_option("instance", color_file, ".col file")->required();
  cmd_color->add_option("--heuristic", color_heur, "random|lf|sl|dsatur")->capture_default_str();
  cmd_color->add_option("--checkpoint", color_ckpt, "policy checkpoint (overrides --heuristic)");

  // train
  auto* cmd_train = app.add_subcommand("train", "train a colouring policy");
  TrainConfig tr_cfg;
  int tr_count = 1000, tr_nmin = 15, tr_nmax = 50, tr_val = 100;
  std::string tr_encoding = "complete";
  add_train_options(cmd_train, tr_cfg);
  cmd_train->add_option("--manifest", tr_cfg.dataset_manifest, "training manifest.jsonl");
  cmd_train->add_option("--val-manifest", tr_cfg.val_manifest, "validation manifest.jsonl");
  cmd_train->add_option("--count", tr_count, "generated training graphs (no manifest)")
      ->capture_default_str();
  cmd_train->add_option("--n-min", tr_nmin, "")->capture_default_str();
  cmd_train->add_option("--n-max", tr_nmax, "")->capture_default_str();
  cmd_train->add_option("--val-count", tr_val, "generated validation graphs")
      ->capture_default_str();
  cmd_train->add_option("--encoding", tr_encoding, "complete|topology")->capture_default_str();

  // evaluate
  auto* cmd_eval = app.add_subcommand("evaluate", "greedy-policy colours per instance");
  std::vector<std::string> eval_ckpts;
  std::string eval_dir, eval_manifest;
  cmd_eval->add_option("--checkpoints", eval_ckpts, "checkpoint files")->required();
  cmd_eval->add_option("--instances", eval_dir, "directory of .col files");
  cmd_eval->add_option("--manifest", eval_manifest, "manifest.jsonl of instances");

  CLI11_PARSE(app, argc, argv);

  if (cmd_dataset->parsed()) {
    DatasetOptions opts{ds_count, ds_nmin, ds_nmax, seed, out_path.empty() ? "dataset" : out_path};
    auto entries = build_dataset(opts);
    std::cout << "wrote " << entries.size() << " graphs + manifest.jsonl to " << opts.out_dir
              << "\n";
    return kExitOk;
  }

  if (cmd_bench->parsed()) {
    auto instances = collect_instances(bench_dir, bench_color02, chi_budget);
    if (instances.empty()) throw CLI::ValidationError("no instances (use --instances/--color02)");
    auto rows = run_benchmark(instances, split_heuristics(bench_heur),
                              load_checkpoints(bench_ckpts), random_runs, seed, jobs);
    emit_csv(rows, [](auto& r, auto& o) { write_benchmark_csv(r, o); }, out_path);
    return kExitOk;
  }

  if (cmd_spin->parsed()) {
    auto rows =
        run_spinrad(spin_ms, split_heuristics(spin_heur), load_checkpoints(spin_ckpts), seed);
    emit_csv(rows, [](auto& r, auto& o) { write_spinrad_csv(r, o); }, out_path);
    return kExitOk;
  }

  if (cmd_scale->parsed()) {
    auto rows = run_scaling(sizes, per_size, split_heuristics(scale_heur),
                            load_checkpoints(scale_ckpts), seed, jobs);
    emit_csv(rows, [](auto& r, auto& o) { write_scaling_csv(r, o); }, out_path);
    return kExitOk;
  }

  if (cmd_abl->parsed()) {
    abl_cfg.seed = seed;
    abl_cfg.out_dir = out_path.empty() ? "ablation" : out_path;
    auto train_graphs = sample_dataset(abl_count, abl_nmin, abl_nmax, mix_seed(seed, 11));
    auto val_graphs = sample_dataset(abl_val, abl_nmin, abl_nmax, mix_seed(seed, 12));
    AblationResult res = run_ablation(abl_cfg, train_graphs, val_graphs);
    for (auto [name, tr] : {std::pair{"complete", &res.complete}, {"topology", &res.topology}}) {
      std::ofstream m(fs::path(abl_cfg.out_dir) / name / "metrics.csv");
      write_metrics_csv(tr->metrics, m);
    }
    nlohmann::json summary = {
        {"config_hash", res.config_hash},
        {"complete_final_val", res.complete.final_val_mean},
        {"topology_final_val", res.topology.final_val_mean},
    };
    std::ofstream s(fs::path(abl_cfg.out_dir) / "summary.json");
    s << summary.dump(2) << "\n";
    std::cout << "complete final val mean: " << res.complete.final_val_mean << "\n"
              << "topology final val mean: " << res.topology.final_val_mean << "\n";
    return kExitOk;
  }

  if (cmd_exact->parsed()) {
    Graph g = parse_dimacs_file(exact_file);
    ExactResult r = exact_chromatic(g, exact_budget);
    if (r.node_budget_hit) {
      std::cout << "budget exhausted after " << r.nodes << " nodes; bounds [" << r.lower_bound
                << "," << r.chromatic_number << "]\n";
      return kExitBudget;
    }
    std::cout << "chi = " << r.chromatic_number << " (" << r.nodes << " nodes)\n";
    if (!out_path.empty()) {
      std::ofstream w(out_path);
      w << "c witness colouring for " << stem_of(exact_file) << "\n";
      for (int v = 0; v < g.n(); ++v) w << v << ' ' << r.witness[v] << "\n";
    }
    return kExitOk;
  }

  if (cmd_color->parsed()) {
    Graph g = parse_dimacs_file(color_file);
    ColourAssignment colours;
    if (!color_ckpt.empty()) {
      CheckpointData cd = load_checkpoint(color_ckpt);
      Policy policy = [&](const StateEncoding& enc, const std::vector<int>& legal) {
        Eigen::VectorXd q = forward(cd.params, enc);
        int best = legal.front();
        for (int v : legal)
          if (q[v] > q[best]) best = v;
        return best;
      };
      Rng rng(mix_seed(cd.seed, seed));
      EnvState s = reset(g, rng);
      while (!s.terminal()) {
        int a = policy(encode_state(s, cd.mode), s.uncoloured);
        s = step(s, a).state;
      }
      colours = s.colours;
    } else {
      colours = run_baseline(color_heur, g, seed);
    }
    if (!is_valid_colouring(g, colours) || !is_complete_colouring(colours))
      throw std::logic_error("produced colouring failed validation");
    std::cout << count_colours(colours) << " colours\n";
    if (!out_path.empty()) {
      std::ofstream w(out_path);
      w << "c vertex colour, 0-based\n";
      for (int v = 0; v < g.n(); ++v) w << v << ' ' << colours[v] << "\n";
    }
    return kExitOk;
  }

  if (cmd_train->parsed()) {
    tr_cfg.seed = seed;
    tr_cfg.out_dir = out_path.empty() ? "train_out" : out_path;
    tr_cfg.mode = tr_encoding == "topology" ? EncodingMode::kTopology : EncodingMode::kComplete;
    std::vector<Graph> train_graphs =
        tr_cfg.dataset_manifest.empty()
            ? sample_dataset(tr_count, tr_nmin, tr_nmax, mix_seed(seed, 11))
            : load_manifest_graphs(tr_cfg.dataset_manifest);
    std::vector<Graph> val_graphs =
        tr_cfg.val_manifest.empty() ? sample_dataset(tr_val, tr_nmin, tr_nmax, mix_seed(seed, 12))
                                    : load_manifest_graphs(tr_cfg.val_manifest);
    TrainResult res = train(tr_cfg, train_graphs, val_graphs);
    std::ofstream m(fs::path(tr_cfg.out_dir) / "metrics.csv");
    write_metrics_csv(res.metrics, m);
    std::cout << "final validation mean colours: " << res.final_val_mean << "\n"
              << "checkpoints: " << res.checkpoint_paths.size() << " under " << tr_cfg.out_dir
              << "\n";
    return kExitOk;
  }

  if (cmd_eval->parsed()) {
    auto checkpoints = load_checkpoints(eval_ckpts);
    std::vector<NamedGraph> instances;
    if (!eval_dir.empty()) instances = collect_instances(eval_dir, false, 0);
    if (!eval_manifest.empty()) {
      auto dir = fs::path(eval_manifest).parent_path();
      for (const auto& e : load_manifest(eval_manifest))
        instances.push_back({stem_of(e.path), parse_dimacs_file((dir / e.path).string()), -1});
    }
    if (instances.empty()) throw CLI::ValidationError("no instances given");
    std::vector<Graph> graphs;
    for (auto& i : instances) graphs.push_back(i.graph);
    auto cells = evaluate_multiseed(checkpoints, graphs);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      os = &file;
    }
    *os << "instance,n,mean_colours,stderr,seeds\n";
    for (std::size_t i = 0; i < instances.size(); ++i)
      *os << instances[i].name << ',' << instances[i].graph.n() << ',' << cells[i].mean << ','
          << cells[i].stderr_mean << ',' << cells[i].per_seed.size() << "\n";
    return kExitOk;
  }

  return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const DimacsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
