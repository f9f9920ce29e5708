#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gcol/dqn.hpp"
#include "gcol/graph.hpp"
#include "gcol/net.hpp"

namespace gcol {

// ---- COLOR02 instance support ----------------------------------------

struct Color02Info {
  std::string stem;
  int n;
  int chi;  // published chromatic number
};

// The twenty instances of the comparison table, with published n and chi.
const std::vector<Color02Info>& color02_table();
std::optional<int> color02_chi(const std::string& stem);

// Regenerates an instance from its construction where one exists (queen
// boards and mycielski graphs); empty for the data-derived instances, which
// must be supplied as .col files.
std::optional<Graph> make_color02_instance(const std::string& stem);

// ---- benchmark -------------------------------------------------------

struct NamedGraph {
  std::string name;
  Graph graph;
  int chi = -1;  // -1 unknown
};

struct BenchRow {
  std::string instance;
  int n = 0;
  int chi = -1;
  std::string heuristic;
  double colours = 0.0;
  double excess = std::numeric_limits<double>::quiet_NaN();
  int runs = 1;
  double stderr_mean = 0.0;
};

// One row per (instance, heuristic). "random" aggregates over random_runs
// orders; checkpoint policies aggregate across all given checkpoints under
// the name "policy". Deterministic given seed; instances may be processed
// in parallel with `jobs` threads.
std::vector<BenchRow> run_benchmark(const std::vector<NamedGraph>& instances,
                                    const std::vector<std::string>& heuristics,
                                    const std::vector<CheckpointData>& policies, int random_runs,
                                    std::uint64_t seed, int jobs);

void write_benchmark_csv(const std::vector<BenchRow>& rows, std::ostream& out);

// ---- adversarial family ----------------------------------------------

struct SpinradRow {
  int m = 0;
  int n = 0;
  int chi = 3;  // certified by the 3-partition witness
  std::string heuristic;
  double colours_min = 0.0, colours_mean = 0.0, colours_max = 0.0;
  int runs = 1;
};

std::vector<SpinradRow> run_spinrad(const std::vector<int>& ms,
                                    const std::vector<std::string>& heuristics,
                                    const std::vector<CheckpointData>& policies,
                                    std::uint64_t seed);

void write_spinrad_csv(const std::vector<SpinradRow>& rows, std::ostream& out);

// ---- scaling sweep ----------------------------------------------------

struct ScalingRow {
  int size = 0;
  std::string heuristic;
  double mean_colours = 0.0;
  double stderr_mean = 0.0;
  int graphs = 0;
};

// per size: `per_size` graphs drawn by the training-dataset process; the
// same graphs are used for every heuristic.
std::vector<ScalingRow> run_scaling(const std::vector<int>& sizes, int per_size,
                                    const std::vector<std::string>& heuristics,
                                    const std::vector<CheckpointData>& policies,
                                    std::uint64_t seed, int jobs);

void write_scaling_csv(const std::vector<ScalingRow>& rows, std::ostream& out);

// ---- encoding ablation -------------------------------------------------

struct AblationResult {
  TrainResult complete;
  TrainResult topology;
  std::uint64_t config_hash = 0;  // hash of everything except the encoding
};

// Trains the same configuration twice, differing only in the state
// encoding; identical seeds, datasets and schedules.
AblationResult run_ablation(TrainConfig base, const std::vector<Graph>& train_graphs,
                            const std::vector<Graph>& val_graphs);

std::uint64_t train_config_hash_without_encoding(const TrainConfig& cfg);

}  // namespace gcol
