#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gcol/env.hpp"
#include "gcol/net.hpp"

namespace gcol {

// FIFO ring of transitions; stored graphs must outlive the buffer.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  void push(Transition t);
  std::size_t size() const { return full_ ? capacity_ : slots_.size(); }
  std::size_t capacity() const { return capacity_; }

  // i = 0 is the oldest retained transition
  const Transition& at(std::size_t i) const;

  // uniform without replacement; batch is clamped to size()
  std::vector<const Transition*> sample(std::size_t batch, Rng& rng) const;

 private:
  std::size_t capacity_;
  std::size_t head_ = 0;  // next slot to overwrite once full
  bool full_ = false;
  std::vector<Transition> slots_;
};

struct TrainConfig {
  int episodes = 25000;
  double lr = 0.001;
  int batch_size = 64;
  double tau = 0.001;
  double gamma = 1.0;
  double eps_start = 0.9;
  double eps_end = 0.01;
  std::size_t buffer_capacity = 50000;
  int grad_steps_per_action = 1;  // gradient steps per update burst
  int update_every = 1;           // decisions between update bursts
  int eval_period = 100;          // episodes between validation passes; 0 disables
  std::uint64_t seed = 0;
  EncodingMode mode = EncodingMode::kComplete;
  std::string out_dir;            // checkpoints + metrics land here when set
  std::string dataset_manifest;   // resolved by the CLI front end
  std::string val_manifest;

  void validate() const;  // throws std::invalid_argument on bad fields
};

// eps_start * (eps_end/eps_start)^(min(e,E)/E); endpoints returned exactly.
double epsilon(long episode, const TrainConfig& cfg);

// With probability eps a uniform legal vertex, otherwise the legal vertex
// with the highest Q value (ties to the lowest index). `legal` must be
// sorted ascending and nonempty.
int select_action(const QNetParams& params, const StateEncoding& enc, const std::vector<int>& legal,
                  double eps, Rng& rng);

struct EpisodeMetric {
  int episode = 0;
  int colours = 0;
  double loss = std::numeric_limits<double>::quiet_NaN();      // mean over the episode's updates
  double eps = 0.0;
  double val_mean = std::numeric_limits<double>::quiet_NaN();  // set on evaluation episodes
  double elapsed_s = 0.0;
};

struct TrainResult {
  QNetParams params;
  std::vector<EpisodeMetric> metrics;
  std::vector<std::string> checkpoint_paths;
  double final_val_mean = std::numeric_limits<double>::quiet_NaN();
};

// One episode per iteration: sample a training graph uniformly, play an
// eps-greedy episode pushing transitions, update after every
// `update_every`-th decision once the buffer holds a batch, soft-update the
// target after every gradient step. Deterministic given cfg and datasets.
// On a non-finite loss the last episode-start parameters are checkpointed
// (when out_dir is set) and std::runtime_error is thrown.
TrainResult train(const TrainConfig& cfg, const std::vector<Graph>& train_graphs,
                  const std::vector<Graph>& val_graphs);

struct EvalSummary {
  std::vector<int> colours;  // per graph
  double mean = 0.0;
  double stderr_mean = 0.0;  // Bessel-corrected standard error over graphs
};

// Greedy policy (eps = 0); the first-vertex draw for graph i is seeded with
// mix_seed(seed_base, i) so results are repeatable per (params, graph).
EvalSummary evaluate(const QNetParams& params, const std::vector<Graph>& graphs, EncodingMode mode,
                     std::uint64_t seed_base);

struct MultiSeedCell {
  double mean = 0.0;
  double stderr_mean = 0.0;  // across checkpoints, Bessel-corrected
  std::vector<int> per_seed;
};

// Per graph: colour counts across checkpoints; each checkpoint is evaluated
// under its own stored encoding mode and seed.
std::vector<MultiSeedCell> evaluate_multiseed(const std::vector<CheckpointData>& checkpoints,
                                              const std::vector<Graph>& graphs);

// CSV with header episode,colours,loss,epsilon,val_mean_colours,elapsed_s;
// unavailable fields are left empty.
void write_metrics_csv(const std::vector<EpisodeMetric>& metrics, std::ostream& out);

}  // namespace gcol
