#include "gcol/dqn.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace gcol {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw std::invalid_argument("replay buffer capacity must be positive");
  slots_.reserve(std::min<std::size_t>(capacity, 1 << 16));
}

void ReplayBuffer::push(Transition t) {
  if (!full_) {
    slots_.push_back(std::move(t));
    if (slots_.size() == capacity_) full_ = true;
    return;
  }
  slots_[head_] = std::move(t);
  head_ = (head_ + 1) % capacity_;
}

const Transition& ReplayBuffer::at(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("replay buffer index");
  return full_ ? slots_[(head_ + i) % capacity_] : slots_[i];
}

std::vector<const Transition*> ReplayBuffer::sample(std::size_t batch, Rng& rng) const {
  std::size_t n = size();
  batch = std::min(batch, n);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<const Transition*> out;
  out.reserve(batch);
  for (std::size_t j = 0; j < batch; ++j) {
    std::size_t k = j + rng.below(n - j);
    std::swap(idx[j], idx[k]);
    out.push_back(&at(idx[j]));
  }
  return out;
}

void TrainConfig::validate() const {
  if (episodes < 0) throw std::invalid_argument("episodes must be >= 0");
  if (lr <= 0) throw std::invalid_argument("lr must be positive");
  if (batch_size <= 0) throw std::invalid_argument("batch_size must be positive");
  if (tau < 0 || tau > 1) throw std::invalid_argument("tau must be in [0,1]");
  if (gamma <= 0 || gamma > 1) throw std::invalid_argument("gamma must be in (0,1]");
  if (eps_start < 0 || eps_start > 1 || eps_end < 0 || eps_end > eps_start)
    throw std::invalid_argument("need 0 <= eps_end <= eps_start <= 1");
  if (buffer_capacity == 0) throw std::invalid_argument("buffer_capacity must be positive");
  if (grad_steps_per_action < 1) throw std::invalid_argument("grad_steps_per_action must be >= 1");
  if (update_every < 1) throw std::invalid_argument("update_every must be >= 1");
}

double epsilon(long episode, const TrainConfig& cfg) {
  if (episode <= 0) return cfg.eps_start;
  if (episode >= cfg.episodes) return cfg.eps_end;
  double frac = static_cast<double>(episode) / cfg.episodes;
  return cfg.eps_start * std::pow(cfg.eps_end / cfg.eps_start, frac);
}

int select_action(const QNetParams& params, const StateEncoding& enc, const std::vector<int>& legal,
                  double eps, Rng& rng) {
  if (legal.empty()) throw std::logic_error("select_action: no legal actions");
  if (rng.next_unit() < eps) return legal[rng.below(legal.size())];
  Eigen::VectorXd q = forward(params, enc);
  int best = legal.front();
  for (int v : legal)
    if (q[v] > q[best]) best = v;
  return best;
}

namespace {

int greedy_rollout_colours(const QNetParams& params, const Graph& g, EncodingMode mode,
                           std::uint64_t seed) {
  Policy policy = [&](const StateEncoding& enc, const std::vector<int>& legal) {
    Eigen::VectorXd q = forward(params, enc);
    int best = legal.front();
    for (int v : legal)
      if (q[v] > q[best]) best = v;
    return best;
  };
  return rollout(g, policy, seed, mode).colours_used;
}

std::pair<double, double> mean_and_stderr(const std::vector<int>& xs) {
  if (xs.empty()) return {0.0, 0.0};
  double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (int x : xs) ss += (x - mean) * (x - mean);
  double sd = std::sqrt(ss / (xs.size() - 1));
  return {mean, sd / std::sqrt(static_cast<double>(xs.size()))};
}

}  // namespace

EvalSummary evaluate(const QNetParams& params, const std::vector<Graph>& graphs, EncodingMode mode,
                     std::uint64_t seed_base) {
  EvalSummary out;
  out.colours.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i)
    out.colours.push_back(greedy_rollout_colours(params, graphs[i], mode, mix_seed(seed_base, i)));
  std::tie(out.mean, out.stderr_mean) = mean_and_stderr(out.colours);
  return out;
}

std::vector<MultiSeedCell> evaluate_multiseed(const std::vector<CheckpointData>& checkpoints,
                                              const std::vector<Graph>& graphs) {
  if (checkpoints.empty()) throw std::invalid_argument("evaluate_multiseed: no checkpoints");
  std::vector<MultiSeedCell> cells(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (const CheckpointData& cd : checkpoints)
      cells[i].per_seed.push_back(
          greedy_rollout_colours(cd.params, graphs[i], cd.mode, mix_seed(cd.seed, i)));
    std::tie(cells[i].mean, cells[i].stderr_mean) = mean_and_stderr(cells[i].per_seed);
  }
  return cells;
}

TrainResult train(const TrainConfig& cfg, const std::vector<Graph>& train_graphs,
                  const std::vector<Graph>& val_graphs) {
  cfg.validate();
  if (cfg.episodes > 0 && train_graphs.empty())
    throw std::invalid_argument("train: no training graphs");

  TrainResult out;
  out.params = init_qnet(mix_seed(cfg.seed, 0));
  QNetParams target = out.params;
  AdamState opt = AdamState::init(out.params);
  ReplayBuffer buffer(cfg.buffer_capacity);
  Rng graph_rng(mix_seed(cfg.seed, 1));
  Rng replay_rng(mix_seed(cfg.seed, 2));

  const bool save = !cfg.out_dir.empty();
  if (save) std::filesystem::create_directories(cfg.out_dir);
  auto checkpoint_path = [&](long episode) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "ckpt_%06ld.bin", episode);
    return (std::filesystem::path(cfg.out_dir) / buf).string();
  };

  auto t0 = std::chrono::steady_clock::now();
  QNetParams last_good = out.params;
  int pending_decisions = 0;

  for (int e = 0; e < cfg.episodes; ++e) {
    last_good = out.params;
    double eps = epsilon(e, cfg);
    const Graph& g = train_graphs[graph_rng.below(train_graphs.size())];
    Rng ep_rng(mix_seed(cfg.seed, 0x10000 + static_cast<std::uint64_t>(e)));

    EnvState s = reset(g, ep_rng);  // consumes exactly one draw
    double loss_sum = 0.0;
    long loss_count = 0;
    try {
      while (!s.terminal()) {
        StateEncoding enc = encode_state(s, cfg.mode);
        int action = select_action(out.params, enc, s.uncoloured, eps, ep_rng);
        StepResult sr = step(s, action);
        Transition t;
        t.graph = &g;
        t.mode = cfg.mode;
        t.colours_before = std::move(s.colours);
        t.action = action;
        t.reward = sr.reward;
        t.colours_after = sr.state.colours;
        t.terminal = sr.terminal;
        buffer.push(std::move(t));
        s = std::move(sr.state);

        if (buffer.size() >= static_cast<std::size_t>(cfg.batch_size) &&
            ++pending_decisions >= cfg.update_every) {
          pending_decisions = 0;
          for (int k = 0; k < cfg.grad_steps_per_action; ++k) {
            auto batch = buffer.sample(cfg.batch_size, replay_rng);
            LossResult lr = loss_and_grads(out.params, target, batch, cfg.gamma);
            adam_step(opt, out.params, lr.grads, cfg.lr);
            soft_update(target, out.params, cfg.tau);
            loss_sum += lr.loss;
            ++loss_count;
          }
        }
      }
    } catch (const std::runtime_error&) {
      if (save) {
        CheckpointData cd{last_good, cfg.mode, cfg.seed, e, out.final_val_mean};
        save_checkpoint(cd, (std::filesystem::path(cfg.out_dir) / "ckpt_abort.bin").string());
      }
      throw;
    }

    EpisodeMetric m;
    m.episode = e;
    m.colours = s.colours_used;
    if (loss_count > 0) m.loss = loss_sum / loss_count;
    m.eps = eps;
    bool eval_now = cfg.eval_period > 0 &&
                    ((e + 1) % cfg.eval_period == 0 || e + 1 == cfg.episodes) &&
                    !val_graphs.empty();
    if (eval_now) {
      m.val_mean = evaluate(out.params, val_graphs, cfg.mode, cfg.seed).mean;
      out.final_val_mean = m.val_mean;
      if (save) {
        CheckpointData cd{out.params, cfg.mode, cfg.seed, e + 1, m.val_mean};
        std::string path = checkpoint_path(e + 1);
        save_checkpoint(cd, path);
        out.checkpoint_paths.push_back(path);
      }
    }
    m.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.metrics.push_back(m);
  }

  if (cfg.episodes == 0 && !val_graphs.empty() && cfg.eval_period > 0)
    out.final_val_mean = evaluate(out.params, val_graphs, cfg.mode, cfg.seed).mean;
  if (save) {
    CheckpointData cd{out.params, cfg.mode, cfg.seed, cfg.episodes, out.final_val_mean};
    std::string path = (std::filesystem::path(cfg.out_dir) / "ckpt_final.bin").string();
    save_checkpoint(cd, path);
    out.checkpoint_paths.push_back(path);
  }
  return out;
}

namespace {

std::string csv_double(double x) {
  if (!std::isfinite(x)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

void write_metrics_csv(const std::vector<EpisodeMetric>& metrics, std::ostream& out) {
  out << "episode,colours,loss,epsilon,val_mean_colours,elapsed_s\n";
  for (const auto& m : metrics)
    out << m.episode << ',' << m.colours << ',' << csv_double(m.loss) << ',' << csv_double(m.eps)
        << ',' << csv_double(m.val_mean) << ',' << csv_double(m.elapsed_s) << '\n';
}

}  // namespace gcol
