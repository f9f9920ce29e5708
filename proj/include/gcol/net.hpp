#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "gcol/env.hpp"

namespace gcol {

// Row-major so that per-item (vertex/pair) rows are contiguous.
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr int kEmbDim = 64;
constexpr int kNumBlocks = 5;
constexpr int kVertexFeatDim = 2;  // (name, colour), scaled
constexpr int kEdgeFeatDim = 1;   // -1 / 0 flag
constexpr int kAggDim = 4 * kEmbDim;  // mean | max | min | std
constexpr int kHiddenDim = 64;

inline int block_edge_in(int t) {
  return (t == 0 ? kEdgeFeatDim : kEmbDim) + 2 * (t == 0 ? kVertexFeatDim : kEmbDim);
}
inline int block_vertex_in(int t) {
  return (t == 0 ? kVertexFeatDim : kEmbDim) + kAggDim;
}

struct Linear {
  Mat w;  // out x in
  Mat b;  // 1 x out
};

struct Mlp {  // hidden linear -> relu -> output linear
  Linear l1, l2;
};

struct GnnBlock {
  Mlp edge;    // [pair_emb | vemb_u | vemb_v] -> new pair embedding
  Mlp vertex;  // [vemb | mean|max|min|std of incident pair embeddings] -> new vemb
};

// All weights of the Q-network: kNumBlocks GNN blocks followed by a
// three-layer per-vertex head (64 -> 64 -> 64 -> 1, relu between).
struct QNetParams {
  std::vector<GnnBlock> blocks;  // kNumBlocks
  std::vector<Linear> head;      // 3 layers
};

// Every tensor, in the fixed order used by initialisation, the optimiser
// and the checkpoint format.
std::vector<Mat*> tensor_list(QNetParams& p);
std::vector<const Mat*> tensor_list(const QNetParams& p);
std::vector<std::string> tensor_names();

QNetParams init_qnet(std::uint64_t seed);
QNetParams zeros_like(const QNetParams& p);
bool all_finite(const QNetParams& p);

// Gradients share the parameter layout.
using GradientBundle = QNetParams;

// Batched state graphs: rows of several encodings stacked, with CSR
// vertex -> incident-pair indexing for the aggregation step.
struct BatchGraphs {
  int total_vertices = 0;
  int total_pairs = 0;
  std::vector<int> vtx_off;   // size samples+1
  std::vector<int> pair_off;  // size samples+1
  std::vector<int> pair_u, pair_v;    // global vertex rows
  std::vector<int> inc_ptr, inc_idx;  // CSR: vertex row -> pair rows
  Mat vfeat;  // total_vertices x kVertexFeatDim
  Mat efeat;  // total_pairs x kEdgeFeatDim

  static BatchGraphs build(const std::vector<const StateEncoding*>& encs);
};

struct ForwardCache;  // opaque; defined in net.cpp

// Q value per vertex row. When `cache` is given the intermediates needed
// for backward() are retained. When `mask_hash` is given it receives a hash
// of every rectifier's sign pattern; finite-difference checks use it to
// reject probes that step across an activation kink.
Eigen::VectorXd forward_batch(const QNetParams& p, const BatchGraphs& bg, ForwardCache* cache,
                              std::uint64_t* mask_hash = nullptr);
Eigen::VectorXd forward(const QNetParams& p, const StateEncoding& enc);

struct LossResult {
  double loss = 0.0;
  GradientBundle grads;
};

// Mean squared TD error over the batch per the one-step Q-learning target;
// the bootstrap max ranges over the uncoloured vertices of the next state
// and is dropped for terminal transitions. Gradients are exact derivatives
// w.r.t. `params` with `target` held constant. Throws std::invalid_argument
// on an empty batch and std::runtime_error if anything non-finite appears.
LossResult loss_and_grads(const QNetParams& params, const QNetParams& target,
                          const std::vector<const Transition*>& batch, double gamma);
// Same TD loss without gradient work (used by the finite-difference oracle).
double td_loss(const QNetParams& params, const QNetParams& target,
               const std::vector<const Transition*>& batch, double gamma,
               std::uint64_t* mask_hash = nullptr);

struct AdamState {
  GradientBundle m, v;
  long step = 0;
  double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;

  static AdamState init(const QNetParams& p);
};

// Standard Adam with bias correction. Throws std::runtime_error on
// non-finite gradients (training halts rather than corrupting weights).
void adam_step(AdamState& state, QNetParams& params, const GradientBundle& grads, double lr);

// target <- tau * online + (1 - tau) * target, elementwise.
void soft_update(QNetParams& target, const QNetParams& online, double tau);

// Self-describing checkpoint: JSON header (format version, architecture
// dimensions, encoding mode, seed, episode count, validation score) then
// raw little-endian doubles per tensor, row-major, in tensor_list order.
struct CheckpointData {
  QNetParams params;
  EncodingMode mode = EncodingMode::kComplete;
  std::uint64_t seed = 0;
  long episodes = 0;
  double val_mean = std::numeric_limits<double>::quiet_NaN();
};

void save_checkpoint(const CheckpointData& cd, const std::string& path);
CheckpointData load_checkpoint(const std::string& path);

}  // namespace gcol
