#include "gcol/net.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <json.hpp>
#include <stdexcept>

#include "gcol/rng.hpp"

namespace gcol {

namespace {

using Json = nlohmann::json;
using IMat = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr double kStdFloor = 1e-12;  // below this the std gradient is taken as 0

Mat linear_forward(const Linear& l, const Mat& x) {
  Mat y = x * l.w.transpose();
  y.rowwise() += l.b.row(0);
  return y;
}

// accumulates parameter grads; returns gradient w.r.t. x
Mat linear_backward(const Linear& l, Linear& grad, const Mat& x, const Mat& dy) {
  grad.w.noalias() += dy.transpose() * x;
  grad.b += dy.colwise().sum();
  return dy * l.w;
}

Mat relu(const Mat& z) { return z.cwiseMax(0.0); }

Mat relu_backward(const Mat& z, const Mat& dout) {
  return ((z.array() > 0.0).cast<double>() * dout.array()).matrix();
}

}  // namespace

std::vector<Mat*> tensor_list(QNetParams& p) {
  std::vector<Mat*> out;
  for (auto& blk : p.blocks) {
    for (Mlp* mlp : {&blk.edge, &blk.vertex}) {
      out.push_back(&mlp->l1.w);
      out.push_back(&mlp->l1.b);
      out.push_back(&mlp->l2.w);
      out.push_back(&mlp->l2.b);
    }
  }
  for (auto& l : p.head) {
    out.push_back(&l.w);
    out.push_back(&l.b);
  }
  return out;
}

std::vector<const Mat*> tensor_list(const QNetParams& p) {
  auto mut = tensor_list(const_cast<QNetParams&>(p));
  return {mut.begin(), mut.end()};
}

std::vector<std::string> tensor_names() {
  std::vector<std::string> out;
  for (int t = 0; t < kNumBlocks; ++t)
    for (const char* mlp : {"edge", "vertex"})
      for (const char* ten : {"l1.w", "l1.b", "l2.w", "l2.b"})
        out.push_back("block" + std::to_string(t) + "." + mlp + "." + ten);
  for (int i = 0; i < 3; ++i) {
    out.push_back("head" + std::to_string(i) + ".w");
    out.push_back("head" + std::to_string(i) + ".b");
  }
  return out;
}

namespace {

QNetParams make_shapes() {
  QNetParams p;
  p.blocks.resize(kNumBlocks);
  for (int t = 0; t < kNumBlocks; ++t) {
    auto shape_mlp = [](Mlp& m, int in, int out) {
      m.l1.w.setZero(kHiddenDim, in);
      m.l1.b.setZero(1, kHiddenDim);
      m.l2.w.setZero(out, kHiddenDim);
      m.l2.b.setZero(1, out);
    };
    shape_mlp(p.blocks[t].edge, block_edge_in(t), kEmbDim);
    shape_mlp(p.blocks[t].vertex, block_vertex_in(t), kEmbDim);
  }
  p.head.resize(3);
  int head_dims[4] = {kEmbDim, kHiddenDim, kHiddenDim, 1};
  for (int i = 0; i < 3; ++i) {
    p.head[i].w.setZero(head_dims[i + 1], head_dims[i]);
    p.head[i].b.setZero(1, head_dims[i + 1]);
  }
  return p;
}

}  // namespace

QNetParams init_qnet(std::uint64_t seed) {
  QNetParams p = make_shapes();
  Rng rng(seed);
  // weights uniform in +-1/sqrt(fan_in), biases zero
  auto init_linear = [&rng](Linear& l) {
    double bound = 1.0 / std::sqrt(static_cast<double>(l.w.cols()));
    for (Eigen::Index i = 0; i < l.w.rows(); ++i)
      for (Eigen::Index j = 0; j < l.w.cols(); ++j) l.w(i, j) = rng.uniform_real(-bound, bound);
  };
  for (auto& blk : p.blocks) {
    init_linear(blk.edge.l1);
    init_linear(blk.edge.l2);
    init_linear(blk.vertex.l1);
    init_linear(blk.vertex.l2);
  }
  for (auto& l : p.head) init_linear(l);
  return p;
}

QNetParams zeros_like(const QNetParams& p) {
  QNetParams z = p;
  for (Mat* t : tensor_list(z)) t->setZero();
  return z;
}

bool all_finite(const QNetParams& p) {
  for (const Mat* t : tensor_list(p))
    if (!t->allFinite()) return false;
  return true;
}

BatchGraphs BatchGraphs::build(const std::vector<const StateEncoding*>& encs) {
  BatchGraphs bg;
  int samples = static_cast<int>(encs.size());
  bg.vtx_off.assign(samples + 1, 0);
  bg.pair_off.assign(samples + 1, 0);
  for (int i = 0; i < samples; ++i) {
    bg.vtx_off[i + 1] = bg.vtx_off[i] + encs[i]->n;
    bg.pair_off[i + 1] = bg.pair_off[i] + static_cast<int>(encs[i]->pairs.size());
  }
  bg.total_vertices = bg.vtx_off[samples];
  bg.total_pairs = bg.pair_off[samples];
  bg.vfeat.resize(bg.total_vertices, kVertexFeatDim);
  bg.efeat.resize(bg.total_pairs, kEdgeFeatDim);
  bg.pair_u.resize(bg.total_pairs);
  bg.pair_v.resize(bg.total_pairs);

  std::vector<int> inc_count(bg.total_vertices, 0);
  for (int i = 0; i < samples; ++i) {
    const StateEncoding& e = *encs[i];
    for (int v = 0; v < e.n; ++v) {
      bg.vfeat(bg.vtx_off[i] + v, 0) = e.vertex_features[v][0];
      bg.vfeat(bg.vtx_off[i] + v, 1) = e.vertex_features[v][1];
    }
    for (std::size_t k = 0; k < e.pairs.size(); ++k) {
      int row = bg.pair_off[i] + static_cast<int>(k);
      int u = bg.vtx_off[i] + e.pairs[k].first;
      int v = bg.vtx_off[i] + e.pairs[k].second;
      bg.pair_u[row] = u;
      bg.pair_v[row] = v;
      bg.efeat(row, 0) = e.pair_features[k];
      ++inc_count[u];
      ++inc_count[v];
    }
  }
  bg.inc_ptr.assign(bg.total_vertices + 1, 0);
  for (int v = 0; v < bg.total_vertices; ++v) bg.inc_ptr[v + 1] = bg.inc_ptr[v] + inc_count[v];
  bg.inc_idx.resize(bg.inc_ptr.back());
  std::vector<int> cursor(bg.inc_ptr.begin(), bg.inc_ptr.end() - 1);
  for (int row = 0; row < bg.total_pairs; ++row) {
    bg.inc_idx[cursor[bg.pair_u[row]]++] = row;
    bg.inc_idx[cursor[bg.pair_v[row]]++] = row;
  }
  return bg;
}

struct BlockCache {
  Mat e_in, e_z, e_h, e_out;
  Mat agg;  // cols: [0,64) mean, [64,128) max, [128,192) min, [192,256) std
  IMat argmax, argmin;
  Mat v_in, v_z, v_h, v_out;
};

struct ForwardCache {
  std::vector<BlockCache> blocks;
  Mat h1z, h1, h2z, h2;
};

namespace {

void aggregate(const BatchGraphs& bg, const Mat& e_out, Mat& agg, IMat& argmax, IMat& argmin) {
  int n = bg.total_vertices;
  agg.setZero(n, kAggDim);
  argmax.setConstant(n, kEmbDim, -1);
  argmin.setConstant(n, kEmbDim, -1);
  for (int v = 0; v < n; ++v) {
    int lo = bg.inc_ptr[v], hi = bg.inc_ptr[v + 1];
    int count = hi - lo;
    if (count == 0) continue;  // empty aggregation is the zero vector
    for (int f = 0; f < kEmbDim; ++f) {
      int first = bg.inc_idx[lo];
      double sum = e_out(first, f), mx = sum, mn = sum;
      int amx = first, amn = first;
      for (int k = lo + 1; k < hi; ++k) {
        int row = bg.inc_idx[k];
        double x = e_out(row, f);
        sum += x;
        if (x > mx) {
          mx = x;
          amx = row;
        }
        if (x < mn) {
          mn = x;
          amn = row;
        }
      }
      double mean = sum / count;
      double var = 0.0;
      for (int k = lo; k < hi; ++k) {
        double d = e_out(bg.inc_idx[k], f) - mean;
        var += d * d;
      }
      agg(v, f) = mean;
      agg(v, kEmbDim + f) = mx;
      agg(v, 2 * kEmbDim + f) = mn;
      agg(v, 3 * kEmbDim + f) = std::sqrt(var / count);
      argmax(v, f) = amx;
      argmin(v, f) = amn;
    }
  }
}

void aggregate_backward(const BatchGraphs& bg, const Mat& e_out, const Mat& agg, const IMat& argmax,
                        const IMat& argmin, const Mat& d_agg, Mat& d_eout) {
  int n = bg.total_vertices;
  for (int v = 0; v < n; ++v) {
    int lo = bg.inc_ptr[v], hi = bg.inc_ptr[v + 1];
    int count = hi - lo;
    if (count == 0) continue;
    for (int f = 0; f < kEmbDim; ++f) {
      double dmean = d_agg(v, f) / count;
      double dstd = d_agg(v, 3 * kEmbDim + f);
      double sigma = agg(v, 3 * kEmbDim + f);
      double mean = agg(v, f);
      bool std_active = sigma > kStdFloor && dstd != 0.0;
      double std_scale = std_active ? dstd / (count * sigma) : 0.0;
      for (int k = lo; k < hi; ++k) {
        int row = bg.inc_idx[k];
        double g = dmean;
        if (std_active) g += std_scale * (e_out(row, f) - mean);
        d_eout(row, f) += g;
      }
      d_eout(argmax(v, f), f) += d_agg(v, kEmbDim + f);
      d_eout(argmin(v, f), f) += d_agg(v, 2 * kEmbDim + f);
    }
  }
}

Mat concat_edge_input(const BatchGraphs& bg, const Mat& eemb, const Mat& vemb) {
  int de = static_cast<int>(eemb.cols()), dv = static_cast<int>(vemb.cols());
  Mat e_in(bg.total_pairs, de + 2 * dv);
  for (int row = 0; row < bg.total_pairs; ++row) {
    e_in.block(row, 0, 1, de) = eemb.row(row);
    e_in.block(row, de, 1, dv) = vemb.row(bg.pair_u[row]);
    e_in.block(row, de + dv, 1, dv) = vemb.row(bg.pair_v[row]);
  }
  return e_in;
}

}  // namespace

namespace {

void hash_mask(const Mat& z, std::uint64_t* h) {
  if (!h) return;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    *h ^= (z.data()[i] > 0.0) ? 0x9e3779b97f4a7c15ULL : 0x517cc1b727220a95ULL;
    *h *= 0x100000001b3ULL;
  }
}

void hash_args(const IMat& a, const IMat& b, std::uint64_t* h) {
  if (!h) return;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    *h ^= static_cast<std::uint64_t>(a.data()[i] + 1);
    *h *= 0x100000001b3ULL;
    *h ^= static_cast<std::uint64_t>(b.data()[i] + 1);
    *h *= 0x100000001b3ULL;
  }
}

}  // namespace

Eigen::VectorXd forward_batch(const QNetParams& p, const BatchGraphs& bg, ForwardCache* cache,
                              std::uint64_t* mask_hash) {
  Mat vemb = bg.vfeat;
  Mat eemb = bg.efeat;
  if (cache) cache->blocks.resize(kNumBlocks);

  for (int t = 0; t < kNumBlocks; ++t) {
    const GnnBlock& blk = p.blocks[t];
    Mat e_in = concat_edge_input(bg, eemb, vemb);
    Mat e_z = linear_forward(blk.edge.l1, e_in);
    hash_mask(e_z, mask_hash);
    Mat e_h = relu(e_z);
    Mat e_out = linear_forward(blk.edge.l2, e_h);

    Mat agg;
    IMat argmax, argmin;
    aggregate(bg, e_out, agg, argmax, argmin);
    hash_args(argmax, argmin, mask_hash);

    Mat v_in(bg.total_vertices, vemb.cols() + kAggDim);
    v_in << vemb, agg;
    Mat v_z = linear_forward(blk.vertex.l1, v_in);
    hash_mask(v_z, mask_hash);
    Mat v_h = relu(v_z);
    Mat v_out = linear_forward(blk.vertex.l2, v_h);

    if (cache) {
      BlockCache& c = cache->blocks[t];
      c.e_in = std::move(e_in);
      c.e_z = std::move(e_z);
      c.e_h = std::move(e_h);
      c.e_out = e_out;
      c.agg = std::move(agg);
      c.argmax = std::move(argmax);
      c.argmin = std::move(argmin);
      c.v_in = std::move(v_in);
      c.v_z = std::move(v_z);
      c.v_h = std::move(v_h);
      c.v_out = v_out;
    }
    eemb = std::move(e_out);
    vemb = std::move(v_out);
  }

  Mat h1z = linear_forward(p.head[0], vemb);
  hash_mask(h1z, mask_hash);
  Mat h1 = relu(h1z);
  Mat h2z = linear_forward(p.head[1], h1);
  hash_mask(h2z, mask_hash);
  Mat h2 = relu(h2z);
  Mat q = linear_forward(p.head[2], h2);
  if (cache) {
    cache->h1z = std::move(h1z);
    cache->h1 = std::move(h1);
    cache->h2z = std::move(h2z);
    cache->h2 = std::move(h2);
  }
  return q.col(0);
}

Eigen::VectorXd forward(const QNetParams& p, const StateEncoding& enc) {
  BatchGraphs bg = BatchGraphs::build({&enc});
  return forward_batch(p, bg, nullptr);
}

namespace {

void backward_batch(const QNetParams& p, const BatchGraphs& bg, const ForwardCache& cache,
                    const Eigen::VectorXd& d_q, GradientBundle& grads) {
  const Mat& v_last = cache.blocks[kNumBlocks - 1].v_out;
  Mat dq = d_q;  // column
  Mat dh2 = linear_backward(p.head[2], grads.head[2], cache.h2, dq);
  Mat dh2z = relu_backward(cache.h2z, dh2);
  Mat dh1 = linear_backward(p.head[1], grads.head[1], cache.h1, dh2z);
  Mat dh1z = relu_backward(cache.h1z, dh1);
  Mat d_vemb = linear_backward(p.head[0], grads.head[0], v_last, dh1z);

  Mat d_eemb = Mat::Zero(bg.total_pairs, kEmbDim);

  for (int t = kNumBlocks - 1; t >= 0; --t) {
    const GnnBlock& blk = p.blocks[t];
    const BlockCache& c = cache.blocks[t];
    GnnBlock& gblk = grads.blocks[t];

    // vertex update
    Mat d_vh = linear_backward(blk.vertex.l2, gblk.vertex.l2, c.v_h, d_vemb);
    Mat d_vz = relu_backward(c.v_z, d_vh);
    Mat d_vin = linear_backward(blk.vertex.l1, gblk.vertex.l1, c.v_in, d_vz);
    int dv_prev = static_cast<int>(c.v_in.cols()) - kAggDim;
    Mat d_vemb_prev = d_vin.leftCols(dv_prev);
    Mat d_agg = d_vin.rightCols(kAggDim);

    // aggregation consumed this block's edge output
    Mat d_eout = std::move(d_eemb);
    aggregate_backward(bg, c.e_out, c.agg, c.argmax, c.argmin, d_agg, d_eout);

    // edge update
    Mat d_eh = linear_backward(blk.edge.l2, gblk.edge.l2, c.e_h, d_eout);
    Mat d_ez = relu_backward(c.e_z, d_eh);
    Mat d_ein = linear_backward(blk.edge.l1, gblk.edge.l1, c.e_in, d_ez);
    int de_prev = static_cast<int>(c.e_in.cols() - 2 * dv_prev);
    d_eemb = d_ein.leftCols(de_prev);
    for (int row = 0; row < bg.total_pairs; ++row) {
      d_vemb_prev.row(bg.pair_u[row]) += d_ein.block(row, de_prev, 1, dv_prev);
      d_vemb_prev.row(bg.pair_v[row]) += d_ein.block(row, de_prev + dv_prev, 1, dv_prev);
    }
    d_vemb = std::move(d_vemb_prev);
  }
}

struct TdTargets {
  Eigen::VectorXd q_sa;     // online Q of the taken actions
  Eigen::VectorXd targets;  // r + gamma * max_a' Q_target(s',a'), bootstrap dropped at terminal
};

TdTargets compute_targets(const QNetParams& params, const QNetParams& target,
                          const std::vector<const Transition*>& batch, double gamma,
                          const BatchGraphs& state_bg, ForwardCache* cache,
                          std::uint64_t* mask_hash = nullptr) {
  int b = static_cast<int>(batch.size());
  TdTargets out;
  Eigen::VectorXd q_all = forward_batch(params, state_bg, cache, mask_hash);
  out.q_sa.resize(b);
  for (int i = 0; i < b; ++i) out.q_sa[i] = q_all[state_bg.vtx_off[i] + batch[i]->action];

  std::vector<StateEncoding> next_encs;
  std::vector<int> next_slot(b, -1);
  std::vector<const StateEncoding*> next_ptrs;
  for (int i = 0; i < b; ++i) {
    if (batch[i]->terminal) continue;
    next_slot[i] = static_cast<int>(next_encs.size());
    next_encs.push_back(batch[i]->next_encoding());
  }
  for (const auto& e : next_encs) next_ptrs.push_back(&e);

  Eigen::VectorXd q_next;
  BatchGraphs next_bg;
  if (!next_ptrs.empty()) {
    next_bg = BatchGraphs::build(next_ptrs);
    q_next = forward_batch(target, next_bg, nullptr);
  }
  out.targets.resize(b);
  for (int i = 0; i < b; ++i) {
    double y = batch[i]->reward;
    if (!batch[i]->terminal) {
      int slot = next_slot[i];
      std::vector<int> legal = batch[i]->next_legal();
      double best = -std::numeric_limits<double>::infinity();
      for (int v : legal) best = std::max(best, q_next[next_bg.vtx_off[slot] + v]);
      y += gamma * best;
    }
    out.targets[i] = y;
  }
  return out;
}

}  // namespace

LossResult loss_and_grads(const QNetParams& params, const QNetParams& target,
                          const std::vector<const Transition*>& batch, double gamma) {
  if (batch.empty()) throw std::invalid_argument("loss_and_grads: empty batch");
  int b = static_cast<int>(batch.size());
  std::vector<StateEncoding> encs;
  encs.reserve(b);
  for (const Transition* t : batch) encs.push_back(t->state_encoding());
  std::vector<const StateEncoding*> ptrs;
  for (const auto& e : encs) ptrs.push_back(&e);
  BatchGraphs bg = BatchGraphs::build(ptrs);

  ForwardCache cache;
  TdTargets td = compute_targets(params, target, batch, gamma, bg, &cache);

  Eigen::VectorXd err = td.targets - td.q_sa;
  double loss = err.squaredNorm() / b;

  Eigen::VectorXd d_q = Eigen::VectorXd::Zero(bg.total_vertices);
  for (int i = 0; i < b; ++i)
    d_q[bg.vtx_off[i] + batch[i]->action] += -2.0 * err[i] / b;

  LossResult res;
  res.loss = loss;
  res.grads = zeros_like(params);
  backward_batch(params, bg, cache, d_q, res.grads);
  if (!std::isfinite(loss) || !all_finite(res.grads))
    throw std::runtime_error("loss_and_grads: non-finite value encountered");
  return res;
}

double td_loss(const QNetParams& params, const QNetParams& target,
               const std::vector<const Transition*>& batch, double gamma,
               std::uint64_t* mask_hash) {
  if (batch.empty()) throw std::invalid_argument("td_loss: empty batch");
  int b = static_cast<int>(batch.size());
  std::vector<StateEncoding> encs;
  encs.reserve(b);
  for (const Transition* t : batch) encs.push_back(t->state_encoding());
  std::vector<const StateEncoding*> ptrs;
  for (const auto& e : encs) ptrs.push_back(&e);
  BatchGraphs bg = BatchGraphs::build(ptrs);
  if (mask_hash) *mask_hash = 0xcbf29ce484222325ULL;
  TdTargets td = compute_targets(params, target, batch, gamma, bg, nullptr, mask_hash);
  return (td.targets - td.q_sa).squaredNorm() / b;
}

AdamState AdamState::init(const QNetParams& p) {
  AdamState s;
  s.m = zeros_like(p);
  s.v = zeros_like(p);
  return s;
}

void adam_step(AdamState& state, QNetParams& params, const GradientBundle& grads, double lr) {
  if (!all_finite(grads)) throw std::runtime_error("adam_step: non-finite gradients");
  ++state.step;
  double bc1 = 1.0 - std::pow(state.beta1, state.step);
  double bc2 = 1.0 - std::pow(state.beta2, state.step);
  auto ps = tensor_list(params);
  auto gs = tensor_list(const_cast<GradientBundle&>(grads));
  auto ms = tensor_list(state.m);
  auto vs = tensor_list(state.v);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto& m = *ms[i];
    auto& v = *vs[i];
    const auto& g = *gs[i];
    m = state.beta1 * m + (1.0 - state.beta1) * g;
    v.array() = state.beta2 * v.array() + (1.0 - state.beta2) * g.array().square();
    ps[i]->array() -= lr * (m.array() / bc1) / ((v.array() / bc2).sqrt() + state.eps);
  }
}

void soft_update(QNetParams& target, const QNetParams& online, double tau) {
  if (tau < 0.0 || tau > 1.0) throw std::invalid_argument("soft_update: tau must be in [0,1]");
  auto ts = tensor_list(target);
  auto os = tensor_list(online);
  for (std::size_t i = 0; i < ts.size(); ++i) *ts[i] = tau * *os[i] + (1.0 - tau) * *ts[i];
}

void save_checkpoint(const CheckpointData& cd, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  Json header = {
      {"format", 1},
      {"blocks", kNumBlocks},
      {"emb_dim", kEmbDim},
      {"vertex_feat", kVertexFeatDim},
      {"edge_feat", kEdgeFeatDim},
      {"hidden", kHiddenDim},
      {"encoding", cd.mode == EncodingMode::kComplete ? "complete" : "topology"},
      {"seed", cd.seed},
      {"episodes", cd.episodes},
  };
  if (std::isfinite(cd.val_mean)) header["val_mean"] = cd.val_mean;
  Json dims = Json::array();
  for (const Mat* t : tensor_list(cd.params))
    dims.push_back({t->rows(), t->cols()});
  header["tensors"] = dims;
  std::string hs = header.dump();
  out.write("GCQNET01", 8);
  std::uint64_t len = hs.size();
  out.write(reinterpret_cast<const char*>(&len), 8);
  out.write(hs.data(), static_cast<std::streamsize>(hs.size()));
  for (const Mat* t : tensor_list(cd.params))
    out.write(reinterpret_cast<const char*>(t->data()),
              static_cast<std::streamsize>(sizeof(double) * t->size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

CheckpointData load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, "GCQNET01", 8) != 0)
    throw std::runtime_error(path + ": not a checkpoint file");
  std::uint64_t len = 0;
  in.read(reinterpret_cast<char*>(&len), 8);
  std::string hs(len, '\0');
  in.read(hs.data(), static_cast<std::streamsize>(len));
  Json header = Json::parse(hs);
  auto expect = [&](const char* key, long long want) {
    long long got = header.at(key).get<long long>();
    if (got != want)
      throw std::runtime_error(path + ": " + key + " mismatch (file " + std::to_string(got) +
                               ", build " + std::to_string(want) + ")");
  };
  expect("format", 1);
  expect("blocks", kNumBlocks);
  expect("emb_dim", kEmbDim);
  expect("vertex_feat", kVertexFeatDim);
  expect("edge_feat", kEdgeFeatDim);
  expect("hidden", kHiddenDim);

  CheckpointData cd;
  cd.params = make_shapes();
  cd.mode = header.at("encoding").get<std::string>() == "topology" ? EncodingMode::kTopology
                                                                   : EncodingMode::kComplete;
  cd.seed = header.at("seed").get<std::uint64_t>();
  cd.episodes = header.at("episodes").get<long>();
  if (header.contains("val_mean")) cd.val_mean = header.at("val_mean").get<double>();

  auto dims = header.at("tensors");
  auto ts = tensor_list(cd.params);
  if (dims.size() != ts.size()) throw std::runtime_error(path + ": tensor count mismatch");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    long rows = dims[i][0].get<long>(), cols = dims[i][1].get<long>();
    if (rows != ts[i]->rows() || cols != ts[i]->cols())
      throw std::runtime_error(path + ": dimension mismatch in " + tensor_names()[i]);
    in.read(reinterpret_cast<char*>(ts[i]->data()),
            static_cast<std::streamsize>(sizeof(double) * ts[i]->size()));
  }
  if (!in) throw std::runtime_error(path + ": truncated checkpoint");
  return cd;
}

}  // namespace gcol
