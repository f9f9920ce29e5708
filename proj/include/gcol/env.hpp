#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "gcol/graph.hpp"
#include "gcol/rng.hpp"

namespace gcol {

// How the partial colouring is presented to the Q-network.
//   kComplete: one feature per vertex pair of the complete graph; the
//     feature is -1 when the pair is an edge of the original graph, else 0.
//   kTopology: only pairs that are edges of the original graph are present
//     (feature constantly -1); messages cannot cross non-edges.
enum class EncodingMode { kComplete, kTopology };

struct StateEncoding {
  int n = 0;
  EncodingMode mode = EncodingMode::kComplete;
  // per vertex: (name / max(n-1,1), (colour + 1) / n); uncoloured maps to 0
  std::vector<std::array<double, 2>> vertex_features;
  std::vector<std::pair<int, int>> pairs;  // canonical u < v, sorted
  std::vector<double> pair_features;
};

// Partial colouring of one graph. Value object; an episode mutates its own
// copy, distinct episodes never share state.
struct EnvState {
  const Graph* graph = nullptr;
  ColourAssignment colours;
  int colours_used = 0;
  std::vector<int> uncoloured;  // sorted ascending

  bool terminal() const { return uncoloured.empty(); }
};

// Colours one uniformly random vertex with colour 0 (consumes exactly one
// draw from rng), then applies the isolated-vertex sweep.
EnvState reset(const Graph& g, Rng& rng);

// The uncoloured vertices. Throws std::logic_error on a terminal state.
std::vector<int> legal_actions(const EnvState& s);

struct StepResult {
  EnvState state;
  double reward;  // -(colours(next) - colours(prev)), sweep included
  bool terminal;
  std::vector<int> auto_coloured;
};

// Assigns `action` the lowest permissible colour, sweeps isolated vertices,
// charges any colour increase (sweep included) to this step's reward.
// Throws std::logic_error if `action` is already coloured.
StepResult step(const EnvState& s, int action);

// Repeatedly colours every uncoloured vertex with no uncoloured neighbour
// (lowest permissible), until none remain; returns them in processing order.
std::vector<int> apply_isolated_rule(EnvState& s);

StateEncoding encode_state(const EnvState& s, EncodingMode mode);

// Replay record. Encodings are materialised on demand from the stored
// colour arrays, so buffered transitions stay small; the graph must outlive
// the record.
struct Transition {
  const Graph* graph = nullptr;
  EncodingMode mode = EncodingMode::kComplete;
  ColourAssignment colours_before;
  int action = -1;
  double reward = 0.0;
  ColourAssignment colours_after;
  bool terminal = false;

  StateEncoding state_encoding() const;
  StateEncoding next_encoding() const;
  std::vector<int> next_legal() const;  // uncoloured vertices after the step
};

using Policy = std::function<int(const StateEncoding&, const std::vector<int>& legal)>;

struct RolloutResult {
  int colours_used = 0;
  int colours_after_reset = 0;
  int decisions = 0;
  double total_reward = 0.0;
  std::vector<Transition> transitions;  // one per policy decision
};

// Plays reset/step with the policy until terminal. The seed feeds the reset
// draw only; everything after is deterministic given the policy.
RolloutResult rollout(const Graph& g, const Policy& policy, std::uint64_t seed, EncodingMode mode,
                      bool record_transitions = false);

}  // namespace gcol
