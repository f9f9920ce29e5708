#include "gcol/env.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcol {

namespace {

int lowest_permissible(const Graph& g, const ColourAssignment& colours, int v) {
  std::vector<char> used;
  for (int w : g.neighbours(v)) {
    int c = colours[w];
    if (c < 0) continue;
    if (c >= static_cast<int>(used.size())) used.resize(c + 1, 0);
    used[c] = 1;
  }
  int c = 0;
  while (c < static_cast<int>(used.size()) && used[c]) ++c;
  return c;
}

void colour_vertex(EnvState& s, int v, int c) {
  s.colours[v] = c;
  if (c + 1 > s.colours_used) s.colours_used = c + 1;
  auto it = std::lower_bound(s.uncoloured.begin(), s.uncoloured.end(), v);
  s.uncoloured.erase(it);
}

}  // namespace

std::vector<int> apply_isolated_rule(EnvState& s) {
  const Graph& g = *s.graph;
  std::vector<int> done;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < s.uncoloured.size();) {
      int v = s.uncoloured[i];
      bool isolated = true;
      for (int w : g.neighbours(v))
        if (s.colours[w] < 0) {
          isolated = false;
          break;
        }
      if (isolated) {
        colour_vertex(s, v, lowest_permissible(g, s.colours, v));
        done.push_back(v);
        progress = true;
        // index i now points at the next uncoloured vertex
      } else {
        ++i;
      }
    }
  }
  return done;
}

EnvState reset(const Graph& g, Rng& rng) {
  if (g.n() < 1) throw std::invalid_argument("reset: graph must have at least one vertex");
  EnvState s;
  s.graph = &g;
  s.colours.assign(g.n(), -1);
  s.uncoloured.resize(g.n());
  for (int v = 0; v < g.n(); ++v) s.uncoloured[v] = v;
  int first = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n())));
  colour_vertex(s, first, 0);
  apply_isolated_rule(s);
  return s;
}

std::vector<int> legal_actions(const EnvState& s) {
  if (s.terminal()) throw std::logic_error("legal_actions: state is terminal");
  return s.uncoloured;
}

StepResult step(const EnvState& s, int action) {
  if (action < 0 || action >= s.graph->n() || s.colours[action] >= 0)
    throw std::logic_error("step: action is not an uncoloured vertex");
  StepResult r;
  r.state = s;
  int before = s.colours_used;
  colour_vertex(r.state, action, lowest_permissible(*s.graph, r.state.colours, action));
  r.auto_coloured = apply_isolated_rule(r.state);
  r.reward = -static_cast<double>(r.state.colours_used - before);
  r.terminal = r.state.terminal();
  return r;
}

StateEncoding encode_state(const EnvState& s, EncodingMode mode) {
  const Graph& g = *s.graph;
  StateEncoding enc;
  enc.n = g.n();
  enc.mode = mode;
  enc.vertex_features.resize(g.n());
  double name_scale = 1.0 / std::max(g.n() - 1, 1);
  for (int v = 0; v < g.n(); ++v)
    enc.vertex_features[v] = {v * name_scale, (s.colours[v] + 1) / static_cast<double>(g.n())};
  if (mode == EncodingMode::kComplete) {
    enc.pairs.reserve(static_cast<std::size_t>(g.n()) * (g.n() - 1) / 2);
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v) {
        enc.pairs.emplace_back(u, v);
        enc.pair_features.push_back(g.has_edge(u, v) ? -1.0 : 0.0);
      }
  } else {
    enc.pairs = g.edges();
    enc.pair_features.assign(enc.pairs.size(), -1.0);
  }
  return enc;
}

StateEncoding Transition::state_encoding() const {
  EnvState s;
  s.graph = graph;
  s.colours = colours_before;
  s.colours_used = count_colours(colours_before);
  for (int v = 0; v < graph->n(); ++v)
    if (colours_before[v] < 0) s.uncoloured.push_back(v);
  return encode_state(s, mode);
}

StateEncoding Transition::next_encoding() const {
  EnvState s;
  s.graph = graph;
  s.colours = colours_after;
  s.colours_used = count_colours(colours_after);
  for (int v = 0; v < graph->n(); ++v)
    if (colours_after[v] < 0) s.uncoloured.push_back(v);
  return encode_state(s, mode);
}

std::vector<int> Transition::next_legal() const {
  std::vector<int> legal;
  for (int v = 0; v < graph->n(); ++v)
    if (colours_after[v] < 0) legal.push_back(v);
  return legal;
}

RolloutResult rollout(const Graph& g, const Policy& policy, std::uint64_t seed, EncodingMode mode,
                      bool record_transitions) {
  Rng rng(seed);
  EnvState s = reset(g, rng);
  RolloutResult out;
  out.colours_after_reset = s.colours_used;
  while (!s.terminal()) {
    StateEncoding enc = encode_state(s, mode);
    int action = policy(enc, s.uncoloured);
    StepResult sr = step(s, action);
    if (record_transitions) {
      Transition t;
      t.graph = &g;
      t.mode = mode;
      t.colours_before = s.colours;
      t.action = action;
      t.reward = sr.reward;
      t.colours_after = sr.state.colours;
      t.terminal = sr.terminal;
      out.transitions.push_back(std::move(t));
    }
    out.total_reward += sr.reward;
    ++out.decisions;
    s = std::move(sr.state);
  }
  out.colours_used = s.colours_used;
  return out;
}

}  // namespace gcol
