#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcol/graph.hpp"
#include "gcol/rng.hpp"

namespace gcol {

// One line of manifest.jsonl.
struct ManifestEntry {
  std::string path;    // relative to the manifest's directory
  std::string family;
  std::string params;  // family parameters as a JSON object (string form)
  std::uint64_t seed = 0;
  int n = 0;
  int chi_upper = -1;  // -1 when the construction gives no bound
};

// The seven training families and their default parameter ranges (the
// ranges are documented in the CLI help).
struct SampledGraph {
  Graph graph;
  std::string family;
  std::string params;
  int chi_upper = -1;
};

// Draws family uniformly from the seven supported types, size uniformly
// from [n_min, n_max], family parameters from the documented ranges.
SampledGraph sample_family_graph(int n_min, int n_max, Rng& rng);

struct DatasetOptions {
  int count = 1000;
  int n_min = 15;
  int n_max = 50;
  std::uint64_t seed = 0;
  std::string out_dir;  // graphs + manifest.jsonl are written here
};

// Writes g_<index>.col files plus manifest.jsonl; byte-identical for
// identical options.
std::vector<ManifestEntry> build_dataset(const DatasetOptions& opts);

// In-memory sampling with the same draw sequence as build_dataset.
std::vector<Graph> sample_dataset(int count, int n_min, int n_max, std::uint64_t seed);

std::vector<ManifestEntry> load_manifest(const std::string& manifest_path);
std::vector<Graph> load_manifest_graphs(const std::string& manifest_path);

}  // namespace gcol
