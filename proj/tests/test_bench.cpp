#include <doctest.h>

#include <stdexcept>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "gcol/bench.hpp"
#include "gcol/dataset.hpp"
#include "gcol/dimacs.hpp"
#include "gcol/exact.hpp"
#include "gcol/generators.hpp"
#include "gcol/heuristics.hpp"

using namespace gcol;
namespace fs = std::filesystem;

TEST_SUITE("bench_cli") {

TEST_CASE("published instance table") {
  CHECK(color02_table().size() == 20);
  CHECK(color02_chi("queen5_5") == 5);
  CHECK(color02_chi("myciel5") == 6);
  CHECK(color02_chi("homer") == 13);
  CHECK(!color02_chi("unknown_graph").has_value());

  auto q = make_color02_instance("queen5_5");
  REQUIRE(q.has_value());
  CHECK(q->n() == 25);
  auto m = make_color02_instance("myciel6");
  REQUIRE(m.has_value());
  CHECK(m->n() == 95);
  CHECK(!make_color02_instance("huck").has_value());  // data-derived
}

TEST_CASE("benchmark rows and excess bookkeeping") {
  std::vector<NamedGraph> instances;
  instances.push_back({"queen5_5", gen_queen(5, 5), 5});
  auto bg = gen_known_chromatic(14, 4, 0.8, 3);
  instances.push_back({"kpart14", bg.graph, exact_chromatic(bg.graph).chromatic_number});

  auto rows = run_benchmark(instances, {"random", "dsatur"}, {}, 25, 1, 2);
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    CHECK(r.excess >= 0.0);  // never below the chromatic number
    if (r.heuristic == "random") {
      CHECK(r.runs == 25);
      CHECK(r.stderr_mean >= 0.0);
    }
    if (r.heuristic == "dsatur" && r.instance == "queen5_5") CHECK(r.excess == 0.0);
  }
  std::ostringstream csv;
  write_benchmark_csv(rows, csv);
  CHECK(csv.str().rfind("instance,n,chi,heuristic,colours,excess,runs,stderr\n", 0) == 0);

  // identical call, identical bytes
  auto rows2 = run_benchmark(instances, {"random", "dsatur"}, {}, 25, 1, 1);
  std::ostringstream csv2;
  write_benchmark_csv(rows2, csv2);
  CHECK(csv.str() == csv2.str());
}

TEST_CASE("spinrad report certifies chi independently") {
  auto rows = run_spinrad({4, 6}, {"dsatur"}, {}, 0);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].chi == 3);
  CHECK(rows[0].colours_mean == 4.0);  // dsatur needs m colours
  CHECK(rows[1].chi == 3);
  CHECK(rows[1].colours_mean == 6.0);
}

TEST_CASE("scaling sweep shape and expected ordering") {
  auto rows = run_scaling({12, 16}, 20, {"random", "dsatur"}, {}, 3, 2);
  REQUIRE(rows.size() == 4);
  double rand12 = 0, dsat12 = 0;
  for (const auto& r : rows) {
    CHECK(r.graphs == 20);
    if (r.size == 12 && r.heuristic == "random") rand12 = r.mean_colours;
    if (r.size == 12 && r.heuristic == "dsatur") dsat12 = r.mean_colours;
  }
  CHECK(rand12 >= dsat12);  // random never beats dsatur on average
  auto single = run_scaling({10, 20, 30}, 1, {"dsatur"}, {}, 1, 1);
  CHECK(single.size() == 3);
}

TEST_CASE("dataset builder writes reproducible graphs and manifest") {
  fs::path dir = fs::temp_directory_path() / "gcol_dataset_test";
  fs::remove_all(dir);
  DatasetOptions opts{25, 10, 20, 9, dir.string()};
  auto entries = build_dataset(opts);
  REQUIRE(entries.size() == 25);
  auto loaded = load_manifest((dir / "manifest.jsonl").string());
  REQUIRE(loaded.size() == 25);
  std::set<std::string> families;
  for (const auto& e : loaded) {
    CHECK(e.n >= 10);
    CHECK(e.n <= 20);
    families.insert(e.family);
    Graph g = parse_dimacs_file((dir / e.path).string());
    CHECK(g.n() == e.n);
    if (e.chi_upper >= 0) CHECK(count_colours(dsatur(g)) <= g.max_degree() + 1);
  }
  CHECK(families.size() >= 3);  // 25 draws over 7 families
  for (const auto& f : families)
    CHECK((f == "erdos_renyi" || f == "watts_strogatz" || f == "barabasi_albert" ||
           f == "queen" || f == "gaussian_partition" || f == "known_chromatic" ||
           f == "leighton_like"));

  // regeneration is byte-identical
  std::ifstream m1(dir / "manifest.jsonl");
  std::string first((std::istreambuf_iterator<char>(m1)), std::istreambuf_iterator<char>());
  fs::path dir2 = fs::temp_directory_path() / "gcol_dataset_test2";
  fs::remove_all(dir2);
  DatasetOptions opts2{25, 10, 20, 9, dir2.string()};
  build_dataset(opts2);
  std::ifstream m2(dir2 / "manifest.jsonl");
  std::string second((std::istreambuf_iterator<char>(m2)), std::istreambuf_iterator<char>());
  CHECK(first == second);
  for (const auto& e : loaded) {
    std::ifstream a(dir / e.path), b(dir2 / e.path);
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);
  }
  fs::remove_all(dir);
  fs::remove_all(dir2);
}

TEST_CASE("in-memory sampling matches the build_dataset draw sequence") {
  fs::path dir = fs::temp_directory_path() / "gcol_dataset_test3";
  fs::remove_all(dir);
  DatasetOptions opts{10, 8, 14, 31, dir.string()};
  auto entries = build_dataset(opts);
  auto graphs = sample_dataset(10, 8, 14, 31);
  REQUIRE(graphs.size() == entries.size());
  for (std::size_t i = 0; i < graphs.size(); ++i)
    CHECK(graphs[i] == parse_dimacs_file((dir / entries[i].path).string()));
  fs::remove_all(dir);
}

TEST_CASE("config hash ignores the encoding but not the seed") {
  TrainConfig a;
  a.seed = 5;
  TrainConfig b = a;
  b.mode = EncodingMode::kTopology;
  CHECK(train_config_hash_without_encoding(a) == train_config_hash_without_encoding(b));
  b.seed = 6;
  CHECK(train_config_hash_without_encoding(a) != train_config_hash_without_encoding(b));
}

TEST_CASE("ablation trains both encodings under one configuration") {
  auto graphs = sample_dataset(8, 6, 8, 55);
  auto val = sample_dataset(3, 6, 8, 56);
  TrainConfig cfg;
  cfg.episodes = 6;
  cfg.batch_size = 8;
  cfg.update_every = 8;
  cfg.eval_period = 6;
  cfg.seed = 3;
  AblationResult res = run_ablation(cfg, graphs, val);
  CHECK(res.complete.metrics.size() == 6);
  CHECK(res.topology.metrics.size() == 6);
  CHECK(std::isfinite(res.complete.final_val_mean));
  CHECK(std::isfinite(res.topology.final_val_mean));
  CHECK(res.config_hash == train_config_hash_without_encoding(cfg));
}

}  // TEST_SUITE
