#include "evslice/fuzz.hpp"

#include <random>

#include "evslice/generators.hpp"
#include "evslice/oracle.hpp"

namespace evslice {

EngineConfig exhaustive_config() {
  EngineConfig c;
  c.degrees = {0, 1, 2};
  c.multiplicities = {1, 2};
  for (std::int64_t r = 0; r <= 2; ++r) {
    for (std::int64_t s = 0; s <= 2; ++s) c.neighbor_pairs.emplace_back(r, s);
  }
  c.hop_bounds = {1, 2, 3};
  c.influence = true;
  c.triads = true;
  return c;
}

void FuzzReport::merge(const FuzzReport& other) {
  graphs += other.graphs;
  slices += other.slices;
  comparisons += other.comparisons;
  mismatches += other.mismatches;
  for (const auto& e : other.examples) {
    if (examples.size() < 10) examples.push_back(e);
  }
}

FuzzReport compare_with_oracle(const RelationalEventGraph& graph, const SliceEngine& engine) {
  FuzzReport report;
  report.graphs = 1;
  std::vector<StatKey> keys;
  for (const auto& name : engine.available_keys()) keys.push_back(parse_stat_key(name));
  const auto m = static_cast<EdgeIndex>(graph.edge_count());
  for (EdgeIndex i = 0; i < m; ++i) {
    for (EdgeIndex j = i; j < m; ++j) {
      const Slice s{i, j};
      const SliceStats stats = oracle_slice_stats(graph, s);
      ++report.slices;
      for (const auto& key : keys) {
        const StatValue expected = oracle_value(stats, key, graph.directed());
        const StatValue actual = engine.query(s, key);
        ++report.comparisons;
        if (expected != actual) {
          ++report.mismatches;
          if (report.examples.size() < 10) {
            report.examples.push_back("n=" + std::to_string(graph.vertex_count()) + " m=" + std::to_string(m) +
                                      (graph.directed() ? " directed" : " undirected") + " slice [" +
                                      std::to_string(i) + "," + std::to_string(j) + "] " + to_string(key) +
                                      ": engine " + format_value(actual) + ", oracle " + format_value(expected));
          }
        }
      }
    }
  }
  return report;
}

FuzzReport run_fuzz(const FuzzOptions& options) {
  std::mt19937_64 rng(options.seed);
  FuzzReport total;
  const EngineConfig config = exhaustive_config();
  for (std::size_t g = 0; g < options.graphs; ++g) {
    RandomGraphOptions go;
    go.vertices = std::uniform_int_distribution<std::size_t>(1, options.max_vertices)(rng);
    go.edges = std::uniform_int_distribution<std::size_t>(1, options.max_edges)(rng);
    go.directed = g % 2 == 1;
    go.loop_probability = std::uniform_real_distribution<double>(0.0, 0.15)(rng);
    go.repeat_probability = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
    go.influential = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    const auto graph = random_graph(rng, go);
    const auto engine = SliceEngine::build(graph, config);
    total.merge(compare_with_oracle(graph, engine));
  }
  return total;
}

}  // namespace evslice
