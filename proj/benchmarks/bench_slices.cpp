#include <benchmark/benchmark.h>

#include <random>

#include "evslice/engine.hpp"
#include "evslice/generators.hpp"

using namespace evslice;

namespace {

RelationalEventGraph synthetic(std::size_t events) {
  std::mt19937_64 rng(5);
  RandomGraphOptions opts;
  opts.vertices = std::max<std::size_t>(events / 10, 2);
  opts.edges = events;
  opts.loop_probability = 0.001;
  return random_graph(rng, opts);
}

const SliceEngine& shared_engine() {
  static const SliceEngine engine = [] {
    EngineConfig cfg;
    cfg.degrees = {1, 2};
    cfg.multiplicities = {1};
    cfg.neighbor_pairs = {{0, 0}};
    return SliceEngine::build(synthetic(200000), cfg);
  }();
  return engine;
}

void BM_Build(benchmark::State& state) {
  const auto graph = synthetic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto engine = SliceEngine::build(graph, EngineConfig{});
    benchmark::DoNotOptimize(engine);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Build)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

// Query latency should grow with log(width), not width.
void BM_Query(benchmark::State& state, const char* key) {
  const auto& engine = shared_engine();
  const auto parsed = parse_stat_key(key);
  const auto width = static_cast<EdgeIndex>(state.range(0));
  const auto m = static_cast<EdgeIndex>(engine.edge_count());
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<EdgeIndex> pick(0, m - width);
  std::size_t visited = 0;
  for (auto _ : state) {
    const EdgeIndex i = pick(rng);
    std::size_t v = 0;
    benchmark::DoNotOptimize(engine.query({i, i + width - 1}, parsed, &v));
    visited += v;
  }
  state.counters["visited/query"] =
      static_cast<double>(visited) / static_cast<double>(std::max<benchmark::IterationCount>(state.iterations(), 1));
}
BENCHMARK_CAPTURE(BM_Query, components, "components")->RangeMultiplier(10)->Range(10, 100000);
BENCHMARK_CAPTURE(BM_Query, degree, "degree_gt:d=1")->RangeMultiplier(10)->Range(10, 100000);
BENCHMARK_CAPTURE(BM_Query, isolated_edges, "isolated_edges")->RangeMultiplier(10)->Range(10, 100000);

}  // namespace

BENCHMARK_MAIN();
