#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evslice/engine.hpp"
#include "evslice/graph.hpp"

namespace evslice {

// Registers every parameterized statistic at small parameter values:
// degrees 0..2, multiplicities 1..2, neighbor thresholds r, s <= 2, hop
// bounds 1..3, influence and triads.
EngineConfig exhaustive_config();

struct FuzzReport {
  std::size_t graphs = 0;
  std::size_t slices = 0;
  std::size_t comparisons = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> examples;  // first few mismatches, human readable

  void merge(const FuzzReport& other);
};

// Compares every available statistic on every slice against the oracle.
FuzzReport compare_with_oracle(const RelationalEventGraph& graph, const SliceEngine& engine);

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t graphs = 50;
  std::size_t max_vertices = 25;
  std::size_t max_edges = 200;
};

// Random directed and undirected multigraphs with parallel edges,
// self-loops and random influential sets.
FuzzReport run_fuzz(const FuzzOptions& options);

}  // namespace evslice
