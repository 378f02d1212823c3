#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "evslice/graph.hpp"
#include "evslice/stat_keys.hpp"

namespace evslice {

// Every statistic of one slice, computed directly on the materialized slice
// multigraph. Shares no code with the indexes; it is the reference the
// engine is tested against.
struct SliceStats {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t components = 0;
  std::int64_t isolated_vertices = 0;
  std::int64_t loopy_components = 0;  // components holding a cycle
  std::int64_t tree_components = 0;   // includes isolated vertices
  std::int64_t spanning_forest_edges = 0;
  std::vector<std::int64_t> degree_histogram;  // [d] = vertices of degree d (loops count twice)
  // [c] = endpoint pairs occurring exactly c times (ordered pairs when the
  // graph is directed).
  std::vector<std::int64_t> pair_histogram;
  std::int64_t distinct_directed = 0;
  std::int64_t distinct_undirected = 0;
  // (past, future) neighbor counts inside the slice -> number of edges.
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> neighbor_profiles;
  // [h] = non-influential vertices whose shortest path of influence has h edges.
  std::vector<std::int64_t> influence_hops;
  std::int64_t influential_touched = 0;
  std::int64_t triad_closures = 0;
};

SliceStats oracle_slice_stats(const RelationalEventGraph& graph, Slice slice);

// Value of a statistic derived from the raw tallies. Throws
// std::invalid_argument for statistics the graph kind does not support
// (reciprocity on undirected graphs).
StatValue oracle_value(const SliceStats& stats, const StatKey& key, bool directed);

}  // namespace evslice
