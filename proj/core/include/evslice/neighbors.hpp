#pragma once

#include <cstdint>
#include <vector>

#include "evslice/graph.hpp"
#include "evslice/stabbing.hpp"

namespace evslice {

// Two edges are neighbors when they share at least one vertex (direction is
// ignored). past_thresholds(g, t)[k] is the least window start i for which
// e_k has at most t neighbors among e_i..e_{k-1}; future_thresholds(g, t)[k]
// is the greatest window end j for which e_k has at most t neighbors among
// e_{k+1}..e_j. Edges sharing both endpoints with e_k count once.
std::vector<EdgeIndex> past_thresholds(const RelationalEventGraph& graph, std::int64_t t);
std::vector<EdgeIndex> future_thresholds(const RelationalEventGraph& graph, std::int64_t t);

// Edges with at most r past and at most s future neighbors inside a window
// [i, j] are exactly those whose rectangle [past_r, k] x [k, future_s]
// contains (i, j).
StabbingIndex build_neighbor_index(const RelationalEventGraph& graph, std::int64_t r, std::int64_t s);

}  // namespace evslice
