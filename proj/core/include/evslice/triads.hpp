#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "evslice/graph.hpp"

namespace evslice {

// Split of the aggregate simple graph (all edges, direction and self-loops
// dropped) by its h-index: `heavy` holds the vertices of degree > h, so there
// are at most h of them; every other vertex has degree <= h.
struct DegreeSplit {
  std::int64_t h = 0;
  std::vector<VertexId> heavy;
  std::vector<char> is_heavy;  // per vertex
};

DegreeSplit compute_degree_split(const RelationalEventGraph& graph);

struct TriadThresholds {
  // closure_start[k]: smallest d such that e_k closes no triangle with two
  // earlier edges of G_{d,k}; 0 when it closes none at all.
  std::vector<EdgeIndex> closure_start;
  DegreeSplit split;
  // Table entries read or written while building; bounded by O(h) per edge.
  std::size_t work = 0;
};

// For e_k = (u, v) the best wedge u-w-v maximizes the older of its two
// edges. Wedges through light vertices are maintained incrementally per pair;
// wedges through the at most h heavy vertices are probed directly.
TriadThresholds compute_triad_thresholds(const RelationalEventGraph& graph);

}  // namespace evslice
