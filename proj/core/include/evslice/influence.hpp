#pragma once

#include <cstdint>
#include <vector>

#include "evslice/graph.hpp"
#include "evslice/stabbing.hpp"

namespace evslice {

// One arrival of influence at a vertex: edge `edge` delivers to `target`.
// A directed edge yields one arrival at its head; an undirected edge yields
// one at each endpoint (one for a self-loop).
struct Arrival {
  EdgeIndex edge = 0;
  VertexId target = 0;
  // Greatest window start i for which `target` is influenced in G_{i,edge}, or -1.
  EdgeIndex latest_start = -1;
  // Next edge delivering to `target`, or m if none.
  EdgeIndex next_arrival = 0;
};

// Influence reaches a vertex along paths of strictly increasing edge indices
// starting at an influential vertex. With max_hops > 0 only paths of at most
// that many edges count. Arrivals are listed in edge order.
std::vector<Arrival> compute_arrivals(const RelationalEventGraph& graph, std::int64_t max_hops = 0);

// Vertex v (not influential) is influenced in G_{i,j} iff its last arrival k
// inside the window has latest_start >= i, so every arrival becomes the
// rectangle [0, latest_start] x [k, next_arrival - 1] and each influenced
// vertex is counted once.
StabbingIndex build_influence_index(const RelationalEventGraph& graph, std::int64_t max_hops = 0);

}  // namespace evslice
