#pragma once

#include "evslice/graph.hpp"
#include "evslice/tau.hpp"

namespace evslice {

// Forest matroid on the edges. The forest of the most recent edges is kept
// in a link-cut tree; an edge closing a cycle evicts the oldest edge of that
// cycle, and its independence time is one past the evicted index. Self-loops
// are never independent.
TauTable compute_tau_graphic(const RelationalEventGraph& graph);

// Pseudoforest (bicircular) matroid: at most one cycle per component. Keeps a
// spanning forest plus, per component, the one non-forest edge closing its
// cycle. A second cycle evicts the oldest edge of the union of both cycles
// and the forest path between them.
TauTable compute_tau_bicycle(const RelationalEventGraph& graph);

}  // namespace evslice
