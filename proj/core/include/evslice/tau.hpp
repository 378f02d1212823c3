#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "evslice/graph.hpp"

namespace evslice {

// Elements are either the edges themselves or their half-edges: element 2k is
// the u-end of edge k and element 2k+1 its v-end.
enum class ElementSpace : std::uint8_t { kEdge = 0, kHalfEdge = 1 };

// Element window covered by an edge slice.
Slice element_window(ElementSpace space, Slice edges);

// Independence times of a matroid on the element sequence. For element k,
// tau[k] is the smallest window start i at which adding element k raises the
// rank of the window [i, k-1]; -1 means every start does, k+1 means none does.
struct TauTable {
  ElementSpace space = ElementSpace::kEdge;
  std::vector<std::int64_t> tau;

  std::size_t size() const { return tau.size(); }
};

// Partition matroid with `capacity` elements allowed per class. class_of[k]
// is a dense class id, or -1 for elements that are never independent.
TauTable compute_tau_classes(std::span<const std::int64_t> class_of, std::int64_t capacity,
                             ElementSpace space);

// Half-edges grouped by vertex: rank of a slice is sum_v min(deg(v), k).
// Self-loops contribute two half-edges to their vertex.
TauTable compute_tau_vertex_degree(const RelationalEventGraph& graph, std::int64_t k);

// Edges grouped by endpoint pair (ordered when `ordered_pairs`): rank of a
// slice is sum over pairs of min(multiplicity, k).
TauTable compute_tau_pairs(const RelationalEventGraph& graph, std::int64_t k, bool ordered_pairs);

}  // namespace evslice
