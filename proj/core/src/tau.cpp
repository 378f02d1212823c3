#include "evslice/tau.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace evslice {

Slice element_window(ElementSpace space, Slice edges) {
  if (space == ElementSpace::kEdge) return edges;
  return Slice{2 * edges.i, 2 * edges.j + 1};
}

TauTable compute_tau_classes(std::span<const std::int64_t> class_of, std::int64_t capacity,
                             ElementSpace space) {
  if (capacity < 1) throw std::invalid_argument("partition capacity must be at least 1");
  std::int64_t classes = 0;
  for (auto c : class_of) classes = std::max(classes, c + 1);

  // Per class, the indices of its elements in sequence order. Once a class
  // holds more than `capacity` elements, element k stops counting as soon as
  // the window drops the element `capacity` places before it.
  std::vector<std::vector<std::int64_t>> members(static_cast<std::size_t>(classes));
  TauTable table;
  table.space = space;
  table.tau.resize(class_of.size());
  for (std::size_t k = 0; k < class_of.size(); ++k) {
    const auto index = static_cast<std::int64_t>(k);
    if (class_of[k] < 0) {
      table.tau[k] = index + 1;
      continue;
    }
    auto& list = members[static_cast<std::size_t>(class_of[k])];
    list.push_back(index);
    const auto count = static_cast<std::int64_t>(list.size());
    table.tau[k] = count <= capacity ? -1 : 1 + list[static_cast<std::size_t>(count - 1 - capacity)];
  }
  return table;
}

TauTable compute_tau_vertex_degree(const RelationalEventGraph& graph, std::int64_t k) {
  std::vector<std::int64_t> class_of;
  class_of.reserve(2 * graph.edge_count());
  for (const auto& e : graph.edges()) {
    class_of.push_back(e.u);
    class_of.push_back(e.v);
  }
  return compute_tau_classes(class_of, k, ElementSpace::kHalfEdge);
}

TauTable compute_tau_pairs(const RelationalEventGraph& graph, std::int64_t k, bool ordered_pairs) {
  std::unordered_map<std::uint64_t, std::int64_t> ids;
  ids.reserve(graph.edge_count());
  std::vector<std::int64_t> class_of;
  class_of.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) {
    auto a = e.u, b = e.v;
    if (!ordered_pairs && b < a) std::swap(a, b);
    const std::uint64_t key = (std::uint64_t{a} << 32) | b;
    auto [it, fresh] = ids.try_emplace(key, static_cast<std::int64_t>(ids.size()));
    class_of.push_back(it->second);
  }
  return compute_tau_classes(class_of, k, ElementSpace::kEdge);
}

}  // namespace evslice
