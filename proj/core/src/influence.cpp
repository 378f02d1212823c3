#include "evslice/influence.hpp"

#include <algorithm>
#include <stdexcept>

namespace evslice {

std::vector<Arrival> compute_arrivals(const RelationalEventGraph& graph, std::int64_t max_hops) {
  if (max_hops < 0) throw std::invalid_argument("hop bound must be at least 1");
  const auto m = static_cast<EdgeIndex>(graph.edge_count());
  const auto n = graph.vertex_count();
  // Layer c holds, per vertex, the greatest window start from which the
  // vertex is reached by a path of at most c edges ending at or before the
  // current edge. The unbounded case uses a single layer that feeds itself.
  const bool bounded = max_hops > 0;
  const std::size_t layers = bounded ? static_cast<std::size_t>(max_hops) : 1;
  std::vector<std::vector<EdgeIndex>> best(layers, std::vector<EdgeIndex>(n, -1));

  std::vector<Arrival> arrivals;
  arrivals.reserve(graph.directed() ? graph.edge_count() : 2 * graph.edge_count());
  std::vector<EdgeIndex> pending_u(layers), pending_v(layers);

  // Value that edge k offers to its head, for layer c, before any update at k.
  auto offer = [&](VertexId tail, std::size_t c, EdgeIndex k) -> EdgeIndex {
    if (graph.is_influential(tail)) return k;
    if (bounded) return c == 0 ? -1 : best[c - 1][tail];
    return best[0][tail];
  };

  for (EdgeIndex k = 0; k < m; ++k) {
    const Edge& e = graph.edge(k);
    const bool both = !graph.directed() && e.u != e.v;
    for (std::size_t c = 0; c < layers; ++c) {
      pending_v[c] = offer(e.u, c, k);
      if (both) pending_u[c] = offer(e.v, c, k);
    }
    for (std::size_t c = 0; c < layers; ++c) {
      best[c][e.v] = std::max(best[c][e.v], pending_v[c]);
      if (both) best[c][e.u] = std::max(best[c][e.u], pending_u[c]);
    }
    arrivals.push_back(Arrival{k, e.v, best[layers - 1][e.v], m});
    if (both) arrivals.push_back(Arrival{k, e.u, best[layers - 1][e.u], m});
  }

  // Next arrival at the same vertex, by a reverse pass.
  std::vector<EdgeIndex> next(n, m);
  for (auto it = arrivals.rbegin(); it != arrivals.rend(); ++it) {
    it->next_arrival = next[it->target];
    next[it->target] = it->edge;
  }
  return arrivals;
}

StabbingIndex build_influence_index(const RelationalEventGraph& graph, std::int64_t max_hops) {
  const auto arrivals = compute_arrivals(graph, max_hops);
  std::vector<Rectangle> rects;
  for (const auto& a : arrivals) {
    if (a.latest_start < 0 || graph.is_influential(a.target)) continue;
    rects.push_back(Rectangle{0, a.latest_start, a.edge, a.next_arrival - 1, 1});
  }
  return StabbingIndex::build(rects, std::max<Coord>(1, static_cast<Coord>(graph.edge_count())));
}

}  // namespace evslice
