#include "evslice/connectivity.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "evslice/dynamic_forest.hpp"

namespace evslice {

TauTable compute_tau_graphic(const RelationalEventGraph& graph) {
  const auto m = graph.edge_count();
  DynamicForest forest(graph.vertex_count(), m);
  TauTable table;
  table.space = ElementSpace::kEdge;
  table.tau.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto index = static_cast<EdgeIndex>(k);
    const Edge& e = graph.edge(index);
    if (e.u == e.v) {
      table.tau[k] = index + 1;
      continue;
    }
    if (auto oldest = forest.path_lightest(e.u, e.v)) {
      table.tau[k] = *oldest + 1;
      forest.cut(*oldest);
    } else {
      table.tau[k] = -1;
    }
    forest.link(e.u, e.v, index);
  }
  return table;
}

TauTable compute_tau_bicycle(const RelationalEventGraph& graph) {
  const auto m = graph.edge_count();
  DynamicForest forest(graph.vertex_count(), m);
  // Tree root -> the edge closing that component's single cycle.
  std::unordered_map<VertexId, EdgeIndex> cycle_edge;
  TauTable table;
  table.space = ElementSpace::kEdge;
  table.tau.resize(m);

  std::vector<EdgeIndex> extras;
  auto take_entry = [&](VertexId root) {
    if (auto it = cycle_edge.find(root); it != cycle_edge.end()) {
      extras.push_back(it->second);
      cycle_edge.erase(it);
    }
  };
  auto lightest = [&](EdgeIndex best, VertexId a, VertexId b) {
    if (auto p = forest.path_lightest(a, b)) best = std::min(best, *p);
    return best;
  };

  for (std::size_t k = 0; k < m; ++k) {
    const auto index = static_cast<EdgeIndex>(k);
    const Edge& e = graph.edge(index);
    extras.clear();
    const VertexId ru = forest.find_root(e.u);
    const VertexId rv = forest.find_root(e.v);
    take_entry(ru);
    if (rv != ru) take_entry(rv);

    if (ru != rv) {
      forest.link(e.u, e.v, index);
    } else {
      extras.push_back(index);
    }

    table.tau[k] = -1;
    if (extras.size() == 2) {
      // The two cycles and the forest path joining them form the circuit.
      const Edge& x1 = graph.edge(extras[0]);
      const Edge& x2 = graph.edge(extras[1]);
      EdgeIndex oldest = std::min(extras[0], extras[1]);
      oldest = lightest(oldest, x1.u, x1.v);
      oldest = lightest(oldest, x2.u, x2.v);
      oldest = lightest(oldest, x1.u, x2.u);
      table.tau[k] = oldest + 1;
      if (oldest == extras[0] || oldest == extras[1]) {
        extras.erase(std::find(extras.begin(), extras.end(), oldest));
      } else {
        forest.cut(oldest);
        // Each cycle edge either bridges the two halves again or stays the
        // cycle edge of its half.
        std::vector<EdgeIndex> kept;
        for (EdgeIndex x : extras) {
          const Edge& ex = graph.edge(x);
          if (ex.u != ex.v && !forest.connected(ex.u, ex.v)) {
            forest.link(ex.u, ex.v, x);
          } else {
            kept.push_back(x);
          }
        }
        extras = kept;
      }
    }
    // Roots may have moved during the structural changes above; store the
    // surviving cycle edges under the current roots.
    for (EdgeIndex x : extras) cycle_edge[forest.find_root(graph.edge(x).u)] = x;
  }
  return table;
}

}  // namespace evslice
