#include "evslice/neighbors.hpp"

#include <stdexcept>

namespace evslice {
namespace {

// Scans the edges in the given direction keeping, per vertex, the t + 1 most
// recently seen incident edges (most recent first). The (t+1)-th distinct
// edge in the merged lists of both endpoints is the neighbor that must leave
// the window before e_k is down to t neighbors.
template <typename Order>
std::vector<EdgeIndex> scan(const RelationalEventGraph& graph, std::int64_t t, Order order,
                            EdgeIndex none) {
  if (t < 0) throw std::invalid_argument("neighbor threshold must be non-negative");
  const auto m = static_cast<EdgeIndex>(graph.edge_count());
  const auto keep = static_cast<std::size_t>(t) + 1;
  std::vector<std::vector<EdgeIndex>> recent(graph.vertex_count());
  std::vector<EdgeIndex> out(static_cast<std::size_t>(m), none);

  auto remember = [&](VertexId v, EdgeIndex k) {
    auto& list = recent[v];
    if (list.size() == keep) list.pop_back();
    list.insert(list.begin(), k);
  };

  for (EdgeIndex step = 0; step < m; ++step) {
    const EdgeIndex k = order(step);
    const Edge& e = graph.edge(k);
    const auto& a = recent[e.u];
    const auto& b = recent[e.v];
    std::size_t ia = 0, ib = 0, seen = 0;
    const bool loop = e.u == e.v;
    EdgeIndex found = none;
    bool have = false;
    while (seen < keep) {
      // Lists are ordered by distance from k; merge them by that distance.
      const bool take_a = ia < a.size();
      const bool take_b = !loop && ib < b.size();
      if (!take_a && !take_b) break;
      EdgeIndex next;
      if (take_a && take_b) {
        const bool a_closer = order.closer(a[ia], b[ib]);
        if (a[ia] == b[ib]) {
          next = a[ia++];
          ++ib;
        } else if (a_closer) {
          next = a[ia++];
        } else {
          next = b[ib++];
        }
      } else if (take_a) {
        next = a[ia++];
      } else {
        next = b[ib++];
      }
      if (++seen == keep) {
        found = next;
        have = true;
      }
    }
    if (have) out[static_cast<std::size_t>(k)] = order.step_past(found);
    remember(e.u, k);
    if (!loop) remember(e.v, k);
  }
  return out;
}

struct Forward {
  EdgeIndex operator()(EdgeIndex step) const { return step; }
  bool closer(EdgeIndex a, EdgeIndex b) const { return a > b; }
  EdgeIndex step_past(EdgeIndex p) const { return p + 1; }
};

struct Backward {
  EdgeIndex m;
  EdgeIndex operator()(EdgeIndex step) const { return m - 1 - step; }
  bool closer(EdgeIndex a, EdgeIndex b) const { return a < b; }
  EdgeIndex step_past(EdgeIndex p) const { return p - 1; }
};

}  // namespace

std::vector<EdgeIndex> past_thresholds(const RelationalEventGraph& graph, std::int64_t t) {
  return scan(graph, t, Forward{}, 0);
}

std::vector<EdgeIndex> future_thresholds(const RelationalEventGraph& graph, std::int64_t t) {
  const auto m = static_cast<EdgeIndex>(graph.edge_count());
  return scan(graph, t, Backward{m}, m - 1);
}

StabbingIndex build_neighbor_index(const RelationalEventGraph& graph, std::int64_t r, std::int64_t s) {
  const auto past = past_thresholds(graph, r);
  const auto future = future_thresholds(graph, s);
  std::vector<Rectangle> rects;
  rects.reserve(past.size());
  for (std::size_t k = 0; k < past.size(); ++k) {
    const auto index = static_cast<EdgeIndex>(k);
    rects.push_back(Rectangle{past[k], index, index, future[k], 1});
  }
  return StabbingIndex::build(rects, static_cast<Coord>(graph.edge_count()));
}

}  // namespace evslice
