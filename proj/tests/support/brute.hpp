#pragma once

// Brute-force references used by the tests. Written from the definitions,
// independent of the index code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "evslice/dominance.hpp"
#include "evslice/graph.hpp"
#include "evslice/stabbing.hpp"

namespace brute {

using evslice::Coord;
using evslice::Edge;
using evslice::EdgeIndex;
using evslice::RelationalEventGraph;
using evslice::VertexId;
using evslice::Weight;
using evslice::WeightedPoint;

inline Weight quadrant(const std::vector<WeightedPoint>& pts, const std::function<bool(Coord, Coord)>& in) {
  Weight total = 0;
  for (const auto& p : pts) {
    if (in(p.x, p.y)) total += p.weight;
  }
  return total;
}

inline Weight stab(const std::vector<evslice::Rectangle>& rects, Coord x, Coord y) {
  Weight total = 0;
  for (const auto& r : rects) {
    if (r.x_min <= x && x <= r.x_max && r.y_min <= y && y <= r.y_max) total += r.weight;
  }
  return total;
}

inline std::vector<WeightedPoint> random_points(std::mt19937_64& rng, Coord grid, std::size_t count, bool signed_weights) {
  std::uniform_int_distribution<Coord> coord(0, grid - 1);
  std::uniform_int_distribution<Weight> weight(signed_weights ? -5 : 1, 5);
  std::vector<WeightedPoint> pts;
  for (std::size_t k = 0; k < count; ++k) {
    Coord a = coord(rng), b = coord(rng);
    if (b > a) std::swap(a, b);
    pts.push_back({a, b, weight(rng)});
  }
  return pts;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Matroid ranks of the slice [i, j] computed from scratch.
inline std::int64_t graphic_rank(const RelationalEventGraph& g, EdgeIndex i, EdgeIndex j) {
  DisjointSets ds(g.vertex_count());
  std::int64_t rank = 0;
  for (EdgeIndex k = i; k <= j; ++k) rank += ds.unite(g.edge(k).u, g.edge(k).v) ? 1 : 0;
  return rank;
}

// Pseudoforest rank = vertices minus the components that are trees.
inline std::int64_t bicycle_rank(const RelationalEventGraph& g, EdgeIndex i, EdgeIndex j) {
  const auto n = g.vertex_count();
  DisjointSets ds(n);
  for (EdgeIndex k = i; k <= j; ++k) ds.unite(g.edge(k).u, g.edge(k).v);
  std::vector<std::int64_t> vertices(n, 0), edges(n, 0);
  for (std::size_t v = 0; v < n; ++v) ++vertices[ds.find(v)];
  for (EdgeIndex k = i; k <= j; ++k) ++edges[ds.find(g.edge(k).u)];
  std::int64_t rank = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (ds.find(v) == v) rank += std::min(vertices[v], edges[v]);
  }
  return rank;
}

inline std::int64_t degree_rank(const RelationalEventGraph& g, EdgeIndex i, EdgeIndex j, std::int64_t k) {
  std::vector<std::int64_t> degree(g.vertex_count(), 0);
  for (EdgeIndex e = i; e <= j; ++e) {
    ++degree[g.edge(e).u];
    ++degree[g.edge(e).v];
  }
  std::int64_t rank = 0;
  for (auto d : degree) rank += std::min(d, k);
  return rank;
}

inline std::int64_t pair_rank(const RelationalEventGraph& g, EdgeIndex i, EdgeIndex j, std::int64_t k, bool ordered) {
  std::map<std::pair<VertexId, VertexId>, std::int64_t> count;
  for (EdgeIndex e = i; e <= j; ++e) {
    auto a = g.edge(e).u, b = g.edge(e).v;
    if (!ordered && b < a) std::swap(a, b);
    ++count[{a, b}];
  }
  std::int64_t rank = 0;
  for (const auto& [pair, c] : count) rank += std::min(c, k);
  return rank;
}

// Independence times recovered from a rank function over edge slices:
// tau_k = smallest i with rank(i, k) > rank(i, k - 1), -1 if that holds for
// every i, k + 1 if for none.
inline std::vector<std::int64_t> tau_from_rank(std::size_t elements,
                                               const std::function<std::int64_t(EdgeIndex, EdgeIndex)>& rank) {
  std::vector<std::int64_t> tau(elements);
  for (EdgeIndex k = 0; k < static_cast<EdgeIndex>(elements); ++k) {
    std::int64_t first = k + 1;
    for (EdgeIndex i = 0; i <= k; ++i) {
      const std::int64_t before = i <= k - 1 ? rank(i, k - 1) : 0;
      if (rank(i, k) > before) {
        first = i;
        break;
      }
    }
    tau[static_cast<std::size_t>(k)] = first == 0 ? -1 : first;
  }
  return tau;
}

inline RelationalEventGraph make_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                       bool directed, std::vector<VertexId> influential = {}) {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    edges.push_back(Edge{pairs[k].first, pairs[k].second, static_cast<double>(k), k + 1});
  }
  return RelationalEventGraph(n, std::move(edges), directed, std::move(influential));
}

// a=0, b=1, c=2, d=3
inline RelationalEventGraph ex1() { return make_graph(4, {{0, 1}, {1, 2}, {0, 1}, {2, 0}, {2, 3}}, false); }
inline RelationalEventGraph ex3() { return make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 1}}, false); }
// s=0, a=1, x=2, v=3
inline RelationalEventGraph ex2() { return make_graph(4, {{0, 1}, {2, 3}, {1, 3}}, true, {0}); }

}  // namespace brute
