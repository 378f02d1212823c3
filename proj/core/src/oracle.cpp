#include "evslice/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace evslice {
namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

std::int64_t at(const std::vector<std::int64_t>& v, std::int64_t i) {
  return i >= 0 && i < static_cast<std::int64_t>(v.size()) ? v[static_cast<std::size_t>(i)] : 0;
}

}  // namespace

SliceStats oracle_slice_stats(const RelationalEventGraph& graph, Slice slice) {
  graph.check_slice(slice);
  const std::size_t n = graph.vertex_count();
  std::vector<Edge> edges(graph.edges().begin() + slice.i, graph.edges().begin() + slice.j + 1);
  SliceStats s;
  s.vertices = static_cast<std::int64_t>(n);
  s.edges = static_cast<std::int64_t>(edges.size());

  // Components, with per-component vertex and edge totals.
  UnionFind uf(n);
  for (const auto& e : edges) uf.parent[uf.find(e.u)] = uf.find(e.v);
  std::vector<std::int64_t> comp_vertices(n, 0), comp_edges(n, 0);
  for (std::size_t v = 0; v < n; ++v) ++comp_vertices[uf.find(v)];
  for (const auto& e : edges) ++comp_edges[uf.find(e.u)];
  for (std::size_t v = 0; v < n; ++v) {
    if (uf.find(v) != v) continue;
    ++s.components;
    s.spanning_forest_edges += comp_vertices[v] - 1;
    if (comp_edges[v] >= comp_vertices[v]) {
      ++s.loopy_components;
    } else {
      ++s.tree_components;
    }
  }

  std::vector<std::int64_t> degree(n, 0);
  for (const auto& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  s.degree_histogram.assign(2 * edges.size() + 1, 0);
  for (auto d : degree) ++s.degree_histogram[static_cast<std::size_t>(d)];
  s.isolated_vertices = s.degree_histogram[0];

  // Pair multiplicities.
  std::map<std::pair<VertexId, VertexId>, std::int64_t> ordered, unordered;
  for (const auto& e : edges) {
    ++ordered[{e.u, e.v}];
    ++unordered[{std::min(e.u, e.v), std::max(e.u, e.v)}];
  }
  s.distinct_directed = static_cast<std::int64_t>(ordered.size());
  s.distinct_undirected = static_cast<std::int64_t>(unordered.size());
  s.pair_histogram.assign(edges.size() + 1, 0);
  for (const auto& [pair, count] : graph.directed() ? ordered : unordered) ++s.pair_histogram[static_cast<std::size_t>(count)];

  // Neighbor counts: for each edge, count the other slice edges sharing a vertex.
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::int64_t past = 0, future = 0;
    for (std::size_t p = 0; p < edges.size(); ++p) {
      if (p == k) continue;
      const bool shares = edges[p].u == edges[k].u || edges[p].u == edges[k].v || edges[p].v == edges[k].u ||
                          edges[p].v == edges[k].v;
      if (!shares) continue;
      (p < k ? past : future) += 1;
    }
    ++s.neighbor_profiles[{past, future}];
  }

  // Shortest paths of influence: relax edges in sequence order.
  constexpr std::int64_t kUnreached = -1;
  std::vector<std::int64_t> hops(n, kUnreached);
  for (auto v : graph.influential()) hops[v] = 0;
  auto relax = [&](std::int64_t from_hops, VertexId to) {
    if (from_hops == kUnreached) return;
    if (hops[to] == kUnreached || hops[to] > from_hops + 1) hops[to] = from_hops + 1;
  };
  for (const auto& e : edges) {
    const std::int64_t hu = hops[e.u], hv = hops[e.v];
    relax(hu, e.v);
    if (!graph.directed()) relax(hv, e.u);
  }
  s.influence_hops.assign(edges.size() + 2, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (graph.is_influential(static_cast<VertexId>(v))) {
      if (degree[v] > 0) ++s.influential_touched;
    } else if (hops[v] > 0) {
      ++s.influence_hops[static_cast<std::size_t>(hops[v])];
    }
  }

  // Triad closures: edge (u, v) with a common neighbor over earlier slice edges.
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (const auto& e : edges) {
    if (e.u != e.v) {
      for (std::size_t w = 0; w < n; ++w) {
        if (w != e.u && w != e.v && adjacent[e.u][w] && adjacent[e.v][w]) {
          ++s.triad_closures;
          break;
        }
      }
      adjacent[e.u][e.v] = adjacent[e.v][e.u] = 1;
    }
  }
  return s;
}

StatValue oracle_value(const SliceStats& s, const StatKey& key, bool directed) {
  auto ratio = [](std::int64_t a, std::int64_t b) -> StatValue {
    return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
  };
  auto degree_greater = [&](std::int64_t d) {
    std::int64_t total = 0;
    for (std::size_t x = 0; x < s.degree_histogram.size(); ++x) {
      if (static_cast<std::int64_t>(x) > d) total += s.degree_histogram[x];
    }
    return total;
  };
  auto pairs_with = [&](auto pred) {
    std::int64_t total = 0;
    for (std::size_t c = 1; c < s.pair_histogram.size(); ++c) {
      if (pred(static_cast<std::int64_t>(c))) total += s.pair_histogram[c];
    }
    return total;
  };
  auto neighbors = [&](auto pred) {
    std::int64_t total = 0;
    for (const auto& [profile, count] : s.neighbor_profiles) {
      if (pred(profile.first, profile.second)) total += count;
    }
    return total;
  };
  auto influenced_within = [&](std::int64_t h) {
    std::int64_t total = 0;
    for (std::size_t x = 1; x < s.influence_hops.size(); ++x) {
      if (static_cast<std::int64_t>(x) <= h) total += s.influence_hops[x];
    }
    return total;
  };
  const std::int64_t nontrivial = s.components - s.isolated_vertices;
  const std::int64_t distinct = directed ? s.distinct_directed : s.distinct_undirected;

  switch (key.kind) {
    case StatKind::kEdges: return s.edges;
    case StatKind::kComponents: return s.components;
    case StatKind::kNontrivialComponents: return nontrivial;
    case StatKind::kAvgComponentSize: return ratio(s.vertices, s.components);
    case StatKind::kAvgNontrivialSize: return ratio(s.vertices - s.isolated_vertices, nontrivial);
    case StatKind::kLoopyEdges: return s.edges - s.spanning_forest_edges;
    case StatKind::kLoopyComponents: return s.loopy_components;
    case StatKind::kTreeComponents: return s.tree_components;
    case StatKind::kNontrivialTrees: return s.tree_components - s.isolated_vertices;
    case StatKind::kIsolatedVertices: return s.isolated_vertices;
    case StatKind::kDegreeGreater: return degree_greater(key.a);
    case StatKind::kDegreeExact: return at(s.degree_histogram, key.a);
    case StatKind::kDegreeAtMost: return s.vertices - degree_greater(key.a);
    case StatKind::kDistinct: return distinct;
    case StatKind::kRepeated: return s.edges - distinct;
    case StatKind::kPairsAtLeast: return pairs_with([&](std::int64_t c) { return c >= key.a; });
    case StatKind::kMultiplicityExact: return (key.a + 1) * at(s.pair_histogram, key.a + 1);
    case StatKind::kMultiplicityAtMost: {
      std::int64_t total = 0;
      for (std::int64_t c = 1; c <= key.a + 1; ++c) total += c * at(s.pair_histogram, c);
      return total;
    }
    case StatKind::kDistinctDirected:
    case StatKind::kDistinctUndirected:
    case StatKind::kReciprocatedDyads:
    case StatKind::kReciprocity: {
      if (!directed) throw std::invalid_argument("reciprocity statistics need a directed graph");
      const std::int64_t dyads = s.distinct_directed - s.distinct_undirected;
      if (key.kind == StatKind::kDistinctDirected) return s.distinct_directed;
      if (key.kind == StatKind::kDistinctUndirected) return s.distinct_undirected;
      if (key.kind == StatKind::kReciprocatedDyads) return dyads;
      return ratio(dyads, s.distinct_undirected);
    }
    case StatKind::kNeighborsAtMost:
      return neighbors([&](std::int64_t p, std::int64_t f) { return p <= key.a && f <= key.b; });
    case StatKind::kNeighborsExact:
      return neighbors([&](std::int64_t p, std::int64_t f) { return p == key.a && f == key.b; });
    case StatKind::kNeighborsTotal:
      return neighbors([&](std::int64_t p, std::int64_t f) { return p + f == key.a; });
    case StatKind::kIsolatedEdges:
      return neighbors([](std::int64_t p, std::int64_t f) { return p == 0 && f == 0; });
    case StatKind::kInfluenced: return influenced_within(static_cast<std::int64_t>(s.influence_hops.size()));
    case StatKind::kInfluencedWithSources:
      return influenced_within(static_cast<std::int64_t>(s.influence_hops.size())) + s.influential_touched;
    case StatKind::kInfluencedHops: return influenced_within(key.a);
    case StatKind::kTriadClosures: return s.triad_closures;
  }
  throw std::invalid_argument("unhandled statistic");
}

}  // namespace evslice
