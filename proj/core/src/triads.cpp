#include "evslice/triads.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace evslice {
namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (b < a) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

}  // namespace

DegreeSplit compute_degree_split(const RelationalEventGraph& graph) {
  const auto n = graph.vertex_count();
  std::unordered_set<std::uint64_t> pairs;
  pairs.reserve(graph.edge_count());
  std::vector<std::int64_t> degree(n, 0);
  for (const auto& e : graph.edges()) {
    if (e.u == e.v) continue;
    if (pairs.insert(pair_key(e.u, e.v)).second) {
      ++degree[e.u];
      ++degree[e.v];
    }
  }
  std::vector<std::int64_t> sorted = degree;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  DegreeSplit split;
  while (split.h < static_cast<std::int64_t>(n) && sorted[static_cast<std::size_t>(split.h)] >= split.h + 1) ++split.h;
  split.is_heavy.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] > split.h) {
      split.heavy.push_back(static_cast<VertexId>(v));
      split.is_heavy[v] = 1;
    }
  }
  return split;
}

TriadThresholds compute_triad_thresholds(const RelationalEventGraph& graph) {
  TriadThresholds out;
  out.split = compute_degree_split(graph);
  const auto& heavy = out.split.heavy;
  const auto& is_heavy = out.split.is_heavy;
  const auto m = graph.edge_count();
  out.closure_start.assign(m, 0);

  std::unordered_map<std::uint64_t, EdgeIndex> latest;     // pair -> most recent edge index
  std::unordered_map<std::uint64_t, EdgeIndex> via_light;  // pair -> best wedge through a light vertex
  latest.reserve(m);
  std::vector<std::vector<VertexId>> adjacent(graph.vertex_count());
  std::size_t work = 0;

  // Wedge bests are only ever read for pairs that are edges themselves.
  std::unordered_set<std::uint64_t> edge_pairs;
  edge_pairs.reserve(m);
  for (const auto& e : graph.edges()) {
    if (e.u != e.v) edge_pairs.insert(pair_key(e.u, e.v));
  }

  auto lookup = [&](const std::unordered_map<std::uint64_t, EdgeIndex>& table, VertexId a, VertexId b) {
    ++work;
    auto it = table.find(pair_key(a, b));
    return it == table.end() ? EdgeIndex{-1} : it->second;
  };

  // A new edge (a, b) at index k, with `b` light, refreshes every wedge
  // a-b-w: the wedge's older edge is now the (b, w) edge.
  auto refresh_through = [&](VertexId a, VertexId b) {
    for (VertexId w : adjacent[b]) {
      if (w == a) continue;
      ++work;
      if (!edge_pairs.contains(pair_key(a, w))) continue;
      const EdgeIndex older = lookup(latest, b, w);
      auto& slot = via_light.try_emplace(pair_key(a, w), -1).first->second;
      slot = std::max(slot, older);
    }
  };

  for (std::size_t k = 0; k < m; ++k) {
    const auto index = static_cast<EdgeIndex>(k);
    const Edge& e = graph.edge(index);
    if (e.u == e.v) continue;
    EdgeIndex best = lookup(via_light, e.u, e.v);
    for (VertexId w : heavy) {
      if (w == e.u || w == e.v) continue;
      const EdgeIndex a = lookup(latest, e.u, w);
      const EdgeIndex b = lookup(latest, w, e.v);
      if (a >= 0 && b >= 0) best = std::max(best, std::min(a, b));
    }
    out.closure_start[k] = best >= 0 ? best + 1 : 0;

    auto [it, fresh] = latest.try_emplace(pair_key(e.u, e.v), index);
    it->second = index;
    ++work;
    if (fresh) {
      adjacent[e.u].push_back(e.v);
      adjacent[e.v].push_back(e.u);
    }
    if (!is_heavy[e.v]) refresh_through(e.u, e.v);
    if (!is_heavy[e.u]) refresh_through(e.v, e.u);
  }
  out.work = work;
  return out;
}

}  // namespace evslice
