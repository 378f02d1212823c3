#include "evslice/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace evslice {

RelationalEventGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& options) {
  if (options.vertices == 0) throw std::invalid_argument("random graph needs at least one vertex");
  std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(options.vertices - 1));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  edges.reserve(options.edges);
  for (std::size_t k = 0; k < options.edges; ++k) {
    Edge e;
    if (!edges.empty() && coin(rng) < options.repeat_probability) {
      std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
      e = edges[pick(rng)];
      if (coin(rng) < 0.5) std::swap(e.u, e.v);
    } else {
      e.u = vertex(rng);
      if (options.vertices == 1 || coin(rng) < options.loop_probability) {
        e.v = e.u;
      } else {
        // Draw from the other vertices so that loops only come from loop_probability.
        std::uniform_int_distribution<VertexId> other(0, static_cast<VertexId>(options.vertices - 2));
        e.v = other(rng);
        if (e.v >= e.u) ++e.v;
      }
    }
    e.timestamp = static_cast<double>(k);
    e.line = k + 1;
    edges.push_back(e);
  }
  std::vector<VertexId> ids(options.vertices);
  for (std::size_t v = 0; v < ids.size(); ++v) ids[v] = static_cast<VertexId>(v);
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(std::min(options.influential, ids.size()));
  return RelationalEventGraph(options.vertices, std::move(edges), options.directed, std::move(ids));
}

void check_permutation(std::span<const std::int64_t> perm) {
  std::vector<char> seen(perm.size(), 0);
  for (auto p : perm) {
    if (p < 0 || p >= static_cast<std::int64_t>(perm.size()) || seen[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("not a permutation of 0..n-1");
    }
    seen[static_cast<std::size_t>(p)] = 1;
  }
}

namespace {

struct TimedEdge {
  std::int64_t time;
  VertexId u, v;
};

RelationalEventGraph from_timed(std::size_t vertices, std::vector<TimedEdge> timed, bool directed,
                                std::vector<VertexId> influential) {
  std::stable_sort(timed.begin(), timed.end(),
                   [](const TimedEdge& a, const TimedEdge& b) { return a.time < b.time; });
  std::vector<Edge> edges;
  edges.reserve(timed.size());
  for (const auto& t : timed) edges.push_back(Edge{t.u, t.v, static_cast<double>(t.time), 0});
  return RelationalEventGraph(vertices, std::move(edges), directed, std::move(influential));
}

}  // namespace

RelationalEventGraph repeated_pairs_instance(std::span<const std::int64_t> perm) {
  check_permutation(perm);
  const auto n = static_cast<std::int64_t>(perm.size());
  std::vector<TimedEdge> timed;
  for (std::int64_t i = 0; i < n; ++i) {
    const auto a = static_cast<VertexId>(2 * i), b = static_cast<VertexId>(2 * i + 1);
    timed.push_back({n - i - 1, a, b});
    timed.push_back({n + perm[static_cast<std::size_t>(i)], a, b});
  }
  return from_timed(static_cast<std::size_t>(2 * n), std::move(timed), false, {});
}

RelationalEventGraph two_level_influence_instance(std::span<const std::int64_t> perm) {
  check_permutation(perm);
  const auto n = static_cast<std::int64_t>(perm.size());
  // Vertex 0 is the root, 1 + 2i the middle vertex and 2 + 2i the leaf of branch i.
  std::vector<TimedEdge> timed;
  for (std::int64_t i = 0; i < n; ++i) {
    timed.push_back({n - i, 0, static_cast<VertexId>(1 + 2 * i)});
  }
  for (std::int64_t i = 0; i < n; ++i) {
    timed.push_back({n + perm[static_cast<std::size_t>(i)], static_cast<VertexId>(1 + 2 * i),
                     static_cast<VertexId>(2 + 2 * i)});
  }
  return from_timed(static_cast<std::size_t>(2 * n + 1), std::move(timed), true, {0});
}

}  // namespace evslice
