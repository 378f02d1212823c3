#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "evslice/engine.hpp"
#include "evslice/generators.hpp"
#include "evslice/influence.hpp"
#include "support/brute.hpp"

using namespace evslice;

namespace {

constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max() / 2;

// Fewest edges on an index-increasing path from an influential vertex,
// using only edges of the slice.
std::vector<std::int64_t> hops_in_slice(const RelationalEventGraph& g, Slice s) {
  std::vector<std::int64_t> hops(g.vertex_count(), kUnreached);
  for (auto v : g.influential()) hops[v] = 0;
  for (EdgeIndex k = s.i; k <= s.j; ++k) {
    const auto& e = g.edge(k);
    const auto hu = hops[e.u], hv = hops[e.v];
    hops[e.v] = std::min(hops[e.v], hu + 1);
    if (!g.directed()) hops[e.u] = std::min(hops[e.u], hv + 1);
  }
  return hops;
}

bool influenced(const RelationalEventGraph& g, Slice s, VertexId v) {
  return !g.is_influential(v) && hops_in_slice(g, s)[v] < kUnreached;
}

std::int64_t influenced_count(const RelationalEventGraph& g, Slice s, std::int64_t max_hops) {
  const auto hops = hops_in_slice(g, s);
  std::int64_t n = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_influential(v) || hops[v] >= kUnreached) continue;
    if (max_hops == 0 || hops[v] <= max_hops) ++n;
  }
  return n;
}

RelationalEventGraph chain() { return brute::make_graph(4, {{0, 1}, {1, 2}, {2, 3}}, true, {0}); }

std::vector<EdgeIndex> latest_starts(const std::vector<Arrival>& arrivals) {
  std::vector<EdgeIndex> out;
  for (const auto& a : arrivals) out.push_back(a.latest_start);
  return out;
}

}  // namespace

TEST(Arrivals, DirectedExample) {
  const auto arrivals = compute_arrivals(brute::ex2());
  ASSERT_EQ(arrivals.size(), 3u);
  EXPECT_EQ(latest_starts(arrivals), (std::vector<EdgeIndex>{0, -1, 0}));
  std::vector<EdgeIndex> next;
  for (const auto& a : arrivals) next.push_back(a.next_arrival);
  EXPECT_EQ(next, (std::vector<EdgeIndex>{3, 2, 3}));
}

TEST(Arrivals, NoInfluentialVertices) {
  const auto g = brute::make_graph(3, {{0, 1}, {1, 2}}, true);
  EXPECT_EQ(latest_starts(compute_arrivals(g)), (std::vector<EdgeIndex>{-1, -1}));
}

TEST(Arrivals, ChainAndHopLayers) {
  EXPECT_EQ(latest_starts(compute_arrivals(chain())), (std::vector<EdgeIndex>{0, 0, 0}));
  EXPECT_EQ(latest_starts(compute_arrivals(chain(), 1)), (std::vector<EdgeIndex>{0, -1, -1}));
  EXPECT_EQ(latest_starts(compute_arrivals(chain(), 3)), (std::vector<EdgeIndex>{0, 0, 0}));
}

TEST(Arrivals, StarNeedsOneHop) {
  const auto star = brute::make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, true, {0});
  EXPECT_EQ(latest_starts(compute_arrivals(star, 1)), latest_starts(compute_arrivals(star)));
}

TEST(Arrivals, UndirectedEdgesDeliverBothWays) {
  // s=0 influential; b-a then a-s then a-b: b is reached only through the last edge.
  const auto g = brute::make_graph(3, {{2, 1}, {1, 0}, {1, 2}}, false, {0});
  const auto arrivals = compute_arrivals(g);
  ASSERT_EQ(arrivals.size(), 6u);
  EXPECT_EQ(influenced_count(g, {0, 2}, 0), 2);
  EXPECT_EQ(influenced_count(g, {0, 1}, 0), 1);
}

TEST(InfluenceStats, Examples) {
  EngineConfig cfg;
  cfg.influence = true;
  const auto engine = SliceEngine::build(brute::ex2(), cfg);
  auto count = [&](Slice s) { return std::get<std::int64_t>(engine.query(s, "influenced")); };
  EXPECT_EQ(count({0, 2}), 2);
  EXPECT_EQ(count({1, 2}), 0);
  EXPECT_EQ(count({0, 0}), 1);
}

TEST(InfluenceStats, MatchBruteForceAndShrinkWithHops) {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 60; ++round) {
    RandomGraphOptions opts;
    opts.vertices = 2 + rng() % 8;
    opts.edges = 1 + rng() % 30;
    opts.directed = round % 2 == 0;
    opts.influential = 1 + rng() % 2;
    const auto g = random_graph(rng, opts);
    const auto m = static_cast<EdgeIndex>(g.edge_count());
    const auto all = build_influence_index(g);
    std::vector<StabbingIndex> layers;
    for (std::int64_t h = 1; h <= 3; ++h) layers.push_back(build_influence_index(g, h));
    for (EdgeIndex i = 0; i < m; ++i) {
      for (EdgeIndex j = i; j < m; ++j) {
        const auto total = all.stab(i, j);
        ASSERT_EQ(total, influenced_count(g, {i, j}, 0)) << round;
        Weight previous = 0;
        for (std::int64_t h = 1; h <= 3; ++h) {
          const auto at_h = layers[static_cast<std::size_t>(h - 1)].stab(i, j);
          ASSERT_EQ(at_h, influenced_count(g, {i, j}, h)) << round << " h=" << h;
          ASSERT_LE(previous, at_h);
          ASSERT_LE(at_h, total);
          previous = at_h;
        }
        // Widening the window never loses influence.
        if (j + 1 < m) ASSERT_LE(total, all.stab(i, j + 1));
        if (i > 0) ASSERT_LE(total, all.stab(i - 1, j));
      }
    }
  }
}

// For an arrival at v through e_k: iota = greatest i with v influenced in
// G_{i,k}, lambda = least j with v influenced in G_{k,j} (m when none). A
// window [i, j] around k in which v is not influenced always lies in
// (iota, k] x [k, lambda). The converse does not hold, so counting vertices
// as the complement of those rectangles would be wrong; the index uses the
// last arrival instead.
TEST(InfluenceStats, ComplementRectanglesOnlyBoundTheUninfluenced) {
  std::mt19937_64 rng(67);
  for (int round = 0; round < 40; ++round) {
    RandomGraphOptions opts;
    opts.vertices = 2 + rng() % 6;
    opts.edges = 1 + rng() % 20;
    opts.directed = true;
    const auto g = random_graph(rng, opts);
    const auto m = static_cast<EdgeIndex>(g.edge_count());
    for (EdgeIndex k = 0; k < m; ++k) {
      const VertexId v = g.edge(k).v;
      if (g.is_influential(v)) continue;
      EdgeIndex iota = -1;
      for (EdgeIndex i = 0; i <= k; ++i) {
        if (influenced(g, {i, k}, v)) iota = i;
      }
      EdgeIndex lambda = m;
      for (EdgeIndex j = m - 1; j >= k; --j) {
        if (influenced(g, {k, j}, v)) lambda = j;
      }
      for (EdgeIndex i = 0; i <= k; ++i) {
        for (EdgeIndex j = k; j < m; ++j) {
          if (!influenced(g, {i, j}, v)) {
            ASSERT_TRUE(iota < i && j < lambda) << round << " k=" << k;
          }
        }
      }
    }
  }
  // The converse fails on the directed example: e_1 = x->v has iota = -1 and
  // lambda = m, yet v is influenced in G_{0,2} through s->a->v.
  const auto g = brute::ex2();
  EXPECT_TRUE(influenced(g, {0, 2}, 3));
  EXPECT_FALSE(influenced(g, {0, 1}, 3));
  EXPECT_FALSE(influenced(g, {1, 2}, 3));
}

TEST(InfluenceStats, WithSourcesAddsTouchedInfluentialVertices) {
  EngineConfig cfg;
  cfg.influence = true;
  const auto engine = SliceEngine::build(brute::ex2(), cfg);
  EXPECT_EQ(std::get<std::int64_t>(engine.query({0, 2}, "influenced_with_sources")), 3);
  EXPECT_EQ(std::get<std::int64_t>(engine.query({1, 2}, "influenced_with_sources")), 0);
}
