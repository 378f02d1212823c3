#include <gtest/gtest.h>

#include <random>
#include <set>

#include "evslice/engine.hpp"
#include "evslice/generators.hpp"
#include "evslice/neighbors.hpp"
#include "support/brute.hpp"

using namespace evslice;

namespace {

bool adjacent(const Edge& a, const Edge& b) { return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v; }

std::int64_t past_count(const RelationalEventGraph& g, EdgeIndex k, EdgeIndex i) {
  std::int64_t n = 0;
  for (EdgeIndex x = i; x < k; ++x) n += adjacent(g.edge(x), g.edge(k)) ? 1 : 0;
  return n;
}

std::int64_t future_count(const RelationalEventGraph& g, EdgeIndex k, EdgeIndex j) {
  std::int64_t n = 0;
  for (EdgeIndex x = k + 1; x <= j; ++x) n += adjacent(g.edge(x), g.edge(k)) ? 1 : 0;
  return n;
}

std::int64_t edges_with_at_most(const RelationalEventGraph& g, Slice s, std::int64_t r, std::int64_t f) {
  std::int64_t n = 0;
  for (EdgeIndex k = s.i; k <= s.j; ++k) n += past_count(g, k, s.i) <= r && future_count(g, k, s.j) <= f ? 1 : 0;
  return n;
}

}  // namespace

TEST(NeighborThresholds, Examples) {
  const auto g = brute::ex1();
  EXPECT_EQ(past_thresholds(g, 1)[2], 1);
  EXPECT_EQ(future_thresholds(g, 1)[2], 4);
  EXPECT_EQ(past_thresholds(g, 0)[2], 2);
  EXPECT_EQ(future_thresholds(g, 0)[2], 2);
}

TEST(NeighborThresholds, NegativeThresholdRejected) {
  EXPECT_THROW(past_thresholds(brute::ex1(), -1), std::invalid_argument);
  EXPECT_THROW(build_neighbor_index(brute::ex1(), 0, -1), std::invalid_argument);
}

TEST(NeighborThresholds, MatchDefinition) {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 100; ++round) {
    RandomGraphOptions opts;
    opts.vertices = 1 + rng() % 9;
    opts.edges = 1 + rng() % 30;
    opts.directed = round % 3 == 0;
    const auto g = random_graph(rng, opts);
    const auto m = static_cast<EdgeIndex>(g.edge_count());
    for (std::int64_t t = 0; t <= 3; ++t) {
      const auto past = past_thresholds(g, t);
      const auto future = future_thresholds(g, t);
      for (EdgeIndex k = 0; k < m; ++k) {
        EdgeIndex least = k;
        while (least > 0 && past_count(g, k, least - 1) <= t) --least;
        EdgeIndex greatest = k;
        while (greatest + 1 < m && future_count(g, k, greatest + 1) <= t) ++greatest;
        ASSERT_EQ(past[static_cast<std::size_t>(k)], least) << round << " k=" << k << " t=" << t;
        ASSERT_EQ(future[static_cast<std::size_t>(k)], greatest) << round << " k=" << k << " t=" << t;
      }
    }
  }
}

TEST(NeighborStats, Examples) {
  EngineConfig cfg;
  cfg.neighbor_pairs = {{1, 1}};
  const auto engine = SliceEngine::build(brute::ex1(), cfg);
  auto count = [&](Slice s, const char* key) { return std::get<std::int64_t>(engine.query(s, key)); };
  EXPECT_EQ(count({2, 2}, "isolated_edges"), 1);
  EXPECT_EQ(count({0, 4}, "isolated_edges"), 0);
  // In [1, 3] = bc, ab, ca every edge has one past and one future neighbor
  // at most; only e_2 has exactly one of each.
  const auto g = brute::ex1();
  std::int64_t exact = 0;
  for (EdgeIndex k = 1; k <= 3; ++k) exact += past_count(g, k, 1) == 1 && future_count(g, k, 3) == 1 ? 1 : 0;
  EXPECT_EQ(count({1, 3}, "neighbors_exact:r=1,s=1"), exact);
  EXPECT_EQ(exact, 1);
}

TEST(NeighborStats, AtMostIsMonotone) {
  std::mt19937_64 rng(53);
  RandomGraphOptions opts;
  opts.vertices = 7;
  opts.edges = 45;
  const auto g = random_graph(rng, opts);
  const auto m = static_cast<EdgeIndex>(g.edge_count());
  for (std::int64_t r = 0; r <= 2; ++r) {
    for (std::int64_t s = 0; s <= 2; ++s) {
      const auto index = build_neighbor_index(g, r, s);
      const auto wider = build_neighbor_index(g, r + 1, s);
      for (EdgeIndex i = 0; i < m; ++i) {
        for (EdgeIndex j = i; j < m; ++j) {
          const auto here = index.stab(i, j);
          ASSERT_EQ(here, edges_with_at_most(g, {i, j}, r, s));
          ASSERT_LE(here, wider.stab(i, j));
        }
      }
    }
  }
}

TEST(NeighborStats, ExactCountsSumToWidth) {
  // Every edge of a window has exactly one (past, future) profile, and the
  // profile with both counts below w covers them all.
  std::mt19937_64 rng(59);
  RandomGraphOptions opts;
  opts.vertices = 5;
  opts.edges = 12;
  const auto g = random_graph(rng, opts);
  EngineConfig cfg;
  for (std::int64_t r = 0; r < 12; ++r) {
    for (std::int64_t s = 0; s < 12; ++s) cfg.neighbor_pairs.emplace_back(r, s);
  }
  const auto engine = SliceEngine::build(g, cfg);
  for (EdgeIndex i = 0; i < 12; ++i) {
    for (EdgeIndex j = i; j < 12; ++j) {
      std::int64_t total = 0;
      for (std::int64_t r = 0; r < 12; ++r) {
        for (std::int64_t s = 0; s < 12; ++s) {
          total += std::get<std::int64_t>(
              engine.query({i, j}, StatKey{StatKind::kNeighborsExact, r, s}));
        }
      }
      ASSERT_EQ(total, j - i + 1);
    }
  }
}
