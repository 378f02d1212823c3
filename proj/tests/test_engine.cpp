#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <random>

#include "evslice/container.hpp"
#include "evslice/engine.hpp"
#include "evslice/fuzz.hpp"
#include "evslice/generators.hpp"
#include "evslice/stat_keys.hpp"
#include "support/brute.hpp"

using namespace evslice;

TEST(StatKeys, ParseAndPrintRoundTrip) {
  for (const char* text : {"components", "degree_gt:d=3", "mult_exact:mu=2", "neighbors_exact:r=1,s=0",
                           "influenced:h=2", "pairs_ge:t=4", "neighbors_total:k=3", "triad_closures"}) {
    EXPECT_EQ(to_string(parse_stat_key(text)), text);
  }
  EXPECT_THROW(parse_stat_key("nope"), std::invalid_argument);
  EXPECT_THROW(parse_stat_key("degree_gt"), std::invalid_argument);
  EXPECT_THROW(parse_stat_key("degree_gt:d=x"), std::invalid_argument);
  EXPECT_THROW(parse_stat_key("influenced:h=0"), std::invalid_argument);
}

TEST(StatKeys, SplitKeepsNeighborPairsTogether) {
  EXPECT_EQ(split_key_list("neighbors_exact:r=1,s=0,distinct"),
            (std::vector<std::string>{"neighbors_exact:r=1,s=0", "distinct"}));
  EXPECT_EQ(split_key_list("components"), (std::vector<std::string>{"components"}));
  EXPECT_TRUE(split_key_list("").empty());
}

TEST(StatKeys, FormatValues) {
  EXPECT_EQ(format_value(StatValue{std::int64_t{3}}), "3");
  EXPECT_EQ(format_value(StatValue{0.5}), "0.5");
  EXPECT_DOUBLE_EQ(as_double(StatValue{std::int64_t{4}}), 4.0);
}

TEST(EngineConfig, ValidateAndJsonRoundTrip) {
  EngineConfig cfg;
  cfg.degrees = {0, 2};
  cfg.multiplicities = {1};
  cfg.neighbor_pairs = {{0, 1}};
  cfg.hop_bounds = {2};
  cfg.influential = {"s"};
  cfg.influence = true;
  cfg.triads = true;
  EXPECT_NO_THROW(cfg.validate());
  const auto back = EngineConfig::from_json(cfg.to_json());
  EXPECT_EQ(back.degrees, cfg.degrees);
  EXPECT_EQ(back.neighbor_pairs, cfg.neighbor_pairs);
  EXPECT_EQ(back.hop_bounds, cfg.hop_bounds);
  EXPECT_EQ(back.influential, cfg.influential);
  EXPECT_TRUE(back.triads);

  EngineConfig bad;
  bad.multiplicities = {-1};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = EngineConfig{};
  bad.hop_bounds = {0};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = EngineConfig{};
  bad.degrees = {-1};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(SliceEngine, DefaultKeysAndErrors) {
  const auto engine = SliceEngine::build(brute::ex1(), EngineConfig{});
  const auto keys = engine.available_keys();
  for (const char* k : {"components", "loopy_edges", "tree_components", "isolated_vertices", "degree_gt:d=1",
                        "distinct", "repeated"}) {
    EXPECT_NE(std::find(keys.begin(), keys.end(), k), keys.end()) << k;
  }
  EXPECT_EQ(std::find(keys.begin(), keys.end(), "reciprocity"), keys.end());
  EXPECT_EQ(std::get<std::int64_t>(engine.query({0, 4}, "components")), 1);
  EXPECT_EQ(std::get<std::int64_t>(engine.query({2, 4}, "tree_components")), 1);
  EXPECT_THROW(engine.query({3, 2}, "components"), std::out_of_range);
  EXPECT_THROW(engine.query({0, 5}, "components"), std::out_of_range);
  try {
    engine.query({0, 4}, "influenced");
    FAIL() << "expected an error";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("components"), std::string::npos) << e.what();
  }
}

TEST(SliceEngine, TimeWindow) {
  const auto engine = SliceEngine::build(brute::ex1(), EngineConfig{});
  EXPECT_EQ(engine.time_range(), (std::pair<double, double>{0.0, 4.0}));
  EXPECT_EQ(engine.time_window(0.5, 3.0), (Slice{1, 3}));
  EXPECT_EQ(engine.time_window(4.5, 9.0), std::nullopt);
}

TEST(SliceEngine, VisitedNodesAreReported) {
  const auto engine = SliceEngine::build(brute::ex1(), EngineConfig{});
  std::size_t visited = 0;
  engine.query({0, 4}, parse_stat_key("components"), &visited);
  EXPECT_GT(visited, 0u);
}

TEST(SliceEngine, ExhaustiveConfigAgreesWithOracle) {
  FuzzOptions opts;
  opts.seed = 97;
  opts.graphs = 6;
  opts.max_vertices = 10;
  opts.max_edges = 40;
  const auto report = run_fuzz(opts);
  EXPECT_EQ(report.graphs, 6u);
  EXPECT_GT(report.comparisons, 0u);
  EXPECT_EQ(report.mismatches, 0u) << (report.examples.empty() ? "" : report.examples.front());
}

TEST(Container, RoundTripAndSummary) {
  std::mt19937_64 rng(101);
  RandomGraphOptions opts;
  opts.vertices = 9;
  opts.edges = 60;
  opts.directed = true;
  const auto g = random_graph(rng, opts);
  const auto engine = SliceEngine::build(g, exhaustive_config());
  const auto bytes = encode_container(engine);
  ASSERT_GE(bytes.size(), 8u);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 8), "EVSLICE1");
  const auto summary = read_container_summary(bytes);
  EXPECT_NE(summary.find("\"edges\":60"), std::string::npos) << summary;
  const auto loaded = decode_container(bytes);
  EXPECT_EQ(loaded.available_keys(), engine.available_keys());
  for (EdgeIndex i = 0; i < 60; i += 7) {
    for (EdgeIndex j = i; j < 60; j += 5) {
      for (const auto& key : engine.available_keys()) {
        ASSERT_EQ(loaded.query({i, j}, key), engine.query({i, j}, key)) << key;
      }
    }
  }
}

TEST(Container, RejectsCorruption) {
  const auto engine = SliceEngine::build(brute::ex1(), EngineConfig{});
  const auto bytes = encode_container(engine);

  auto magic = bytes;
  magic[0] = 'X';
  EXPECT_THROW(decode_container(magic), FormatError);

  // A future version with a valid checksum is still refused.
  auto version = bytes;
  version[8] = static_cast<std::uint8_t>(kContainerVersion + 1);
  const auto sum = fnv1a64(std::span(version).first(version.size() - 8));
  for (int b = 0; b < 8; ++b) version[version.size() - 8 + b] = static_cast<std::uint8_t>(sum >> (8 * b));
  try {
    decode_container(version);
    FAIL() << "expected a version error";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("version"), std::string::npos) << e.what();
  }

  auto flipped = bytes;
  flipped[bytes.size() / 2] ^= 0x40;
  EXPECT_THROW(decode_container(flipped), FormatError);

  auto truncated = bytes;
  truncated.resize(bytes.size() - 1);
  EXPECT_THROW(decode_container(truncated), FormatError);

  EXPECT_THROW(decode_container(std::vector<std::uint8_t>{}), FormatError);
}

TEST(Container, Files) {
  const auto path = std::filesystem::temp_directory_path() / "evslice_engine_test.idx";
  const auto engine = SliceEngine::build(brute::ex1(), EngineConfig{});
  save_index_file(engine, path);
  const auto loaded = load_index_file(path);
  EXPECT_EQ(std::get<std::int64_t>(loaded.query({0, 4}, "components")), 1);
  std::filesystem::remove(path);
  EXPECT_ANY_THROW(load_index_file(path));
}
