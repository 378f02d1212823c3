#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evslice/binary_io.hpp"
#include "evslice/graph.hpp"
#include "evslice/rank_index.hpp"
#include "evslice/stabbing.hpp"
#include "evslice/stat_keys.hpp"

namespace evslice {

// Parameters fixed at build time. Statistics whose parameters are not
// registered here cannot be queried later.
struct EngineConfig {
  bool directed = false;
  std::vector<std::int64_t> degrees{1};         // d for degree_gt/eq/le
  std::vector<std::int64_t> multiplicities;     // mu for mult_exact/atmost
  std::vector<std::pair<std::int64_t, std::int64_t>> neighbor_pairs;  // (r, s)
  std::vector<std::int64_t> hop_bounds;         // h for influenced:h=
  std::vector<std::string> influential;
  bool influence = false;
  bool triads = false;

  // Throws std::invalid_argument describing the first bad parameter.
  void validate() const;
  std::string to_json() const;
  static EngineConfig from_json(const std::string& text);
};

struct IndexSize {
  std::string name;
  std::size_t nodes = 0;
};

struct BuildStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<IndexSize> indexes;
  std::size_t total_nodes = 0;
  double seconds = 0.0;
};

class SliceEngine {
 public:
  SliceEngine() = default;

  // Uses the graph's own directedness and influential set; `config.directed`
  // and `config.influential` are recorded but not reapplied.
  static SliceEngine build(const RelationalEventGraph& graph, const EngineConfig& config);

  std::size_t vertex_count() const { return vertices_; }
  std::size_t edge_count() const { return timestamps_.size(); }
  bool directed() const { return directed_; }
  const EngineConfig& config() const { return config_; }
  const BuildStats& build_stats() const { return stats_; }
  const std::vector<std::string>& influential_names() const { return influential_names_; }
  std::pair<double, double> time_range() const;
  // Maximal index window whose timestamps lie in [t0, t1].
  std::optional<Slice> time_window(double t0, double t1) const;

  // Registered statistic keys in canonical spelling.
  std::vector<std::string> available_keys() const;
  bool supports(const StatKey& key) const;

  // Throws std::out_of_range for bad slices and std::invalid_argument for
  // statistics that were not registered (the message lists the available ones).
  StatValue query(Slice slice, const StatKey& key, std::size_t* visited = nullptr) const;
  StatValue query(Slice slice, const std::string& key) const;

  void save(ByteWriter& out) const;
  static SliceEngine load(ByteReader& in);

 private:
  void check_slice(Slice s) const;
  std::int64_t degree_rank(Slice s, std::int64_t k, std::size_t* visited) const;
  std::int64_t degree_greater(Slice s, std::int64_t d, std::size_t* visited) const;
  std::int64_t pair_rank(Slice s, std::int64_t k, std::size_t* visited) const;
  std::int64_t pairs_at_least(Slice s, std::int64_t t, std::size_t* visited) const;
  std::int64_t neighbors_at_most(Slice s, std::int64_t r, std::int64_t s_future, std::size_t* visited) const;
  std::int64_t neighbors_exact(Slice s, std::int64_t r, std::int64_t s_future, std::size_t* visited) const;
  bool has_neighbors_exact(std::int64_t r, std::int64_t s) const;
  [[noreturn]] void unavailable(const StatKey& key) const;
  void collect_stats();

  EngineConfig config_;
  std::size_t vertices_ = 0;
  bool directed_ = false;
  std::vector<double> timestamps_;
  std::vector<std::string> influential_names_;

  RankIndex graphic_;
  RankIndex bicycle_;
  std::map<std::int64_t, RankIndex> degree_ranks_;  // vertex capacity k -> index
  std::map<std::int64_t, RankIndex> pair_ranks_;    // pair capacity k -> index
  std::optional<RankIndex> undirected_pairs_;       // directed graphs only, capacity 1
  std::map<std::pair<std::int64_t, std::int64_t>, StabbingIndex> neighbor_at_most_;
  std::optional<StabbingIndex> influence_;
  std::map<std::int64_t, StabbingIndex> influence_hops_;
  std::optional<RankIndex> influential_touch_;
  std::optional<RankIndex> triads_;

  BuildStats stats_;
};

}  // namespace evslice
