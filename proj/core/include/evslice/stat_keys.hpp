#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace evslice {

enum class StatKind {
  kEdges,
  kComponents,
  kNontrivialComponents,
  kAvgComponentSize,
  kAvgNontrivialSize,
  kLoopyEdges,
  kLoopyComponents,
  kTreeComponents,
  kNontrivialTrees,
  kIsolatedVertices,
  kDegreeGreater,      // degree_gt:d=D
  kDegreeExact,        // degree_eq:d=D
  kDegreeAtMost,       // degree_le:d=D
  kDistinct,
  kRepeated,
  kPairsAtLeast,       // pairs_ge:t=T
  kMultiplicityExact,  // mult_exact:mu=M  (edges with exactly M other parallel edges)
  kMultiplicityAtMost, // mult_atmost:mu=M
  kDistinctDirected,
  kDistinctUndirected,
  kReciprocatedDyads,
  kReciprocity,
  kNeighborsAtMost,    // neighbors_atmost:r=R,s=S
  kNeighborsExact,     // neighbors_exact:r=R,s=S
  kNeighborsTotal,     // neighbors_total:k=K
  kIsolatedEdges,
  kInfluenced,
  kInfluencedWithSources,
  kInfluencedHops,     // influenced:h=H
  kTriadClosures,
};

struct StatKey {
  StatKind kind = StatKind::kEdges;
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const StatKey&, const StatKey&) = default;
  friend auto operator<=>(const StatKey&, const StatKey&) = default;
};

// Throws std::invalid_argument on unknown names or malformed parameters.
StatKey parse_stat_key(std::string_view text);
std::string to_string(const StatKey& key);

// Counts are integers; averages and ratios are doubles.
using StatValue = std::variant<std::int64_t, double>;

// Splits a comma-separated key list. A piece starting with "s=" continues
// the previous key, so "neighbors_exact:r=1,s=0,distinct" yields two keys.
std::vector<std::string> split_key_list(std::string_view text);

std::string format_value(const StatValue& value);
double as_double(const StatValue& value);

}  // namespace evslice
