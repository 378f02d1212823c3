#include "evslice/stat_keys.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace evslice {
namespace {

struct KeyName {
  StatKind kind;
  std::string_view name;
  std::string_view params;  // "", "d", "t", "mu", "k", "h" or "r,s"
};

constexpr std::array kNames = {
    KeyName{StatKind::kEdges, "edges", ""},
    KeyName{StatKind::kComponents, "components", ""},
    KeyName{StatKind::kNontrivialComponents, "nontrivial_components", ""},
    KeyName{StatKind::kAvgComponentSize, "avg_component_size", ""},
    KeyName{StatKind::kAvgNontrivialSize, "avg_nontrivial_size", ""},
    KeyName{StatKind::kLoopyEdges, "loopy_edges", ""},
    KeyName{StatKind::kLoopyComponents, "loopy_components", ""},
    KeyName{StatKind::kTreeComponents, "tree_components", ""},
    KeyName{StatKind::kNontrivialTrees, "nontrivial_trees", ""},
    KeyName{StatKind::kIsolatedVertices, "isolated_vertices", ""},
    KeyName{StatKind::kDegreeGreater, "degree_gt", "d"},
    KeyName{StatKind::kDegreeExact, "degree_eq", "d"},
    KeyName{StatKind::kDegreeAtMost, "degree_le", "d"},
    KeyName{StatKind::kDistinct, "distinct", ""},
    KeyName{StatKind::kRepeated, "repeated", ""},
    KeyName{StatKind::kPairsAtLeast, "pairs_ge", "t"},
    KeyName{StatKind::kMultiplicityExact, "mult_exact", "mu"},
    KeyName{StatKind::kMultiplicityAtMost, "mult_atmost", "mu"},
    KeyName{StatKind::kDistinctDirected, "distinct_directed", ""},
    KeyName{StatKind::kDistinctUndirected, "distinct_undirected", ""},
    KeyName{StatKind::kReciprocatedDyads, "reciprocated_dyads", ""},
    KeyName{StatKind::kReciprocity, "reciprocity", ""},
    KeyName{StatKind::kNeighborsAtMost, "neighbors_atmost", "r,s"},
    KeyName{StatKind::kNeighborsExact, "neighbors_exact", "r,s"},
    KeyName{StatKind::kNeighborsTotal, "neighbors_total", "k"},
    KeyName{StatKind::kIsolatedEdges, "isolated_edges", ""},
    KeyName{StatKind::kInfluenced, "influenced", ""},
    KeyName{StatKind::kInfluencedWithSources, "influenced_with_sources", ""},
    KeyName{StatKind::kInfluencedHops, "influenced", "h"},
    KeyName{StatKind::kTriadClosures, "triad_closures", ""},
};

std::int64_t parse_param(std::string_view text, std::string_view expected, std::string_view key) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || text.substr(0, eq) != expected) {
    throw std::invalid_argument("statistic '" + std::string(key) + "' expects parameter " + std::string(expected) + "=");
  }
  const auto digits = text.substr(eq + 1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() || value < 0) {
    throw std::invalid_argument("bad parameter value in statistic '" + std::string(key) + "'");
  }
  return value;
}

}  // namespace

StatKey parse_stat_key(std::string_view text) {
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  const auto params = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  for (const auto& entry : kNames) {
    if (entry.name != name) continue;
    if (entry.params.empty() != (colon == std::string_view::npos)) continue;
    StatKey key{entry.kind, 0, 0};
    if (entry.params == "r,s") {
      const auto comma = params.find(',');
      if (comma == std::string_view::npos) {
        throw std::invalid_argument("statistic '" + std::string(text) + "' expects r=R,s=S");
      }
      key.a = parse_param(params.substr(0, comma), "r", text);
      key.b = parse_param(params.substr(comma + 1), "s", text);
    } else if (!entry.params.empty()) {
      key.a = parse_param(params, entry.params, text);
      if (entry.kind == StatKind::kInfluencedHops && key.a < 1) {
        throw std::invalid_argument("hop bound in statistic '" + std::string(text) + "' must be at least 1");
      }
    }
    return key;
  }
  throw std::invalid_argument("unknown statistic '" + std::string(text) + "'");
}

std::string to_string(const StatKey& key) {
  for (const auto& entry : kNames) {
    if (entry.kind != key.kind) continue;
    std::string out(entry.name);
    if (entry.params == "r,s") {
      out += ":r=" + std::to_string(key.a) + ",s=" + std::to_string(key.b);
    } else if (!entry.params.empty()) {
      out += ":" + std::string(entry.params) + "=" + std::to_string(key.a);
    }
    return out;
  }
  return "?";
}

std::vector<std::string> split_key_list(std::string_view text) {
  std::vector<std::string> keys;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto piece = text.substr(start, end - start);
    if (piece.starts_with("s=") && !keys.empty()) {
      keys.back() += ",";
      keys.back() += piece;
    } else if (!piece.empty()) {
      keys.emplace_back(piece);
    }
    start = end + 1;
  }
  return keys;
}

std::string format_value(const StatValue& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(value));
  return buf;
}

double as_double(const StatValue& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) return static_cast<double>(*i);
  return std::get<double>(value);
}

}  // namespace evslice
