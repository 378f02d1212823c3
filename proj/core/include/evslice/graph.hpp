#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace evslice {

using VertexId = std::uint32_t;
using EdgeIndex = std::int64_t;

// One line of an event file before vertex interning.
struct RawEvent {
  double timestamp = 0.0;
  std::string source;
  std::string target;
  std::size_t line = 0;
};

struct ParseOptions {
  // Field separator. std::nullopt splits on runs of blanks and tabs.
  std::optional<char> delimiter;
  bool skip_header = false;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Reads `timestamp <sep> source <sep> target` lines. Blank lines and lines
// starting with '#' are skipped; trailing extra columns are ignored.
std::vector<RawEvent> parse_events(std::istream& in, const ParseOptions& options = {});
std::vector<RawEvent> parse_events(std::string_view text, const ParseOptions& options = {});

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double timestamp = 0.0;
  std::size_t line = 0;
};

// Contiguous window of edge indices, both ends inclusive.
struct Slice {
  EdgeIndex i = 0;
  EdgeIndex j = 0;

  EdgeIndex width() const { return j - i + 1; }
  friend bool operator==(const Slice&, const Slice&) = default;
};

struct BuildOptions {
  bool directed = false;
  std::vector<std::string> influential;
  // Vertices declared up front; they receive the first ids in this order.
  std::vector<std::string> vertices;
};

class RelationalEventGraph {
 public:
  RelationalEventGraph() = default;

  // Edges must already be in sequence order; vertex names default to ids.
  RelationalEventGraph(std::size_t vertex_count, std::vector<Edge> edges, bool directed,
                       std::vector<VertexId> influential = {});

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool directed() const { return directed_; }

  const Edge& edge(EdgeIndex k) const { return edges_[static_cast<std::size_t>(k)]; }
  std::span<const Edge> edges() const { return edges_; }

  const std::string& vertex_name(VertexId v) const { return names_[v]; }
  std::optional<VertexId> find_vertex(std::string_view name) const;

  std::span<const VertexId> influential() const { return influential_; }
  bool is_influential(VertexId v) const { return influential_mask_[v] != 0; }

  // Throws std::out_of_range unless 0 <= i <= j < m.
  void check_slice(Slice s) const;

  // Maximal index window whose timestamps lie in [t0, t1]; nullopt if empty.
  std::optional<Slice> time_window(double t0, double t1) const;

 private:
  friend RelationalEventGraph build_graph(std::span<const RawEvent>, const BuildOptions&);

  void set_influential(std::vector<VertexId> ids);

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<Edge> edges_;
  bool directed_ = false;
  std::vector<VertexId> influential_;
  std::vector<char> influential_mask_;
};

// Interns endpoint names and orders events by timestamp. Equal timestamps keep
// their input order.
RelationalEventGraph build_graph(std::span<const RawEvent> events, const BuildOptions& options = {});

}  // namespace evslice
