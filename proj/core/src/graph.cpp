#include "evslice/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace evslice {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line, const std::optional<char>& delimiter) {
  std::vector<std::string_view> fields;
  if (delimiter) {
    std::size_t start = 0;
    while (true) {
      std::size_t pos = line.find(*delimiter, start);
      fields.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    return fields;
  }
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::vector<RawEvent> parse_events(std::istream& in, const ParseOptions& options) {
  std::vector<RawEvent> events;
  std::string line;
  std::size_t line_no = 0;
  bool header_pending = options.skip_header;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    auto fields = split_fields(body, options.delimiter);
    if (fields.size() < 3) throw ParseError(line_no, "expected timestamp, source and target");
    RawEvent ev;
    ev.line = line_no;
    const std::string_view ts = fields[0];
    auto [ptr, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), ev.timestamp);
    if (ec != std::errc() || ptr != ts.data() + ts.size() || !std::isfinite(ev.timestamp)) {
      throw ParseError(line_no, "non-numeric timestamp '" + std::string(ts) + "'");
    }
    if (fields[1].empty() || fields[2].empty()) throw ParseError(line_no, "empty vertex name");
    ev.source = std::string(fields[1]);
    ev.target = std::string(fields[2]);
    events.push_back(std::move(ev));
  }
  if (events.empty()) throw ParseError(line_no, "input contains no events");
  return events;
}

std::vector<RawEvent> parse_events(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_events(in, options);
}

RelationalEventGraph::RelationalEventGraph(std::size_t vertex_count, std::vector<Edge> edges,
                                           bool directed, std::vector<VertexId> influential)
    : edges_(std::move(edges)), directed_(directed) {
  names_.reserve(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    names_.push_back(std::to_string(v));
    ids_.emplace(names_.back(), static_cast<VertexId>(v));
  }
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw std::invalid_argument("edge " + std::to_string(k) + " has an endpoint outside the vertex set");
    }
    if (k > 0 && edges_[k - 1].timestamp > e.timestamp) {
      throw std::invalid_argument("edges are not in timestamp order at index " + std::to_string(k));
    }
  }
  set_influential(std::move(influential));
}

void RelationalEventGraph::set_influential(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  influential_mask_.assign(names_.size(), 0);
  for (VertexId v : ids) {
    if (v >= names_.size()) throw std::invalid_argument("influential vertex id out of range");
    influential_mask_[v] = 1;
  }
  influential_ = std::move(ids);
}

std::optional<VertexId> RelationalEventGraph::find_vertex(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void RelationalEventGraph::check_slice(Slice s) const {
  const auto m = static_cast<EdgeIndex>(edges_.size());
  if (s.i < 0 || s.i > s.j || s.j >= m) {
    throw std::out_of_range("slice [" + std::to_string(s.i) + "," + std::to_string(s.j) +
                            "] outside [0," + std::to_string(m - 1) + "]");
  }
}

std::optional<Slice> RelationalEventGraph::time_window(double t0, double t1) const {
  if (t0 > t1) return std::nullopt;
  auto by_time = [](const Edge& e, double t) { return e.timestamp < t; };
  auto first = std::lower_bound(edges_.begin(), edges_.end(), t0, by_time);
  auto last = std::upper_bound(edges_.begin(), edges_.end(), t1,
                               [](double t, const Edge& e) { return t < e.timestamp; });
  if (first >= last) return std::nullopt;
  return Slice{first - edges_.begin(), (last - edges_.begin()) - 1};
}

RelationalEventGraph build_graph(std::span<const RawEvent> events, const BuildOptions& options) {
  RelationalEventGraph g;
  g.directed_ = options.directed;

  auto intern = [&g](const std::string& name) {
    auto [it, inserted] = g.ids_.emplace(name, static_cast<VertexId>(g.names_.size()));
    if (inserted) g.names_.push_back(name);
    return it->second;
  };
  for (const auto& name : options.vertices) intern(name);

  std::vector<std::size_t> order(events.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return events[a].timestamp < events[b].timestamp;
  });

  // Ids follow first appearance in the file, independent of the time order.
  std::vector<std::pair<VertexId, VertexId>> endpoints(events.size());
  for (std::size_t k = 0; k < events.size(); ++k) {
    endpoints[k] = {intern(events[k].source), intern(events[k].target)};
  }
  g.edges_.reserve(events.size());
  for (std::size_t k : order) {
    g.edges_.push_back(Edge{endpoints[k].first, endpoints[k].second, events[k].timestamp, events[k].line});
  }

  std::vector<VertexId> influential;
  for (const auto& name : options.influential) {
    auto it = g.ids_.find(name);
    if (it == g.ids_.end()) {
      throw std::invalid_argument("influential vertex '" + name + "' does not occur in the input");
    }
    influential.push_back(it->second);
  }
  g.set_influential(std::move(influential));
  return g;
}

}  // namespace evslice
