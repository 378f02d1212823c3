#include "evslice/engine.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "evslice/connectivity.hpp"
#include "evslice/influence.hpp"
#include "evslice/neighbors.hpp"
#include "evslice/tau.hpp"
#include "evslice/triads.hpp"

namespace evslice {

using nlohmann::json;

void EngineConfig::validate() const {
  for (auto d : degrees) {
    if (d < 0) throw std::invalid_argument("degree values must be non-negative");
  }
  for (auto mu : multiplicities) {
    if (mu < 0) throw std::invalid_argument("multiplicity values must be non-negative");
  }
  for (auto [r, s] : neighbor_pairs) {
    if (r < 0 || s < 0) throw std::invalid_argument("neighbor thresholds must be non-negative");
  }
  for (auto h : hop_bounds) {
    if (h < 1) throw std::invalid_argument("hop bounds must be at least 1");
  }
}

std::string EngineConfig::to_json() const {
  json j;
  j["directed"] = directed;
  j["degrees"] = degrees;
  j["multiplicities"] = multiplicities;
  j["neighbor_pairs"] = json::array();
  for (auto [r, s] : neighbor_pairs) j["neighbor_pairs"].push_back({r, s});
  j["hop_bounds"] = hop_bounds;
  j["influential"] = influential;
  j["influence"] = influence;
  j["triads"] = triads;
  return j.dump();
}

EngineConfig EngineConfig::from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    EngineConfig c;
    c.directed = j.at("directed").get<bool>();
    c.degrees = j.at("degrees").get<std::vector<std::int64_t>>();
    c.multiplicities = j.at("multiplicities").get<std::vector<std::int64_t>>();
    c.neighbor_pairs.clear();
    for (const auto& p : j.at("neighbor_pairs")) c.neighbor_pairs.emplace_back(p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>());
    c.hop_bounds = j.at("hop_bounds").get<std::vector<std::int64_t>>();
    c.influential = j.at("influential").get<std::vector<std::string>>();
    c.influence = j.at("influence").get<bool>();
    c.triads = j.at("triads").get<bool>();
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad engine configuration: ") + e.what());
  }
}

SliceEngine SliceEngine::build(const RelationalEventGraph& graph, const EngineConfig& config) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();
  SliceEngine engine;
  engine.config_ = config;
  engine.vertices_ = graph.vertex_count();
  engine.directed_ = graph.directed();
  engine.timestamps_.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) engine.timestamps_.push_back(e.timestamp);
  for (auto v : graph.influential()) engine.influential_names_.push_back(graph.vertex_name(v));

  engine.graphic_ = RankIndex::build(compute_tau_graphic(graph));
  engine.bicycle_ = RankIndex::build(compute_tau_bicycle(graph));

  std::set<std::int64_t> vertex_caps{1};
  for (auto d : config.degrees) {
    for (auto k : {d - 1, d, d + 1}) {
      if (k >= 1) vertex_caps.insert(k);
    }
  }
  for (auto k : vertex_caps) engine.degree_ranks_.emplace(k, RankIndex::build(compute_tau_vertex_degree(graph, k)));

  std::int64_t pair_cap = 1;
  for (auto mu : config.multiplicities) pair_cap = std::max(pair_cap, mu + 2);
  for (std::int64_t k = 1; k <= pair_cap; ++k) {
    engine.pair_ranks_.emplace(k, RankIndex::build(compute_tau_pairs(graph, k, graph.directed())));
  }
  if (graph.directed()) engine.undirected_pairs_ = RankIndex::build(compute_tau_pairs(graph, 1, false));

  std::set<std::pair<std::int64_t, std::int64_t>> combos;
  for (auto [r, s] : config.neighbor_pairs) {
    for (auto dr : {0, 1}) {
      for (auto ds : {0, 1}) {
        if (r - dr >= 0 && s - ds >= 0) combos.insert({r - dr, s - ds});
      }
    }
  }
  for (auto [r, s] : combos) engine.neighbor_at_most_.emplace(std::pair{r, s}, build_neighbor_index(graph, r, s));

  if (config.influence || !graph.influential().empty() || !config.hop_bounds.empty()) {
    engine.influence_ = build_influence_index(graph, 0);
    for (auto h : config.hop_bounds) engine.influence_hops_.emplace(h, build_influence_index(graph, h));
    std::vector<std::int64_t> class_of;
    class_of.reserve(2 * graph.edge_count());
    for (const auto& e : graph.edges()) {
      class_of.push_back(graph.is_influential(e.u) ? std::int64_t{e.u} : -1);
      class_of.push_back(graph.is_influential(e.v) ? std::int64_t{e.v} : -1);
    }
    engine.influential_touch_ = RankIndex::build(compute_tau_classes(class_of, 1, ElementSpace::kHalfEdge));
  }

  if (config.triads) {
    auto thresholds = compute_triad_thresholds(graph);
    TauTable table{ElementSpace::kEdge, std::move(thresholds.closure_start)};
    engine.triads_ = RankIndex::build(table);
  }

  engine.collect_stats();
  engine.stats_.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return engine;
}

void SliceEngine::collect_stats() {
  stats_ = BuildStats{};
  stats_.vertices = vertices_;
  stats_.edges = timestamps_.size();
  auto add = [&](std::string name, std::size_t nodes) {
    stats_.total_nodes += nodes;
    stats_.indexes.push_back({std::move(name), nodes});
  };
  add("graphic", graphic_.node_count());
  add("bicycle", bicycle_.node_count());
  for (const auto& [k, index] : degree_ranks_) add("degree k=" + std::to_string(k), index.node_count());
  for (const auto& [k, index] : pair_ranks_) add("pairs k=" + std::to_string(k), index.node_count());
  if (undirected_pairs_) add("undirected pairs", undirected_pairs_->node_count());
  for (const auto& [rs, index] : neighbor_at_most_) {
    add("neighbors r=" + std::to_string(rs.first) + ",s=" + std::to_string(rs.second), index.node_count());
  }
  if (influence_) add("influence", influence_->node_count());
  for (const auto& [h, index] : influence_hops_) add("influence h=" + std::to_string(h), index.node_count());
  if (influential_touch_) add("influential touch", influential_touch_->node_count());
  if (triads_) add("triads", triads_->node_count());
}

std::pair<double, double> SliceEngine::time_range() const {
  if (timestamps_.empty()) return {0.0, 0.0};
  return {timestamps_.front(), timestamps_.back()};
}

std::optional<Slice> SliceEngine::time_window(double t0, double t1) const {
  if (!(t0 <= t1)) return std::nullopt;
  const auto first = std::lower_bound(timestamps_.begin(), timestamps_.end(), t0);
  const auto last = std::upper_bound(timestamps_.begin(), timestamps_.end(), t1);
  if (first >= last) return std::nullopt;
  return Slice{first - timestamps_.begin(), (last - timestamps_.begin()) - 1};
}

void SliceEngine::check_slice(Slice s) const {
  const auto m = static_cast<EdgeIndex>(timestamps_.size());
  if (s.i < 0 || s.i > s.j || s.j >= m) {
    throw std::out_of_range("slice [" + std::to_string(s.i) + "," + std::to_string(s.j) +
                            "] is not a window of the " + std::to_string(m) + " edges");
  }
}

std::int64_t SliceEngine::degree_rank(Slice s, std::int64_t k, std::size_t* visited) const {
  if (k <= 0) {
    if (visited != nullptr) *visited = 0;
    return 0;
  }
  return degree_ranks_.at(k).rank(s, visited);
}

std::int64_t SliceEngine::degree_greater(Slice s, std::int64_t d, std::size_t* visited) const {
  if (d < 0) return static_cast<std::int64_t>(vertices_);
  std::size_t a = 0, b = 0;
  const std::int64_t out = degree_rank(s, d + 1, visited ? &a : nullptr) - degree_rank(s, d, visited ? &b : nullptr);
  if (visited != nullptr) *visited = a + b;
  return out;
}

std::int64_t SliceEngine::pair_rank(Slice s, std::int64_t k, std::size_t* visited) const {
  if (k <= 0) {
    if (visited != nullptr) *visited = 0;
    return 0;
  }
  return pair_ranks_.at(k).rank(s, visited);
}

std::int64_t SliceEngine::pairs_at_least(Slice s, std::int64_t t, std::size_t* visited) const {
  std::size_t a = 0, b = 0;
  const std::int64_t out = pair_rank(s, t, visited ? &a : nullptr) - pair_rank(s, t - 1, visited ? &b : nullptr);
  if (visited != nullptr) *visited = a + b;
  return out;
}

std::int64_t SliceEngine::neighbors_at_most(Slice s, std::int64_t r, std::int64_t f, std::size_t* visited) const {
  if (r < 0 || f < 0) {
    if (visited != nullptr) *visited = 0;
    return 0;
  }
  return neighbor_at_most_.at({r, f}).stab(s.i, s.j, visited);
}

std::int64_t SliceEngine::neighbors_exact(Slice s, std::int64_t r, std::int64_t f, std::size_t* visited) const {
  std::size_t parts[4] = {0, 0, 0, 0};
  auto p = [&](int q) { return visited ? &parts[q] : nullptr; };
  const std::int64_t out = neighbors_at_most(s, r, f, p(0)) - neighbors_at_most(s, r, f - 1, p(1)) -
                           neighbors_at_most(s, r - 1, f, p(2)) + neighbors_at_most(s, r - 1, f - 1, p(3));
  if (visited != nullptr) *visited = parts[0] + parts[1] + parts[2] + parts[3];
  return out;
}

bool SliceEngine::has_neighbors_exact(std::int64_t r, std::int64_t s) const {
  for (auto dr : {0, 1}) {
    for (auto ds : {0, 1}) {
      if (r - dr >= 0 && s - ds >= 0 && !neighbor_at_most_.contains({r - dr, s - ds})) return false;
    }
  }
  return r >= 0 && s >= 0;
}

bool SliceEngine::supports(const StatKey& key) const {
  auto registered = [](const std::vector<std::int64_t>& values, std::int64_t v) {
    return std::find(values.begin(), values.end(), v) != values.end();
  };
  switch (key.kind) {
    case StatKind::kDegreeGreater:
    case StatKind::kDegreeExact:
    case StatKind::kDegreeAtMost:
      return registered(config_.degrees, key.a);
    case StatKind::kPairsAtLeast:
      return key.a >= 1 && pair_ranks_.contains(key.a);
    case StatKind::kMultiplicityExact:
    case StatKind::kMultiplicityAtMost:
      return registered(config_.multiplicities, key.a);
    case StatKind::kDistinctDirected:
    case StatKind::kDistinctUndirected:
    case StatKind::kReciprocatedDyads:
    case StatKind::kReciprocity:
      return directed_;
    case StatKind::kNeighborsAtMost:
      return neighbor_at_most_.contains({key.a, key.b});
    case StatKind::kNeighborsExact:
      return has_neighbors_exact(key.a, key.b);
    case StatKind::kNeighborsTotal:
      for (std::int64_t r = 0; r <= key.a; ++r) {
        if (!has_neighbors_exact(r, key.a - r)) return false;
      }
      return true;
    case StatKind::kIsolatedEdges:
      return neighbor_at_most_.contains({0, 0});
    case StatKind::kInfluenced:
    case StatKind::kInfluencedWithSources:
      return influence_.has_value();
    case StatKind::kInfluencedHops:
      return influence_hops_.contains(key.a);
    case StatKind::kTriadClosures:
      return triads_.has_value();
    default:
      return true;
  }
}

std::vector<std::string> SliceEngine::available_keys() const {
  std::vector<StatKey> keys;
  for (auto kind : {StatKind::kEdges, StatKind::kComponents, StatKind::kNontrivialComponents,
                    StatKind::kAvgComponentSize, StatKind::kAvgNontrivialSize, StatKind::kLoopyEdges,
                    StatKind::kLoopyComponents, StatKind::kTreeComponents, StatKind::kNontrivialTrees,
                    StatKind::kIsolatedVertices}) {
    keys.push_back({kind});
  }
  for (auto d : std::set<std::int64_t>(config_.degrees.begin(), config_.degrees.end())) {
    for (auto kind : {StatKind::kDegreeGreater, StatKind::kDegreeExact, StatKind::kDegreeAtMost}) keys.push_back({kind, d});
  }
  keys.push_back({StatKind::kDistinct});
  keys.push_back({StatKind::kRepeated});
  for (const auto& [t, index] : pair_ranks_) keys.push_back({StatKind::kPairsAtLeast, t});
  for (auto mu : std::set<std::int64_t>(config_.multiplicities.begin(), config_.multiplicities.end())) {
    keys.push_back({StatKind::kMultiplicityExact, mu});
    keys.push_back({StatKind::kMultiplicityAtMost, mu});
  }
  if (directed_) {
    for (auto kind : {StatKind::kDistinctDirected, StatKind::kDistinctUndirected, StatKind::kReciprocatedDyads,
                      StatKind::kReciprocity}) {
      keys.push_back({kind});
    }
  }
  std::int64_t max_total = -1;
  for (const auto& [rs, index] : neighbor_at_most_) {
    keys.push_back({StatKind::kNeighborsAtMost, rs.first, rs.second});
    if (has_neighbors_exact(rs.first, rs.second)) keys.push_back({StatKind::kNeighborsExact, rs.first, rs.second});
    max_total = std::max(max_total, rs.first + rs.second);
  }
  for (std::int64_t k = 0; k <= max_total; ++k) {
    if (supports({StatKind::kNeighborsTotal, k})) keys.push_back({StatKind::kNeighborsTotal, k});
  }
  if (neighbor_at_most_.contains({0, 0})) keys.push_back({StatKind::kIsolatedEdges});
  if (influence_) {
    keys.push_back({StatKind::kInfluenced});
    keys.push_back({StatKind::kInfluencedWithSources});
  }
  for (const auto& [h, index] : influence_hops_) keys.push_back({StatKind::kInfluencedHops, h});
  if (triads_) keys.push_back({StatKind::kTriadClosures});

  std::vector<std::string> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(to_string(k));
  return out;
}

void SliceEngine::unavailable(const StatKey& key) const {
  std::string list;
  for (const auto& k : available_keys()) list += (list.empty() ? "" : ", ") + k;
  throw std::invalid_argument("statistic '" + to_string(key) + "' is not available in this index; available: " + list);
}

StatValue SliceEngine::query(Slice s, const std::string& key) const { return query(s, parse_stat_key(key)); }

StatValue SliceEngine::query(Slice s, const StatKey& key, std::size_t* visited) const {
  check_slice(s);
  if (!supports(key)) unavailable(key);
  std::size_t scratch = 0;
  // Accumulate the visited counts of every index lookup made for this key.
  std::size_t total_visited = 0;
  auto v = [&]() -> std::size_t* { return visited ? &scratch : nullptr; };
  auto track = [&](std::int64_t value) {
    total_visited += scratch;
    scratch = 0;
    return value;
  };
  auto ratio = [](std::int64_t a, std::int64_t b) -> StatValue {
    return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
  };

  const auto n = static_cast<std::int64_t>(vertices_);
  const std::int64_t w = s.width();
  auto graphic_rank = [&] { return track(graphic_.rank(s, v())); };
  auto isolated = [&] { return n - track(degree_rank(s, 1, v())); };
  auto degree_gt = [&](std::int64_t d) { return track(degree_greater(s, d, v())); };
  auto ge = [&](std::int64_t t) { return track(pairs_at_least(s, t, v())); };

  StatValue out;
  switch (key.kind) {
    case StatKind::kEdges: out = w; break;
    case StatKind::kComponents: out = n - graphic_rank(); break;
    case StatKind::kNontrivialComponents: out = n - graphic_rank() - isolated(); break;
    case StatKind::kAvgComponentSize: out = ratio(n, n - graphic_rank()); break;
    case StatKind::kAvgNontrivialSize: {
      const std::int64_t iso = isolated();
      out = ratio(n - iso, n - graphic_rank() - iso);
      break;
    }
    case StatKind::kLoopyEdges: out = w - graphic_rank(); break;
    case StatKind::kLoopyComponents: out = track(bicycle_.rank(s, v())) - graphic_rank(); break;
    case StatKind::kTreeComponents: out = n - track(bicycle_.rank(s, v())); break;
    case StatKind::kNontrivialTrees: out = n - track(bicycle_.rank(s, v())) - isolated(); break;
    case StatKind::kIsolatedVertices: out = isolated(); break;
    case StatKind::kDegreeGreater: out = degree_gt(key.a); break;
    case StatKind::kDegreeExact: out = degree_gt(key.a - 1) - degree_gt(key.a); break;
    case StatKind::kDegreeAtMost: out = n - degree_gt(key.a); break;
    case StatKind::kDistinct: out = track(pair_rank(s, 1, v())); break;
    case StatKind::kRepeated: out = w - track(pair_rank(s, 1, v())); break;
    case StatKind::kPairsAtLeast: out = ge(key.a); break;
    case StatKind::kMultiplicityExact: out = (key.a + 1) * (ge(key.a + 1) - ge(key.a + 2)); break;
    case StatKind::kMultiplicityAtMost: {
      std::int64_t total = 0;
      for (std::int64_t c = 1; c <= key.a + 1; ++c) total += c * (ge(c) - ge(c + 1));
      out = total;
      break;
    }
    case StatKind::kDistinctDirected: out = track(pair_rank(s, 1, v())); break;
    case StatKind::kDistinctUndirected: out = track(undirected_pairs_->rank(s, v())); break;
    case StatKind::kReciprocatedDyads:
    case StatKind::kReciprocity: {
      const std::int64_t directed = track(pair_rank(s, 1, v()));
      const std::int64_t undirected = track(undirected_pairs_->rank(s, v()));
      out = key.kind == StatKind::kReciprocatedDyads ? StatValue{directed - undirected}
                                                     : ratio(directed - undirected, undirected);
      break;
    }
    case StatKind::kNeighborsAtMost: out = track(neighbors_at_most(s, key.a, key.b, v())); break;
    case StatKind::kNeighborsExact: out = track(neighbors_exact(s, key.a, key.b, v())); break;
    case StatKind::kNeighborsTotal: {
      std::int64_t total = 0;
      for (std::int64_t r = 0; r <= key.a; ++r) total += track(neighbors_exact(s, r, key.a - r, v()));
      out = total;
      break;
    }
    case StatKind::kIsolatedEdges: out = track(neighbors_at_most(s, 0, 0, v())); break;
    case StatKind::kInfluenced: out = track(influence_->stab(s.i, s.j, v())); break;
    case StatKind::kInfluencedWithSources:
      out = track(influence_->stab(s.i, s.j, v())) + track(influential_touch_->rank(s, v()));
      break;
    case StatKind::kInfluencedHops: out = track(influence_hops_.at(key.a).stab(s.i, s.j, v())); break;
    case StatKind::kTriadClosures: out = track(triads_->count_late(s.i, s.j, v())); break;
  }
  if (visited != nullptr) *visited = total_visited;
  return out;
}

namespace {

void save_rank_map(ByteWriter& out, const std::map<std::int64_t, RankIndex>& indexes) {
  out.u64(indexes.size());
  for (const auto& [k, index] : indexes) {
    out.i64(k);
    index.save(out);
  }
}

std::map<std::int64_t, RankIndex> load_rank_map(ByteReader& in) {
  std::map<std::int64_t, RankIndex> out;
  const auto count = in.u64();
  if (count > in.remaining()) throw FormatError("corrupt index map");
  for (std::uint64_t c = 0; c < count; ++c) {
    const auto k = in.i64();
    out.emplace(k, RankIndex::load(in));
  }
  return out;
}

template <typename T>
void save_optional(ByteWriter& out, const std::optional<T>& value) {
  out.u8(value ? 1 : 0);
  if (value) value->save(out);
}

template <typename T>
std::optional<T> load_optional(ByteReader& in) {
  const auto flag = in.u8();
  if (flag > 1) throw FormatError("corrupt presence flag");
  if (flag == 0) return std::nullopt;
  return T::load(in);
}

}  // namespace

void SliceEngine::save(ByteWriter& out) const {
  out.str(config_.to_json());
  out.u64(vertices_);
  out.u8(directed_ ? 1 : 0);
  out.f64_array(timestamps_);
  out.u64(influential_names_.size());
  for (const auto& name : influential_names_) out.str(name);

  graphic_.save(out);
  bicycle_.save(out);
  save_rank_map(out, degree_ranks_);
  save_rank_map(out, pair_ranks_);
  save_optional(out, undirected_pairs_);
  out.u64(neighbor_at_most_.size());
  for (const auto& [rs, index] : neighbor_at_most_) {
    out.i64(rs.first);
    out.i64(rs.second);
    index.save(out);
  }
  save_optional(out, influence_);
  out.u64(influence_hops_.size());
  for (const auto& [h, index] : influence_hops_) {
    out.i64(h);
    index.save(out);
  }
  save_optional(out, influential_touch_);
  save_optional(out, triads_);
}

SliceEngine SliceEngine::load(ByteReader& in) {
  SliceEngine engine;
  engine.config_ = EngineConfig::from_json(in.str());
  engine.vertices_ = static_cast<std::size_t>(in.u64());
  engine.directed_ = in.u8() != 0;
  engine.timestamps_ = in.f64_array();
  const auto names = in.u64();
  if (names > in.remaining()) throw FormatError("corrupt influential list");
  for (std::uint64_t k = 0; k < names; ++k) engine.influential_names_.push_back(in.str());

  engine.graphic_ = RankIndex::load(in);
  engine.bicycle_ = RankIndex::load(in);
  engine.degree_ranks_ = load_rank_map(in);
  engine.pair_ranks_ = load_rank_map(in);
  engine.undirected_pairs_ = load_optional<RankIndex>(in);
  const auto neighbor_count = in.u64();
  if (neighbor_count > in.remaining()) throw FormatError("corrupt neighbor index map");
  for (std::uint64_t c = 0; c < neighbor_count; ++c) {
    const auto r = in.i64();
    const auto s = in.i64();
    engine.neighbor_at_most_.emplace(std::pair{r, s}, StabbingIndex::load(in));
  }
  engine.influence_ = load_optional<StabbingIndex>(in);
  const auto hop_count = in.u64();
  if (hop_count > in.remaining()) throw FormatError("corrupt hop index map");
  for (std::uint64_t c = 0; c < hop_count; ++c) {
    const auto h = in.i64();
    engine.influence_hops_.emplace(h, StabbingIndex::load(in));
  }
  engine.influential_touch_ = load_optional<RankIndex>(in);
  engine.triads_ = load_optional<RankIndex>(in);

  // The query paths index these maps directly, so the registered parameters
  // must all be backed by an index.
  const auto m = static_cast<std::int64_t>(engine.timestamps_.size());
  auto check_rank = [&](const RankIndex& index) {
    const std::int64_t expected = index.space() == ElementSpace::kEdge ? m : 2 * m;
    if (index.element_count() != expected) throw FormatError("index does not match the edge count");
  };
  check_rank(engine.graphic_);
  check_rank(engine.bicycle_);
  if (!engine.degree_ranks_.contains(1) || !engine.pair_ranks_.contains(1)) throw FormatError("missing base indexes");
  for (const auto& [k, index] : engine.degree_ranks_) check_rank(index);
  for (const auto& [k, index] : engine.pair_ranks_) check_rank(index);
  for (auto d : engine.config_.degrees) {
    for (auto k : {d - 1, d, d + 1}) {
      if (k >= 1 && !engine.degree_ranks_.contains(k)) throw FormatError("missing degree index");
    }
  }
  for (auto mu : engine.config_.multiplicities) {
    for (std::int64_t k = 1; k <= mu + 2; ++k) {
      if (!engine.pair_ranks_.contains(k)) throw FormatError("missing multiplicity index");
    }
  }
  if (engine.directed_ != engine.undirected_pairs_.has_value()) throw FormatError("reciprocity index mismatch");
  if (engine.influence_.has_value() != engine.influential_touch_.has_value()) throw FormatError("influence index mismatch");
  for (auto h : engine.config_.hop_bounds) {
    if (!engine.influence_hops_.contains(h)) throw FormatError("missing hop index");
  }
  if (engine.triads_.has_value() != engine.config_.triads) throw FormatError("triad index mismatch");
  engine.collect_stats();
  return engine;
}

}  // namespace evslice
