#include "evslice_tools/service.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

#include <httplib.h>
#include <json.hpp>

namespace evslice {
namespace {

using nlohmann::json;

struct BadRequest : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t int_param(const std::map<std::string, std::string>& params, const std::string& name,
                       std::optional<std::int64_t> fallback = std::nullopt) {
  const auto it = params.find(name);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw BadRequest("missing parameter '" + name + "'");
  }
  std::int64_t value = 0;
  const auto& text = it->second;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw BadRequest("parameter '" + name + "' must be an integer");
  }
  return value;
}

double double_param(const std::map<std::string, std::string>& params, const std::string& name) {
  const auto it = params.find(name);
  if (it == params.end()) throw BadRequest("missing parameter '" + name + "'");
  double value = 0;
  const auto& text = it->second;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw BadRequest("parameter '" + name + "' must be a number");
  }
  return value;
}

json to_json(const StatValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  return std::get<double>(v);
}

std::vector<std::pair<std::string, StatKey>> requested_keys(const SliceEngine& engine,
                                                            const std::map<std::string, std::string>& params) {
  std::vector<std::string> names;
  if (auto it = params.find("keys"); it != params.end() && !it->second.empty()) {
    names = split_key_list(it->second);
  } else {
    names = engine.available_keys();
  }
  std::vector<std::pair<std::string, StatKey>> keys;
  for (const auto& name : names) {
    StatKey key;
    try {
      key = parse_stat_key(name);
    } catch (const std::invalid_argument& e) {
      throw BadRequest(e.what());
    }
    if (!engine.supports(key)) throw BadRequest("statistic '" + name + "' is not available in this index");
    keys.emplace_back(name, key);
  }
  return keys;
}

json stats_object(const SliceEngine& engine, Slice s, const std::vector<std::pair<std::string, StatKey>>& keys) {
  json out = json::object();
  for (const auto& [name, key] : keys) out[name] = to_json(engine.query(s, key));
  return out;
}

Slice checked_slice(const SliceEngine& engine, std::int64_t i, std::int64_t j) {
  const auto m = static_cast<std::int64_t>(engine.edge_count());
  if (i < 0 || i > j || j >= m) {
    throw BadRequest("window [" + std::to_string(i) + "," + std::to_string(j) + "] outside [0," +
                     std::to_string(m - 1) + "]");
  }
  return Slice{i, j};
}

}  // namespace

QueryService::QueryService(std::shared_ptr<const SliceEngine> engine) : engine_(std::move(engine)) {
  if (!engine_) throw std::invalid_argument("query service needs an engine");
}

HttpResponse QueryService::handle(std::string_view path, const std::map<std::string, std::string>& params) const {
  const SliceEngine& engine = *engine_;
  try {
    if (path == "/meta") {
      json j;
      j["n"] = engine.vertex_count();
      j["m"] = engine.edge_count();
      j["directed"] = engine.directed();
      j["keys"] = engine.available_keys();
      const auto [t0, t1] = engine.time_range();
      j["time_range"] = {t0, t1};
      j["influential"] = engine.influential_names();
      return {200, j.dump()};
    }
    if (path == "/stats") {
      const Slice s = checked_slice(engine, int_param(params, "i"), int_param(params, "j"));
      return {200, stats_object(engine, s, requested_keys(engine, params)).dump()};
    }
    if (path == "/sweep") {
      const auto m = static_cast<std::int64_t>(engine.edge_count());
      const std::int64_t width = int_param(params, "width");
      const std::int64_t step = int_param(params, "step", 1);
      if (width < 1 || width > m) throw BadRequest("width must be between 1 and " + std::to_string(m));
      if (step < 1) throw BadRequest("step must be at least 1");
      const auto keys = requested_keys(engine, params);
      json out = json::array();
      for (std::int64_t i = 0; i + width <= m; i += step) {
        const Slice s{i, i + width - 1};
        out.push_back({{"i", s.i}, {"j", s.j}, {"stats", stats_object(engine, s, keys)}});
      }
      return {200, out.dump()};
    }
    if (path == "/time_window") {
      const double t0 = double_param(params, "t0");
      const double t1 = double_param(params, "t1");
      json j;
      if (auto w = engine.time_window(t0, t1)) {
        j["window"] = {{"i", w->i}, {"j", w->j}};
      } else {
        j["window"] = nullptr;
      }
      return {200, j.dump()};
    }
    return {404, json{{"error", "unknown path " + std::string(path)}}.dump()};
  } catch (const BadRequest& e) {
    return {400, json{{"error", e.what()}}.dump()};
  } catch (const std::invalid_argument& e) {
    return {400, json{{"error", e.what()}}.dump()};
  } catch (const std::out_of_range& e) {
    return {400, json{{"error", e.what()}}.dump()};
  }
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(const QueryService& service) : impl_(std::make_unique<Impl>()) {
  impl_->server.Get(".*", [&service](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> params;
    for (const auto& [k, v] : req.params) params.emplace(k, v);
    const HttpResponse r = service.handle(req.path, params);
    res.status = r.status;
    res.set_content(r.body, "application/json");
    res.set_header("Access-Control-Allow-Origin", "*");
  });
}

HttpServer::~HttpServer() = default;

bool HttpServer::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

int HttpServer::bind_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace evslice
