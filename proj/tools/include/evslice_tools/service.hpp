#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "evslice/engine.hpp"

namespace evslice {

struct HttpResponse {
  int status = 200;
  std::string body;  // JSON
};

// Read-only HTTP/JSON front end over a built engine. handle() is pure and
// thread-safe, so the server can answer requests concurrently.
//   GET /meta                        n, m, directedness, keys, time range, influential
//   GET /stats?i=&j=&keys=           {"key": value, ...}
//   GET /sweep?width=&step=&keys=    [{"i":..,"j":..,"stats":{..}}, ...]
//   GET /time_window?t0=&t1=         {"window": {"i":..,"j":..}} or {"window": null}
class QueryService {
 public:
  explicit QueryService(std::shared_ptr<const SliceEngine> engine);

  HttpResponse handle(std::string_view path, const std::map<std::string, std::string>& params) const;

  const SliceEngine& engine() const { return *engine_; }

 private:
  std::shared_ptr<const SliceEngine> engine_;
};

// cpp-httplib server routing every GET to QueryService::handle.
class HttpServer {
 public:
  explicit HttpServer(const QueryService& service);
  ~HttpServer();

  // Binds and serves until stop(). Returns false if the address cannot be bound.
  bool listen(const std::string& host, int port);
  // Binds to an ephemeral port and returns it, or -1.
  int bind_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace evslice
