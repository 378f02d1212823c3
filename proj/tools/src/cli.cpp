#include "evslice_tools/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <memory>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "evslice/container.hpp"
#include "evslice/engine.hpp"
#include "evslice/fuzz.hpp"
#include "evslice/graph.hpp"
#include "evslice_tools/service.hpp"

namespace evslice {
namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("'" + std::string(text) + "' is not an integer");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(sep, start);
    if (end == std::string::npos) end = text.size();
    if (end > start) out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::optional<char> delimiter_from(const std::string& name) {
  if (name.empty() || name == "whitespace") return std::nullopt;
  if (name == "tab") return '\t';
  if (name == "comma") return ',';
  if (name.size() == 1) return name[0];
  throw std::invalid_argument("delimiter must be 'tab', 'comma', 'whitespace' or a single character");
}

nlohmann::json value_json(const StatValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  return std::get<double>(v);
}

}  // namespace

// Like split(), but an empty piece inside a non-empty list is an error.
std::vector<std::string> list_pieces(const std::string& text) {
  auto pieces = split(text, ',');
  if (!text.empty() && std::count(text.begin(), text.end(), ',') + 1 != static_cast<std::ptrdiff_t>(pieces.size())) {
    throw std::invalid_argument("empty entry in list '" + text + "'");
  }
  return pieces;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& piece : list_pieces(text)) out.push_back(parse_int(piece));
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_pair_list(const std::string& text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& piece : list_pieces(text)) {
    const auto colon = piece.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("neighbor pair '" + piece + "' must look like r:s");
    out.emplace_back(parse_int(std::string_view(piece).substr(0, colon)),
                     parse_int(std::string_view(piece).substr(colon + 1)));
  }
  return out;
}

std::pair<std::string, int> parse_bind_address(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0) throw std::invalid_argument("bind address must look like HOST:PORT");
  const auto port = parse_int(std::string_view(text).substr(colon + 1));
  if (port < 0 || port > 65535) throw std::invalid_argument("port out of range");
  return {text.substr(0, colon), static_cast<int>(port)};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time-window statistics over relational event graphs"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "Build and save an index from an event file");
  build->set_help_flag("--help", "Print this help message and exit");  // -h is taken by --h
  std::string input, output, delimiter, degrees = "1", multiplicities, neighbors, hops, influential;
  bool directed = false, skip_header = false, triads = false;
  build->add_option("--input", input, "Event file: timestamp, source, target per line")->required();
  build->add_option("--out", output, "Index file to write")->required();
  build->add_option("--delimiter", delimiter, "tab, comma, whitespace (default) or a single character");
  build->add_flag("--skip-header", skip_header, "Ignore the first non-comment line");
  build->add_flag("--directed", directed, "Treat events as directed edges");
  build->add_option("--degree", degrees, "Degree values d to register, e.g. 0,1,2");
  build->add_option("--multiplicity", multiplicities, "Multiplicity values mu to register, e.g. 1,2");
  build->add_option("--neighbors", neighbors, "Neighbor threshold pairs r:s, e.g. 0:0,1:1");
  build->add_option("--h", hops, "Hop bounds for influenced:h=, e.g. 1,2,3");
  build->add_option("--influential", influential, "Comma-separated influential vertex names");
  build->add_flag("--triads", triads, "Index triad closures");

  // query
  auto* query = app.add_subcommand("query", "Query one window of a saved index");
  std::string index_path, keys;
  std::int64_t from = 0, to = 0;
  bool as_json = false;
  query->add_option("--index", index_path, "Index file")->required();
  query->add_option("--from", from, "First edge index of the window")->required();
  query->add_option("--to", to, "Last edge index of the window (inclusive)")->required();
  query->add_option("--keys", keys, "Comma-separated statistic keys (default: all)");
  query->add_flag("--json", as_json, "Print a JSON object");

  // serve
  auto* serve = app.add_subcommand("serve", "Serve a saved index over HTTP");
  std::string bind = "127.0.0.1:8080";
  serve->add_option("--index", index_path, "Index file")->required();
  serve->add_option("--bind", bind, "HOST:PORT");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Evaluate statistics over all windows of one width");
  std::int64_t width = 1, step = 1;
  sweep->add_option("--index", index_path, "Index file")->required();
  sweep->add_option("--width", width, "Window width")->required();
  sweep->add_option("--step", step, "Distance between window starts");
  sweep->add_option("--keys", keys, "Comma-separated statistic keys (default: all)");

  // fuzz
  auto* fuzz = app.add_subcommand("fuzz", "Compare the indexes with brute force on random graphs");
  FuzzOptions fuzz_options;
  fuzz->add_option("--seed", fuzz_options.seed, "Random seed");
  fuzz->add_option("--graphs", fuzz_options.graphs, "Number of random graphs");
  fuzz->add_option("--max-vertices", fuzz_options.max_vertices, "Largest vertex count");
  fuzz->add_option("--max-edges", fuzz_options.max_edges, "Largest edge count");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  auto key_names = [&](const SliceEngine& engine) {
    std::vector<std::string> names = keys.empty() ? engine.available_keys() : split_key_list(keys);
    for (const auto& name : names) {
      const StatKey key = parse_stat_key(name);
      if (!engine.supports(key)) (void)engine.query(Slice{0, 0}, key);  // throws with the available list
    }
    return names;
  };

  try {
    if (build->parsed()) {
      ParseOptions parse;
      parse.delimiter = delimiter_from(delimiter);
      parse.skip_header = skip_header;
      std::ifstream file(input);
      if (!file) throw std::runtime_error("cannot open " + input);
      const auto events = parse_events(file, parse);

      EngineConfig config;
      config.directed = directed;
      config.degrees = parse_int_list(degrees);
      config.multiplicities = parse_int_list(multiplicities);
      config.neighbor_pairs = parse_pair_list(neighbors);
      config.hop_bounds = parse_int_list(hops);
      config.influential = split(influential, ',');
      config.influence = !config.influential.empty() || !config.hop_bounds.empty();
      config.triads = triads;
      config.validate();

      BuildOptions options;
      options.directed = directed;
      options.influential = config.influential;
      const auto graph = build_graph(events, options);
      const auto engine = SliceEngine::build(graph, config);
      save_index_file(engine, output);

      const auto& stats = engine.build_stats();
      out << "vertices\t" << stats.vertices << "\n";
      out << "edges\t" << stats.edges << "\n";
      for (const auto& index : stats.indexes) out << "nodes[" << index.name << "]\t" << index.nodes << "\n";
      out << "total_nodes\t" << stats.total_nodes << "\n";
      out << "build_seconds\t" << stats.seconds << "\n";
      out << "wrote\t" << output << "\n";
      return 0;
    }

    if (query->parsed()) {
      const auto engine = load_index_file(index_path);
      const Slice s{from, to};
      const auto names = key_names(engine);
      nlohmann::json j = nlohmann::json::object();
      for (const auto& name : names) {
        const StatValue v = engine.query(s, name);
        if (as_json) {
          j[name] = value_json(v);
        } else {
          out << name << "\t" << format_value(v) << "\n";
        }
      }
      if (as_json) out << j.dump() << "\n";
      return 0;
    }

    if (sweep->parsed()) {
      const auto engine = load_index_file(index_path);
      const auto m = static_cast<std::int64_t>(engine.edge_count());
      if (width < 1 || width > m) throw std::invalid_argument("width must be between 1 and " + std::to_string(m));
      if (step < 1) throw std::invalid_argument("step must be at least 1");
      const auto names = key_names(engine);
      out << "i\tj";
      for (const auto& name : names) out << "\t" << name;
      out << "\n";
      std::vector<StatKey> parsed;
      for (const auto& name : names) parsed.push_back(parse_stat_key(name));
      for (std::int64_t i = 0; i + width <= m; i += step) {
        const Slice s{i, i + width - 1};
        out << s.i << "\t" << s.j;
        for (const auto& key : parsed) out << "\t" << format_value(engine.query(s, key));
        out << "\n";
      }
      return 0;
    }

    if (serve->parsed()) {
      auto engine = std::make_shared<const SliceEngine>(load_index_file(index_path));
      const auto [host, port] = parse_bind_address(bind);
      QueryService service(engine);
      HttpServer server(service);
      out << "serving " << index_path << " on " << host << ":" << port << std::endl;
      if (!server.listen(host, port)) throw std::runtime_error("cannot bind " + bind);
      return 0;
    }

    if (fuzz->parsed()) {
      const FuzzReport report = run_fuzz(fuzz_options);
      out << "graphs\t" << report.graphs << "\nslices\t" << report.slices << "\ncomparisons\t"
          << report.comparisons << "\nmismatches\t" << report.mismatches << "\n";
      for (const auto& e : report.examples) out << "mismatch\t" << e << "\n";
      return report.mismatches == 0 ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "error: " << input << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace evslice
