#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace evslice {

// "1,2,3" -> {1, 2, 3}. Throws std::invalid_argument on malformed input.
std::vector<std::int64_t> parse_int_list(const std::string& text);
// "0:0,1:2" -> {(0,0), (1,2)}.
std::vector<std::pair<std::int64_t, std::int64_t>> parse_pair_list(const std::string& text);
// "127.0.0.1:8080" -> ("127.0.0.1", 8080).
std::pair<std::string, int> parse_bind_address(const std::string& text);

// Entry point of the evslice command; args excludes the program name.
// Subcommands: build, query, serve, sweep, fuzz. Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evslice
