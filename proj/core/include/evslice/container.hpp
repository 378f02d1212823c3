#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "evslice/engine.hpp"

namespace evslice {

inline constexpr std::uint32_t kContainerVersion = 1;

// Single-file index: magic "EVSLICE1", format version, a section table
// ("summary" JSON with n, m, directedness and the build configuration;
// "engine" with every serialized index), then an FNV-1a checksum of all
// preceding bytes. Integers are little-endian.
std::vector<std::uint8_t> encode_container(const SliceEngine& engine);

// Throws FormatError on bad magic, version mismatch, checksum failure or
// malformed sections.
SliceEngine decode_container(std::span<const std::uint8_t> bytes);

// JSON summary stored in the container, readable without decoding the indexes.
std::string read_container_summary(std::span<const std::uint8_t> bytes);

void save_index_file(const SliceEngine& engine, const std::filesystem::path& path);
SliceEngine load_index_file(const std::filesystem::path& path);

}  // namespace evslice
