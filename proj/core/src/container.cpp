#include "evslice/container.hpp"

#include <cstring>
#include <fstream>
#include <iterator>
#include <map>

#include <json.hpp>

namespace evslice {
namespace {

constexpr char kMagic[8] = {'E', 'V', 'S', 'L', 'I', 'C', 'E', '1'};

std::string summary_json(const SliceEngine& engine) {
  nlohmann::json j;
  j["vertices"] = engine.vertex_count();
  j["edges"] = engine.edge_count();
  j["directed"] = engine.directed();
  j["config"] = nlohmann::json::parse(engine.config().to_json());
  return j.dump();
}

// Validates framing and checksum, returning the named section payloads.
std::map<std::string, std::span<const std::uint8_t>> read_sections(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < sizeof kMagic + 4 + 8 || std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0) {
    throw FormatError("not an evslice index file");
  }
  const auto body = bytes.first(bytes.size() - 8);
  ByteReader tail(bytes.last(8));
  if (tail.u64() != fnv1a64(body)) throw FormatError("index file checksum mismatch");

  ByteReader in(body);
  in.raw(sizeof kMagic);
  const auto version = in.u32();
  if (version != kContainerVersion) {
    throw FormatError("unsupported index format version " + std::to_string(version) + " (expected " +
                      std::to_string(kContainerVersion) + ")");
  }
  const auto count = in.u32();
  struct Entry {
    std::string name;
    std::uint64_t offset, length;
  };
  std::vector<Entry> entries;
  for (std::uint32_t s = 0; s < count; ++s) {
    Entry e;
    e.name = in.str();
    e.offset = in.u64();
    e.length = in.u64();
    entries.push_back(std::move(e));
  }
  const std::size_t payload_start = body.size() - in.remaining();
  std::map<std::string, std::span<const std::uint8_t>> sections;
  for (const auto& e : entries) {
    if (e.offset > in.remaining() || e.length > in.remaining() - e.offset) {
      throw FormatError("section '" + e.name + "' exceeds the file");
    }
    sections[e.name] = body.subspan(payload_start + e.offset, e.length);
  }
  return sections;
}

}  // namespace

std::vector<std::uint8_t> encode_container(const SliceEngine& engine) {
  ByteWriter summary;
  summary.str(summary_json(engine));
  ByteWriter payload;
  engine.save(payload);

  ByteWriter out;
  out.raw(std::span(reinterpret_cast<const std::uint8_t*>(kMagic), sizeof kMagic));
  out.u32(kContainerVersion);
  out.u32(2);
  out.str("summary");
  out.u64(0);
  out.u64(summary.size());
  out.str("engine");
  out.u64(summary.size());
  out.u64(payload.size());
  out.raw(summary.bytes());
  out.raw(payload.bytes());
  const std::uint64_t checksum = fnv1a64(out.bytes());
  out.u64(checksum);
  return std::move(out).take();
}

SliceEngine decode_container(std::span<const std::uint8_t> bytes) {
  const auto sections = read_sections(bytes);
  const auto it = sections.find("engine");
  if (it == sections.end()) throw FormatError("index file has no engine section");
  ByteReader in(it->second);
  SliceEngine engine = SliceEngine::load(in);
  if (!in.done()) throw FormatError("trailing bytes after engine section");
  return engine;
}

std::string read_container_summary(std::span<const std::uint8_t> bytes) {
  const auto sections = read_sections(bytes);
  const auto it = sections.find("summary");
  if (it == sections.end()) throw FormatError("index file has no summary section");
  ByteReader in(it->second);
  return in.str();
}

void save_index_file(const SliceEngine& engine, const std::filesystem::path& path) {
  const auto bytes = encode_container(engine);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

SliceEngine load_index_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open index file " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_container(bytes);
}

}  // namespace evslice
