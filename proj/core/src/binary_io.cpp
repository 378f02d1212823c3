#include "evslice/binary_io.hpp"

#include <bit>
#include <cstring>

namespace evslice {

void ByteWriter::u32(std::uint32_t v) {
  for (int b = 0; b < 4; ++b) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
}

void ByteWriter::u64(std::uint64_t v) {
  for (int b = 0; b < 8; ++b) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
}

void ByteWriter::f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

void ByteWriter::str(std::string_view s) {
  u64(s.size());
  bytes_.insert(bytes_.end(), s.begin(), s.end());
}

void ByteWriter::i64_array(std::span<const std::int64_t> values) {
  u64(values.size());
  for (auto v : values) i64(v);
}

void ByteWriter::u32_array(std::span<const std::uint32_t> values) {
  u64(values.size());
  for (auto v : values) u32(v);
}

void ByteWriter::f64_array(std::span<const double> values) {
  u64(values.size());
  for (auto v : values) f64(v);
}

void ByteReader::need(std::size_t n) const {
  if (n > remaining()) throw FormatError("unexpected end of index data");
}

std::uint8_t ByteReader::u8() {
  need(1);
  return data_[pos_++];
}

std::uint32_t ByteReader::u32() {
  need(4);
  std::uint32_t v = 0;
  for (int b = 0; b < 4; ++b) v |= std::uint32_t{data_[pos_ + b]} << (8 * b);
  pos_ += 4;
  return v;
}

std::uint64_t ByteReader::u64() {
  need(8);
  std::uint64_t v = 0;
  for (int b = 0; b < 8; ++b) v |= std::uint64_t{data_[pos_ + b]} << (8 * b);
  pos_ += 8;
  return v;
}

double ByteReader::f64() { return std::bit_cast<double>(u64()); }

std::string ByteReader::str() {
  const std::size_t n = array_length(1);
  auto bytes = raw(n);
  return std::string(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

std::span<const std::uint8_t> ByteReader::raw(std::size_t n) {
  need(n);
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::size_t ByteReader::array_length(std::size_t element_size) {
  const std::uint64_t n = u64();
  if (n > remaining() / element_size) throw FormatError("array length exceeds index data");
  return static_cast<std::size_t>(n);
}

std::vector<std::int64_t> ByteReader::i64_array() {
  std::vector<std::int64_t> out(array_length(8));
  for (auto& v : out) v = i64();
  return out;
}

std::vector<std::uint32_t> ByteReader::u32_array() {
  std::vector<std::uint32_t> out(array_length(4));
  for (auto& v : out) v = u32();
  return out;
}

std::vector<double> ByteReader::f64_array() {
  std::vector<double> out(array_length(8));
  for (auto& v : out) v = f64();
  return out;
}

std::uint64_t fnv1a64(std::span<const std::uint8_t> data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto byte : data) {
    h ^= byte;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace evslice
