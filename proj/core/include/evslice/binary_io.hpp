#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace evslice {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Little-endian byte sink used by the index container.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { bytes_.push_back(v); }
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
  void f64(double v);
  void str(std::string_view s);
  void raw(std::span<const std::uint8_t> data) { bytes_.insert(bytes_.end(), data.begin(), data.end()); }

  void i64_array(std::span<const std::int64_t> values);
  void u32_array(std::span<const std::uint32_t> values);
  void f64_array(std::span<const double> values);

  std::size_t size() const { return bytes_.size(); }
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::vector<std::uint8_t> take() && { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  double f64();
  std::string str();
  std::span<const std::uint8_t> raw(std::size_t n);

  std::vector<std::int64_t> i64_array();
  std::vector<std::uint32_t> u32_array();
  std::vector<double> f64_array();

  std::size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return pos_ == data_.size(); }

 private:
  void need(std::size_t n) const;
  // Guards length prefixes against truncated or corrupt input.
  std::size_t array_length(std::size_t element_size);

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

std::uint64_t fnv1a64(std::span<const std::uint8_t> data);

}  // namespace evslice
