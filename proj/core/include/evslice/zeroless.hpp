#pragma once

#include <cstdint>
#include <vector>

namespace evslice {

// Base-2 numeral whose digits are all 1 or 2, least significant first.
// Digit i stands for a complete subtree of digit * 2^i leaves in the query
// trees of DominanceIndex.
struct ZerolessShape {
  std::vector<std::uint8_t> digits;

  std::uint64_t value() const;
  // Leaf count of the complete block hanging off spine level i.
  std::uint64_t block_leaves(std::size_t i) const { return std::uint64_t{digits[i]} << i; }

  friend bool operator==(const ZerolessShape&, const ZerolessShape&) = default;
};

// Throws std::invalid_argument for x == 0.
ZerolessShape zeroless_digits(std::uint64_t x);

// Representation of value()+1: trailing 2s become 1s and the lowest digit
// that is not a 2 is incremented (a new 1 is appended when all digits are 2).
ZerolessShape zeroless_increment(const ZerolessShape& shape);

}  // namespace evslice
