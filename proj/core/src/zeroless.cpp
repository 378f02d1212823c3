#include "evslice/zeroless.hpp"

#include <stdexcept>

namespace evslice {

std::uint64_t ZerolessShape::value() const {
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) x += block_leaves(i);
  return x;
}

ZerolessShape zeroless_digits(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("zeroless representation needs a positive integer");
  ZerolessShape shape;
  while (x != 0) {
    const std::uint8_t digit = (x & 1) ? 1 : 2;
    shape.digits.push_back(digit);
    x = (x - digit) >> 1;
  }
  return shape;
}

ZerolessShape zeroless_increment(const ZerolessShape& shape) {
  ZerolessShape next = shape;
  std::size_t i = 0;
  while (i < next.digits.size() && next.digits[i] == 2) next.digits[i++] = 1;
  if (i == next.digits.size()) {
    next.digits.push_back(1);
  } else {
    next.digits[i] = 2;
  }
  return next;
}

}  // namespace evslice
