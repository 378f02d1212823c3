#include <gtest/gtest.h>

#include "evslice/zeroless.hpp"

using namespace evslice;

TEST(Zeroless, TwentyFour) {
  const auto shape = zeroless_digits(24);
  EXPECT_EQ(shape.digits, (std::vector<std::uint8_t>{2, 1, 1, 2}));
  EXPECT_EQ(shape.value(), 24u);
}

TEST(Zeroless, SmallValues) {
  EXPECT_EQ(zeroless_digits(1).digits, (std::vector<std::uint8_t>{1}));
  EXPECT_EQ(zeroless_digits(2).digits, (std::vector<std::uint8_t>{2}));
  EXPECT_EQ(zeroless_digits(7).digits, (std::vector<std::uint8_t>{1, 1, 1}));
  EXPECT_THROW(zeroless_digits(0), std::invalid_argument);
}

TEST(Zeroless, SevenIsTheOnlyShortRepresentation) {
  // Enumerate every {1,2} digit string of length <= 3 and count those worth 7.
  int hits = 0;
  for (int len = 1; len <= 3; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::uint64_t value = 0;
      for (int i = 0; i < len; ++i) value += static_cast<std::uint64_t>(((mask >> i) & 1) + 1) << i;
      if (value == 7) ++hits;
    }
  }
  EXPECT_EQ(hits, 1);
}

TEST(Zeroless, IncrementMatchesDirectConversion) {
  ZerolessShape shape = zeroless_digits(1);
  for (std::uint64_t x = 1; x < 5000; ++x) {
    ASSERT_EQ(shape, zeroless_digits(x)) << x;
    for (auto d : shape.digits) ASSERT_TRUE(d == 1 || d == 2);
    shape = zeroless_increment(shape);
  }
}

TEST(Zeroless, BlockLeaves) {
  const auto shape = zeroless_digits(24);
  EXPECT_EQ(shape.block_leaves(0), 2u);
  EXPECT_EQ(shape.block_leaves(1), 2u);
  EXPECT_EQ(shape.block_leaves(2), 4u);
  EXPECT_EQ(shape.block_leaves(3), 16u);
}
