#include <gtest/gtest.h>

#include <random>

#include "gf3/errors.hpp"
#include "gf3/trit_vector.hpp"

using gf3::TritVector;

TEST(TritVector, ParseAndPrintRoundTrip) {
  const auto v = TritVector::parse("2100120");
  EXPECT_EQ(v.size(), 7u);
  EXPECT_EQ(v.to_string(), "2100120");
  EXPECT_EQ(v.get(0), 2);
  EXPECT_EQ(v.get(1), 1);
  EXPECT_EQ(v.get(5), 2);
  EXPECT_EQ(v.degree(), 5);
  EXPECT_EQ(v.weight(), 4u);
  EXPECT_TRUE(v.well_formed());
}

TEST(TritVector, ZeroVector) {
  const auto z = TritVector::parse("000");
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), -1);
  EXPECT_EQ(z.weight(), 0u);
}

TEST(TritVector, RejectsBadCharacters) {
  try {
    TritVector::parse("0130");
    FAIL() << "expected ParseError";
  } catch (const gf3::Error& e) {
    EXPECT_EQ(e.code(), gf3::ErrorCode::kParseError);
  }
}

TEST(TritVector, SetOverwritesBothPlanes) {
  TritVector v(10);
  for (std::uint8_t t : {1, 2, 0, 2, 1}) {
    v.set(3, t);
    EXPECT_EQ(v.get(3), t);
    EXPECT_TRUE(v.well_formed());
  }
}

TEST(TritVector, NegationMapsEachDigit) {
  const auto v = TritVector::parse("0121");
  EXPECT_EQ(v.negated().to_string(), "0212");
}

TEST(TritVector, WordAddMatchesDigitwiseSum) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + rng() % gf3::kMaxTrits;
    std::vector<std::uint8_t> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<std::uint8_t>(rng() % 3);
      b[i] = static_cast<std::uint8_t>(rng() % 3);
    }
    auto x = TritVector::from_digits(a);
    const auto y = TritVector::from_digits(b);
    for (std::size_t w = 0; w < gf3::kTritWords; ++w) {
      gf3::words::add(x.lo()[w], x.hi()[w], y.lo()[w], y.hi()[w], x.lo()[w], x.hi()[w]);
    }
    ASSERT_TRUE(x.well_formed());
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(x.get(i), (a[i] + b[i]) % 3) << "position " << i;
  }
}
