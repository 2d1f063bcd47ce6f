#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gf3/trit_words.hpp"

namespace gf3 {

inline constexpr std::size_t kTritWords = 4;
inline constexpr std::size_t kMaxTrits = kTritWords * words::kBits;

/// Fixed-capacity vector of base-3 digits stored as two bit-planes.
/// Positions at or beyond size() are always zero in both planes, so the
/// defaulted equality is coefficient equality.
class TritVector {
 public:
  using Planes = std::array<words::Word, kTritWords>;

  TritVector() = default;
  explicit TritVector(std::size_t len);

  static TritVector from_digits(std::span<const std::uint8_t> digits);
  /// Parses "210" (least-significant first). Throws kParseError.
  static TritVector parse(std::string_view text);

  std::size_t size() const { return len_; }
  std::uint8_t get(std::size_t i) const;
  void set(std::size_t i, std::uint8_t trit);

  /// Index of the highest nonzero trit, or -1 for the zero vector.
  int degree() const;
  bool is_zero() const;
  std::size_t weight() const;

  std::string to_string() const;
  std::vector<std::uint8_t> digits() const;

  TritVector negated() const;

  /// Checks the (1,1)-free and zero-tail invariants.
  bool well_formed() const;

  const Planes& lo() const { return lo_; }
  const Planes& hi() const { return hi_; }
  Planes& lo() { return lo_; }
  Planes& hi() { return hi_; }

  friend bool operator==(const TritVector&, const TritVector&) = default;

 private:
  Planes lo_{};
  Planes hi_{};
  std::uint32_t len_ = 0;
};

}  // namespace gf3
