#pragma once

// Word-parallel arithmetic on trits packed into two bit-planes.
// A trit t at position i is (hi_i, lo_i) with 0 -> (0,0), 1 -> (0,1), 2 -> (1,0).

#include <cstddef>
#include <cstdint>

namespace gf3::words {

using Word = std::uint64_t;
inline constexpr std::size_t kBits = 64;

// z = x + y, seven boolean operations.
inline void add(Word x_lo, Word x_hi, Word y_lo, Word y_hi, Word& z_lo, Word& z_hi) {
  const Word t = (x_lo | y_hi) ^ (x_hi | y_lo);
  z_lo = (x_hi | y_hi) ^ t;
  z_hi = (x_lo | y_lo) ^ t;
}

// z = x - y: negation swaps the planes.
inline void sub(Word x_lo, Word x_hi, Word y_lo, Word y_hi, Word& z_lo, Word& z_hi) {
  add(x_lo, x_hi, y_hi, y_lo, z_lo, z_hi);
}

// acc[0..n) += y[0..n)
inline void add_into(Word* acc_lo, Word* acc_hi, const Word* y_lo, const Word* y_hi, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) add(acc_lo[i], acc_hi[i], y_lo[i], y_hi[i], acc_lo[i], acc_hi[i]);
}

inline void sub_into(Word* acc_lo, Word* acc_hi, const Word* y_lo, const Word* y_hi, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) sub(acc_lo[i], acc_hi[i], y_lo[i], y_hi[i], acc_lo[i], acc_hi[i]);
}

inline std::size_t words_for(std::size_t trits) { return (trits + kBits - 1) / kBits; }

inline Word low_mask(std::size_t bits) { return bits >= kBits ? ~Word{0} : ((Word{1} << bits) - 1); }

}  // namespace gf3::words
