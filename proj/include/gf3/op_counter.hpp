#pragma once

#include <cstdint>

namespace gf3 {

/// Tally of F_{3^m} operations charged to one top-level multiplication.
/// Passed explicitly; never shared between threads while live.
struct OpCounter {
  std::uint64_t base_muls = 0;
  std::uint64_t base_adds = 0;
  std::uint64_t scalar_ops = 0;

  void reset() { *this = OpCounter{}; }

  OpCounter& operator+=(const OpCounter& o) {
    base_muls += o.base_muls;
    base_adds += o.base_adds;
    scalar_ops += o.scalar_ops;
    return *this;
  }

  friend OpCounter operator-(const OpCounter& a, const OpCounter& b) {
    return {a.base_muls - b.base_muls, a.base_adds - b.base_adds, a.scalar_ops - b.scalar_ops};
  }

  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

}  // namespace gf3
