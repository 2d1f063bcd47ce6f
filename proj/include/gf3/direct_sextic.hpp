#pragma once

// F_{3^{6m}} represented directly as F_{3^m}[y]/(y^6 + y - 1).
//
// y^6 + y - 1 is irreducible over F_3; it stays irreducible over F_{3^m}
// exactly when gcd(m, 6) = 1. Its roots lie in F_{3^6}, which sits inside the
// tower with all coordinates in F_3, so the change of basis between the two
// representations is a fixed 6x6 matrix over F_3 and costs only additions.

#include <array>
#include <cstdint>

#include "gf3/sextic.hpp"

namespace gf3 {

/// Coefficients of 1, y, ..., y^5.
struct DirectSexticElem {
  std::array<Gf3mElem, 6> c;

  friend bool operator==(const DirectSexticElem&, const DirectSexticElem&) = default;
};

using F3Matrix6 = std::array<std::array<std::uint8_t, 6>, 6>;

/// Change of basis between tower coordinates and powers of a root rho of
/// y^6 + y - 1. Independent of m.
struct DirectSexticBasis {
  /// rho in tower coordinates (v0, u0, v1, u1, v2, u2) over F_3.
  std::array<std::uint8_t, 6> rho;
  /// Column j holds the tower coordinates of rho^j.
  F3Matrix6 to_tower;
  F3Matrix6 from_tower;

  static const DirectSexticBasis& get();
};

/// Throws kUnsupportedDegree when 3 divides m.
void require_direct_sextic_support(const FieldContext& ctx);

DirectSexticElem to_direct(const SexticElem& a);
DirectSexticElem to_direct(const SexticElem& a, OpCounter& counter);
SexticElem from_direct(const DirectSexticElem& a);
SexticElem from_direct(const DirectSexticElem& a, OpCounter& counter);

/// Three-way block Karatsuba over two-coefficient Karatsuba blocks
/// (6 x 3 = 18 base multiplications), then reduction by y^6 = 1 - y.
DirectSexticElem mul_direct(const DirectSexticElem& a, const DirectSexticElem& b, OpCounter& counter);

}  // namespace gf3
