#pragma once

// F_{3^{6m}} = F_{3^{2m}}[z]/(z^3 - z - 1). An element is A0 + A1 r + A2 r^2
// with r the class of z.

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gf3/quadext.hpp"

namespace gf3 {

struct SexticElem {
  QuadElem a0;
  QuadElem a1;
  QuadElem a2;

  const FieldContext* context() const { return a0.context(); }
  bool is_zero() const { return a0.is_zero() && a1.is_zero() && a2.is_zero(); }

  /// The six F_{3^m} coordinates (v0, u0, v1, u1, v2, u2), i.e. the
  /// coefficients of 1, s, r, rs, r^2, r^2 s.
  std::array<Gf3mElem, 6> coords() const { return {a0.v, a0.u, a1.v, a1.u, a2.v, a2.u}; }
  static SexticElem from_coords(const std::array<Gf3mElem, 6>& c) {
    return {{c[0], c[1]}, {c[2], c[3]}, {c[4], c[5]}};
  }

  /// Six trit strings joined with '|', in coords() order.
  std::string to_string() const;

  friend bool operator==(const SexticElem&, const SexticElem&) = default;
};

/// Coefficients c0..c4 of a product of two degree-2 polynomials in z.
struct UnreducedProduct {
  std::array<QuadElem, 5> c;

  friend bool operator==(const UnreducedProduct&, const UnreducedProduct&) = default;
};

enum class Strategy { kOracle36, kKara18, kInterpMatrix, kInterpFlat, kDirectSextic };

inline constexpr std::array<Strategy, 5> kAllStrategies = {
    Strategy::kOracle36, Strategy::kKara18, Strategy::kInterpMatrix, Strategy::kInterpFlat, Strategy::kDirectSextic};

std::string_view to_string(Strategy s);
/// Accepts the CLI names: oracle36, kara18, interp-matrix, interp-flat, direct-sextic.
Strategy parse_strategy(std::string_view name);
/// Base-field multiplications charged by one product under strategy s.
std::uint64_t expected_base_muls(Strategy s);

SexticElem sextic_zero(const FieldContext& ctx);
SexticElem sextic_one(const FieldContext& ctx);
/// The generator r of F_{3^{6m}} over F_{3^{2m}}.
SexticElem sextic_r(const FieldContext& ctx);
SexticElem sextic_parse(const FieldContext& ctx, std::string_view text);
SexticElem sextic_random(const FieldContext& ctx, std::mt19937_64& rng);

SexticElem sextic_add(const SexticElem& a, const SexticElem& b);
SexticElem sextic_sub(const SexticElem& a, const SexticElem& b);
SexticElem sextic_neg(const SexticElem& a);

/// All nine cross products, 27 base multiplications.
UnreducedProduct unreduced_schoolbook(const SexticElem& a, const SexticElem& b, OpCounter& counter);
/// Six-product Karatsuba for degree-2 polynomials, 18 base multiplications.
UnreducedProduct unreduced_karatsuba(const SexticElem& a, const SexticElem& b, OpCounter& counter);
/// Evaluation at (1, s, -1, -s) through the factored DFT, pointwise
/// products, leading-coefficient product, factored inverse DFT.
/// 15 base multiplications.
UnreducedProduct unreduced_interp_matrix(const SexticElem& a, const SexticElem& b, OpCounter& counter);

/// (c0 + c3) + (c1 + c3 + c4) r + (c2 + c4) r^2.
SexticElem reduce_unreduced(const UnreducedProduct& u);
SexticElem reduce_unreduced(const UnreducedProduct& u, OpCounter& counter);

SexticElem mul_oracle36(const SexticElem& a, const SexticElem& b, OpCounter& counter);
SexticElem mul_kara18(const SexticElem& a, const SexticElem& b, OpCounter& counter);
SexticElem mul_interp_matrix(const SexticElem& a, const SexticElem& b, OpCounter& counter);
/// Fifteen products of F_3-linear combinations of the coordinates, then six
/// linear combinations of the products. See docs/flat-formulas.md.
SexticElem mul_interp_flat(const SexticElem& a, const SexticElem& b, OpCounter& counter);
/// Product through F_{3^m}[y]/(y^6 + y - 1); see direct_sextic.hpp.
SexticElem mul_direct_sextic(const SexticElem& a, const SexticElem& b, OpCounter& counter);

SexticElem mul(const SexticElem& a, const SexticElem& b, Strategy strategy, OpCounter& counter);

SexticElem sextic_pow(const SexticElem& a, std::uint64_t e, Strategy strategy = Strategy::kInterpFlat);

}  // namespace gf3
