#pragma once

// Flat 15-multiplication formulas for F_{3^{6m}}: every base product is
// (F_3-linear form in a_0..a_5) * (same form in b_0..b_5), and each output
// coordinate c_0..c_5 is an F_3-linear combination of the products.
// Coordinates follow SexticElem::coords(): a = a_0 + a_1 s + a_2 r + a_3 rs
// + a_4 r^2 + a_5 r^2 s.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gf3/sextic.hpp"

namespace gf3 {

inline constexpr std::size_t kFlatInputs = 6;
inline constexpr std::size_t kFlatProducts = 15;
inline constexpr std::size_t kFlatOutputs = 6;

/// Coefficients in {-1, 0, 1}.
using InputForm = std::array<std::int8_t, kFlatInputs>;
using OutputForm = std::array<std::int8_t, kFlatProducts>;

struct FlatProduct {
  InputForm a;
  InputForm b;

  friend bool operator==(const FlatProduct&, const FlatProduct&) = default;
};

struct FlatFormulaSet {
  std::array<FlatProduct, kFlatProducts> products;
  std::array<OutputForm, kFlatOutputs> outputs;

  friend bool operator==(const FlatFormulaSet&, const FlatFormulaSet&) = default;
};

/// Runs the interp-matrix pipeline (factored evaluation at 1, s, -1, -s and
/// infinity, three-product F_{3^{2m}} multiplication, factored inverse DFT,
/// reduction by z^3 - z - 1) on symbolic linear forms and reads off the
/// resulting product factors and output combinations.
FlatFormulaSet derive_flat_formulas();

/// Literal transcription of an earlier hand-written 15-product listing, including its
/// sign error in the first factor of P_9. Kept as a test fixture and for
/// the emit-formulas diff; never used for arithmetic.
FlatFormulaSet reference_flat_formulas();

/// Table-driven evaluation of a formula set. Charges 15 base
/// multiplications. Only as correct as the table.
SexticElem mul_flat_table(const FlatFormulaSet& formulas, const SexticElem& a, const SexticElem& b,
                          OpCounter& counter);

/// "P_0 = (a_0 + a_2 + a_4)(b_0 + b_2 + b_4)"
std::string format_product(std::size_t index, const FlatProduct& product);
/// "c_2 = -P_0 + P_2 + P_6 - P_8 + P_12 - P_14"
std::string format_output(std::size_t index, const OutputForm& form);

struct FormulaDifference {
  std::string item;  // e.g. "P_9 a-factor" or "c_4"
  std::string derived;
  std::string reference;
};

std::vector<FormulaDifference> compare_formulas(const FlatFormulaSet& derived, const FlatFormulaSet& reference);

}  // namespace gf3
