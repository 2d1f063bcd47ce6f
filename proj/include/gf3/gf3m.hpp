#pragma once

// Arithmetic in F_{3^m} = F_3[x]/(f(x)) over packed trits.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gf3/errors.hpp"
#include "gf3/op_counter.hpp"
#include "gf3/trit_vector.hpp"

namespace gf3 {

class Gf3mElem;

/// Largest supported extension degree (the modulus needs m + 1 trits).
inline constexpr int kMaxDegree = static_cast<int>(kMaxTrits) - 1;

struct MulOptions {
  /// Operands longer than this many trits are split Karatsuba-style at a
  /// word boundary. Off by default: at four words or fewer the windowed comb
  /// is faster.
  std::size_t karatsuba_threshold = kMaxTrits;
};

/// Immutable description of F_{3^m}. Elements hold a non-owning pointer to
/// their context, so the context must outlive every element built from it.
class FieldContext {
 public:
  /// Validates the modulus: monic of degree m, m odd, irreducible over F_3.
  /// Coefficients are least-significant first, m + 1 of them.
  static std::shared_ptr<const FieldContext> create(int m, std::span<const std::uint8_t> modulus,
                                                    MulOptions options = {});
  static std::shared_ptr<const FieldContext> create(const TritVector& modulus, MulOptions options = {});

  int degree() const { return m_; }
  const TritVector& modulus() const { return modulus_; }
  bool is_trinomial() const { return trinomial_; }
  const MulOptions& options() const { return options_; }
  std::size_t words() const { return words_; }

  Gf3mElem zero() const;
  Gf3mElem one() const;
  /// The constant trit c (0, 1 or 2).
  Gf3mElem constant(std::uint8_t c) const;
  /// x^k reduced.
  Gf3mElem monomial(std::size_t k) const;
  /// Reduces an arbitrary coefficient list (any length up to 2m - 1).
  Gf3mElem from_digits(std::span<const std::uint8_t> digits) const;
  /// Exactly m trits, least-significant first.
  Gf3mElem parse(std::string_view text) const;

  /// Human-readable modulus such as "x^97 + x^16 + 2".
  std::string modulus_string() const;

 private:
  friend class Gf3mElem;
  friend Gf3mElem mul(const Gf3mElem&, const Gf3mElem&, OpCounter&);

  FieldContext(int m, TritVector modulus, MulOptions options);

  // Reduces a 2*kTritWords-word product of length < 2m into an element.
  void reduce_wide(words::Word* lo, words::Word* hi, std::size_t len, TritVector& out) const;

  int m_;
  TritVector modulus_;
  MulOptions options_;
  std::size_t words_;
  bool trinomial_ = false;
  // Trinomial x^m + c_k x^k + c_0: the fold adds -c_k H x^k - c_0 H.
  std::size_t tri_k_ = 0;
  std::uint8_t tri_ck_ = 0;
  std::uint8_t tri_c0_ = 0;
};

/// Canonical residue modulo f(x), always of degree < m.
class Gf3mElem {
 public:
  Gf3mElem() = default;

  const FieldContext* context() const { return ctx_; }
  const TritVector& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.is_zero(); }
  bool is_one() const;
  std::string to_string() const { return coeffs_.to_string(); }

  friend bool operator==(const Gf3mElem& a, const Gf3mElem& b) {
    return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
  }

 private:
  friend class FieldContext;
  friend Gf3mElem add(const Gf3mElem&, const Gf3mElem&);
  friend Gf3mElem sub(const Gf3mElem&, const Gf3mElem&);
  friend Gf3mElem neg(const Gf3mElem&);
  friend Gf3mElem mul(const Gf3mElem&, const Gf3mElem&, OpCounter&);

  Gf3mElem(const FieldContext* ctx, TritVector coeffs) : ctx_(ctx), coeffs_(coeffs) {}

  const FieldContext* ctx_ = nullptr;
  TritVector coeffs_;
};

Gf3mElem add(const Gf3mElem& a, const Gf3mElem& b);
Gf3mElem sub(const Gf3mElem& a, const Gf3mElem& b);
Gf3mElem neg(const Gf3mElem& a);

inline Gf3mElem add(const Gf3mElem& a, const Gf3mElem& b, OpCounter& counter) {
  ++counter.base_adds;
  return add(a, b);
}

inline Gf3mElem sub(const Gf3mElem& a, const Gf3mElem& b, OpCounter& counter) {
  ++counter.base_adds;
  return sub(a, b);
}

/// a * b mod f. Charges exactly one base multiplication whatever the
/// internal algorithm.
Gf3mElem mul(const Gf3mElem& a, const Gf3mElem& b, OpCounter& counter);

/// Throws kZeroInverse for a == 0.
Gf3mElem inv(const Gf3mElem& a);

Gf3mElem pow(const Gf3mElem& a, std::uint64_t e);

/// Uniform element; each trit is drawn as rng() % 3.
Gf3mElem random_element(const FieldContext& ctx, std::mt19937_64& rng);

inline Gf3mElem operator+(const Gf3mElem& a, const Gf3mElem& b) { return add(a, b); }
inline Gf3mElem operator-(const Gf3mElem& a, const Gf3mElem& b) { return sub(a, b); }
inline Gf3mElem operator-(const Gf3mElem& a) { return neg(a); }
inline Gf3mElem operator*(const Gf3mElem& a, const Gf3mElem& b) {
  OpCounter scratch;
  return mul(a, b, scratch);
}

// Polynomials over F_3 as plain digit vectors (least significant first),
// used for modulus validation and searches. Not performance critical.
namespace poly3 {

using Poly = std::vector<std::uint8_t>;

void trim(Poly& p);
Poly mod(Poly a, const Poly& f);
Poly mulmod(const Poly& a, const Poly& b, const Poly& f);
Poly gcd(Poly a, Poly b);
/// Ben-Or / Rabin style test: gcd(x^{3^i} - x, f) = 1 for i <= deg/2.
bool is_irreducible(const Poly& f);

}  // namespace poly3

/// First irreducible x^m + a x^k + b, iterating k ascending, then a, then b.
/// Throws kRejectReducible if none exists.
TritVector find_irreducible_trinomial(int m);

/// Default modulus for degree m: x + 1 for m = 1, x^97 + x^16 + 2 for m = 97,
/// otherwise find_irreducible_trinomial(m).
TritVector default_modulus(int m);

std::shared_ptr<const FieldContext> default_context(int m, MulOptions options = {});

}  // namespace gf3
