#pragma once

// F_{3^{2m}} = F_{3^m}[y]/(y^2 + 1). An element is v + u*s with s the class of y.

#include <random>
#include <utility>
#include <string>
#include <string_view>

#include "gf3/gf3m.hpp"

namespace gf3 {

struct QuadElem {
  Gf3mElem v;  // constant part
  Gf3mElem u;  // coefficient of s

  const FieldContext* context() const { return v.context(); }
  bool is_zero() const { return v.is_zero() && u.is_zero(); }

  /// "v|u" with each component as an m-trit string.
  std::string to_string() const;

  friend bool operator==(const QuadElem&, const QuadElem&) = default;
};

QuadElem quad_zero(const FieldContext& ctx);
QuadElem quad_one(const FieldContext& ctx);
/// The fourth root of unity s.
QuadElem quad_s(const FieldContext& ctx);
QuadElem quad_from_base(const Gf3mElem& v);
QuadElem quad_parse(const FieldContext& ctx, std::string_view text);
QuadElem quad_random(const FieldContext& ctx, std::mt19937_64& rng);

QuadElem qadd(const QuadElem& a, const QuadElem& b);
QuadElem qsub(const QuadElem& a, const QuadElem& b);
QuadElem qneg(const QuadElem& a);
QuadElem qadd(const QuadElem& a, const QuadElem& b, OpCounter& counter);
QuadElem qsub(const QuadElem& a, const QuadElem& b, OpCounter& counter);

/// Three base multiplications: v_a v_b, u_a u_b, (v_a + u_a)(v_b + u_b).
QuadElem qmul(const QuadElem& a, const QuadElem& b, OpCounter& counter);

/// Four-multiplication schoolbook product, kept as a reference.
QuadElem qmul_schoolbook(const QuadElem& a, const QuadElem& b, OpCounter& counter);

/// (u s + v) s = v s - u. No base multiplications.
inline QuadElem mul_by_s(const QuadElem& a) { return {neg(a.u), a.v}; }

QuadElem qconj(const QuadElem& a);
/// v^2 + u^2, the norm down to F_{3^m}.
Gf3mElem qnorm(const QuadElem& a);
/// Throws kZeroInverse.
QuadElem qinv(const QuadElem& a);

inline QuadElem operator+(const QuadElem& a, const QuadElem& b) { return qadd(a, b); }
inline QuadElem operator-(const QuadElem& a, const QuadElem& b) { return qsub(a, b); }
inline QuadElem operator-(const QuadElem& a) { return qneg(a); }
inline QuadElem operator*(const QuadElem& a, const QuadElem& b) {
  OpCounter scratch;
  return qmul(a, b, scratch);
}

/// Product recombination shared by qmul and the symbolic derivation:
/// given vv = v_a v_b, uu = u_a u_b, mixed = (v_a + u_a)(v_b + u_b),
/// returns (vv - uu) + (mixed - vv - uu) s.
template <class Base, class Sub>
std::pair<Base, Base> karatsuba_quad_combine(const Base& vv, const Base& uu, const Base& mixed, Sub sub) {
  Base v = sub(vv, uu);
  Base u = sub(sub(mixed, vv), uu);
  return {v, u};
}

/// Counting arithmetic policy over QuadElem, used by the generic transforms.
struct QuadArith {
  using value_type = QuadElem;
  OpCounter* counter;

  QuadElem add(const QuadElem& a, const QuadElem& b) const { return qadd(a, b, *counter); }
  QuadElem sub(const QuadElem& a, const QuadElem& b) const { return qsub(a, b, *counter); }
  QuadElem mul_s(const QuadElem& a) const { return mul_by_s(a); }
};

}  // namespace gf3
