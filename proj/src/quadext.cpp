#include "gf3/quadext.hpp"

#include <vector>

namespace gf3 {

std::string QuadElem::to_string() const { return v.to_string() + "|" + u.to_string(); }

QuadElem quad_zero(const FieldContext& ctx) { return {ctx.zero(), ctx.zero()}; }
QuadElem quad_one(const FieldContext& ctx) { return {ctx.one(), ctx.zero()}; }
QuadElem quad_s(const FieldContext& ctx) { return {ctx.zero(), ctx.one()}; }

QuadElem quad_from_base(const Gf3mElem& v) { return {v, v.context()->zero()}; }

QuadElem quad_parse(const FieldContext& ctx, std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw Error(ErrorCode::kParseError, "expected \"v|u\", got \"" + std::string(text) + "\"");
  }
  return {ctx.parse(text.substr(0, bar)), ctx.parse(text.substr(bar + 1))};
}

QuadElem quad_random(const FieldContext& ctx, std::mt19937_64& rng) {
  auto v = random_element(ctx, rng);
  auto u = random_element(ctx, rng);
  return {v, u};
}

QuadElem qadd(const QuadElem& a, const QuadElem& b) { return {add(a.v, b.v), add(a.u, b.u)}; }
QuadElem qsub(const QuadElem& a, const QuadElem& b) { return {sub(a.v, b.v), sub(a.u, b.u)}; }
QuadElem qneg(const QuadElem& a) { return {neg(a.v), neg(a.u)}; }

QuadElem qadd(const QuadElem& a, const QuadElem& b, OpCounter& counter) {
  counter.base_adds += 2;
  return qadd(a, b);
}

QuadElem qsub(const QuadElem& a, const QuadElem& b, OpCounter& counter) {
  counter.base_adds += 2;
  return qsub(a, b);
}

QuadElem qmul(const QuadElem& a, const QuadElem& b, OpCounter& counter) {
  const Gf3mElem vv = mul(a.v, b.v, counter);
  const Gf3mElem uu = mul(a.u, b.u, counter);
  const Gf3mElem mixed = mul(add(a.v, a.u, counter), add(b.v, b.u, counter), counter);
  auto sub_c = [&](const Gf3mElem& x, const Gf3mElem& y) { return sub(x, y, counter); };
  auto [v, u] = karatsuba_quad_combine(vv, uu, mixed, sub_c);
  return {v, u};
}

QuadElem qmul_schoolbook(const QuadElem& a, const QuadElem& b, OpCounter& counter) {
  // (v_a + u_a s)(v_b + u_b s) = (v_a v_b - u_a u_b) + (v_a u_b + u_a v_b) s
  const auto vv = mul(a.v, b.v, counter);
  const auto uu = mul(a.u, b.u, counter);
  const auto vu = mul(a.v, b.u, counter);
  const auto uv = mul(a.u, b.v, counter);
  return {sub(vv, uu, counter), add(vu, uv, counter)};
}

QuadElem qconj(const QuadElem& a) { return {a.v, neg(a.u)}; }

Gf3mElem qnorm(const QuadElem& a) { return a.v * a.v + a.u * a.u; }

QuadElem qinv(const QuadElem& a) {
  if (a.is_zero()) throw Error(ErrorCode::kZeroInverse, "inverse of zero in F_{3^{2m}}");
  // y^2 + 1 is irreducible for odd m, so the norm of a nonzero element is nonzero.
  const Gf3mElem n_inv = inv(qnorm(a));
  const QuadElem c = qconj(a);
  return {c.v * n_inv, c.u * n_inv};
}

}  // namespace gf3
