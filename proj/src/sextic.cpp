#include "gf3/sextic.hpp"

#include "gf3/dft4.hpp"

namespace gf3 {

namespace {

void require_same(const SexticElem& a, const SexticElem& b) {
  if (a.context() != b.context() || a.context() == nullptr) {
    throw Error(ErrorCode::kContextMismatch, "operands belong to different fields");
  }
}

}  // namespace

std::string SexticElem::to_string() const { return a0.to_string() + "|" + a1.to_string() + "|" + a2.to_string(); }

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kOracle36: return "oracle36";
    case Strategy::kKara18: return "kara18";
    case Strategy::kInterpMatrix: return "interp-matrix";
    case Strategy::kInterpFlat: return "interp-flat";
    case Strategy::kDirectSextic: return "direct-sextic";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  for (auto s : kAllStrategies) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorCode::kInvalidConfig, "unknown strategy \"" + std::string(name) + "\"");
}

std::uint64_t expected_base_muls(Strategy s) {
  switch (s) {
    case Strategy::kOracle36: return 27;
    case Strategy::kKara18: return 18;
    case Strategy::kInterpMatrix: return 15;
    case Strategy::kInterpFlat: return 15;
    case Strategy::kDirectSextic: return 18;
  }
  return 0;
}

SexticElem sextic_zero(const FieldContext& ctx) { return {quad_zero(ctx), quad_zero(ctx), quad_zero(ctx)}; }
SexticElem sextic_one(const FieldContext& ctx) { return {quad_one(ctx), quad_zero(ctx), quad_zero(ctx)}; }
SexticElem sextic_r(const FieldContext& ctx) { return {quad_zero(ctx), quad_one(ctx), quad_zero(ctx)}; }

SexticElem sextic_parse(const FieldContext& ctx, std::string_view text) {
  std::array<Gf3mElem, 6> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    const auto bar = text.find('|', start);
    const bool last = i == 5;
    if (last != (bar == std::string_view::npos)) {
      throw Error(ErrorCode::kParseError, "expected six '|'-separated components");
    }
    parts[i] = ctx.parse(text.substr(start, last ? std::string_view::npos : bar - start));
    start = bar + 1;
  }
  return SexticElem::from_coords(parts);
}

SexticElem sextic_random(const FieldContext& ctx, std::mt19937_64& rng) {
  auto a0 = quad_random(ctx, rng);
  auto a1 = quad_random(ctx, rng);
  auto a2 = quad_random(ctx, rng);
  return {a0, a1, a2};
}

SexticElem sextic_add(const SexticElem& a, const SexticElem& b) {
  return {qadd(a.a0, b.a0), qadd(a.a1, b.a1), qadd(a.a2, b.a2)};
}

SexticElem sextic_sub(const SexticElem& a, const SexticElem& b) {
  return {qsub(a.a0, b.a0), qsub(a.a1, b.a1), qsub(a.a2, b.a2)};
}

SexticElem sextic_neg(const SexticElem& a) { return {qneg(a.a0), qneg(a.a1), qneg(a.a2)}; }

UnreducedProduct unreduced_schoolbook(const SexticElem& a, const SexticElem& b, OpCounter& counter) {
  require_same(a, b);
  const std::array<const QuadElem*, 3> x = {&a.a0, &a.a1, &a.a2};
  const std::array<const QuadElem*, 3> y = {&b.a0, &b.a1, &b.a2};
  const auto& ctx = *a.context();
  UnreducedProduct out{{quad_zero(ctx), quad_zero(ctx), quad_zero(ctx), quad_zero(ctx), quad_zero(ctx)}};
  std::array<bool, 5> seeded{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const QuadElem p = qmul(*x[i], *y[j], counter);
      if (seeded[i + j]) {
        out.c[i + j] = qadd(out.c[i + j], p, counter);
      } else {
        out.c[i + j] = p;
        seeded[i + j] = true;
      }
    }
  }
  return out;
}

UnreducedProduct unreduced_karatsuba(const SexticElem& a, const SexticElem& b, OpCounter& counter) {
  require_same(a, b);
  const QuadElem p0 = qmul(a.a0, b.a0, counter);
  const QuadElem p1 = qmul(a.a1, b.a1, counter);
  const QuadElem p2 = qmul(a.a2, b.a2, counter);
  const QuadElem p01 = qmul(qadd(a.a0, a.a1, counter), qadd(b.a0, b.a1, counter), counter);
  const QuadElem p02 = qmul(qadd(a.a0, a.a2, counter), qadd(b.a0, b.a2, counter), counter);
  const QuadElem p12 = qmul(qadd(a.a1, a.a2, counter), qadd(b.a1, b.a2, counter), counter);
  QuadArith ar{&counter};
  return {{
      p0,
      ar.sub(ar.sub(p01, p0), p1),
      ar.add(ar.sub(ar.sub(p02, p0), p2), p1),
      ar.sub(ar.sub(p12, p1), p2),
      p2,
  }};
}

UnreducedProduct unreduced_interp_matrix(const SexticElem& a, const SexticElem& b, OpCounter& counter) {
  require_same(a, b);
  QuadArith ar{&counter};
  const auto ea = dft4_forward_deg2(ar, a.a0, a.a1, a.a2);
  const auto eb = dft4_forward_deg2(ar, b.a0, b.a1, b.a2);
  // Leading coefficient from the point at infinity.
  const QuadElem top = qmul(a.a2, b.a2, counter);
  std::array<QuadElem, 4> shifted;
  for (std::size_t i = 0; i < 4; ++i) shifted[i] = ar.sub(qmul(ea[i], eb[i], counter), top);
  const auto c = dft4_inverse(ar, shifted);
  return {{c[0], c[1], c[2], c[3], top}};
}

SexticElem reduce_unreduced(const UnreducedProduct& u) {
  OpCounter scratch;
  return reduce_unreduced(u, scratch);
}

SexticElem reduce_unreduced(const UnreducedProduct& u, OpCounter& counter) {
  QuadArith ar{&counter};
  const auto r = reduce_artin_schreier(ar, u.c);
  return {r[0], r[1], r[2]};
}

SexticElem mul_oracle36(const SexticElem& a, const SexticElem& b, OpCounter& counter) {
  return reduce_unreduced(unreduced_schoolbook(a, b, counter), counter);
}

SexticElem mul_kara18(const SexticElem& a, const SexticElem& b, OpCounter& counter) {
  return reduce_unreduced(unreduced_karatsuba(a, b, counter), counter);
}

SexticElem mul_interp_matrix(const SexticElem& a, const SexticElem& b, OpCounter& counter) {
  return reduce_unreduced(unreduced_interp_matrix(a, b, counter), counter);
}

SexticElem mul_interp_flat(const SexticElem& a, const SexticElem& b, OpCounter& counter) {
  require_same(a, b);
  auto ad = [&](const Gf3mElem& x, const Gf3mElem& y) { return add(x, y, counter); };
  auto sb = [&](const Gf3mElem& x, const Gf3mElem& y) { return sub(x, y, counter); };

  // The fifteen evaluation forms, sharing the butterflies (x0 +- x4), (x1 +- x5).
  struct Forms {
    std::array<Gf3mElem, 15> f;
  };
  auto forms = [&](const SexticElem& e) {
    const auto x = e.coords();
    const auto p = ad(x[0], x[4]);
    const auto q = sb(x[0], x[4]);
    const auto r = ad(x[1], x[5]);
    const auto t = sb(x[1], x[5]);
    Forms out;
    auto& f = out.f;
    f[0] = ad(p, x[2]);   // x0 + x2 + x4
    f[2] = ad(r, x[3]);   // x1 + x3 + x5
    f[1] = ad(f[0], f[2]);
    f[3] = sb(q, x[3]);   // x0 - x3 - x4
    f[5] = ad(t, x[2]);   // x1 + x2 - x5
    f[4] = ad(f[3], f[5]);
    f[6] = sb(p, x[2]);   // x0 - x2 + x4
    f[8] = sb(r, x[3]);   // x1 - x3 + x5
    f[7] = ad(f[6], f[8]);
    f[9] = ad(q, x[3]);   // x0 + x3 - x4
    f[11] = sb(t, x[2]);  // x1 - x2 - x5
    f[10] = ad(f[9], f[11]);
    f[12] = x[4];
    f[14] = x[5];
    f[13] = ad(x[4], x[5]);
    return out;
  };
  const Forms fa = forms(a);
  const Forms fb = forms(b);
  std::array<Gf3mElem, 15> P;
  for (std::size_t i = 0; i < 15; ++i) P[i] = mul(fa.f[i], fb.f[i], counter);

  // c0 = -P0 + P2 - P3 - P4 + P10 + P11 - P12 + P14
  Gf3mElem c0 = sb(P[2], P[0]);
  c0 = sb(c0, P[3]);
  c0 = sb(c0, P[4]);
  c0 = ad(c0, P[10]);
  c0 = ad(c0, P[11]);
  c0 = sb(c0, P[12]);
  c0 = ad(c0, P[14]);
  // c1 = P0 - P1 + P2 + P4 + P5 + P9 + P10 + P12 - P13 + P14
  Gf3mElem c1 = sb(P[0], P[1]);
  c1 = ad(c1, P[2]);
  c1 = ad(c1, P[4]);
  c1 = ad(c1, P[5]);
  c1 = ad(c1, P[9]);
  c1 = ad(c1, P[10]);
  c1 = ad(c1, P[12]);
  c1 = sb(c1, P[13]);
  c1 = ad(c1, P[14]);
  // c2 = -P0 + P2 + P6 - P8 + P12 - P14
  Gf3mElem c2 = sb(P[2], P[0]);
  c2 = ad(c2, P[6]);
  c2 = sb(c2, P[8]);
  c2 = ad(c2, P[12]);
  c2 = sb(c2, P[14]);
  // c3 = P0 - P1 + P2 - P6 + P7 - P8 - P12 + P13 - P14
  Gf3mElem c3 = sb(P[0], P[1]);
  c3 = ad(c3, P[2]);
  c3 = sb(c3, P[6]);
  c3 = ad(c3, P[7]);
  c3 = sb(c3, P[8]);
  c3 = sb(c3, P[12]);
  c3 = ad(c3, P[13]);
  c3 = sb(c3, P[14]);
  // c4 = P0 - P2 - P3 + P5 + P6 - P8 - P9 + P11 + P12 - P14
  Gf3mElem c4 = sb(P[0], P[2]);
  c4 = sb(c4, P[3]);
  c4 = ad(c4, P[5]);
  c4 = ad(c4, P[6]);
  c4 = sb(c4, P[8]);
  c4 = sb(c4, P[9]);
  c4 = ad(c4, P[11]);
  c4 = ad(c4, P[12]);
  c4 = sb(c4, P[14]);
  // c5 = -P0 + P1 - P2 + P3 - ... - P14 (alternating over all fifteen)
  Gf3mElem c5 = sb(P[1], P[0]);
  for (std::size_t i = 2; i < 15; ++i) c5 = (i % 2 == 0) ? sb(c5, P[i]) : ad(c5, P[i]);

  return SexticElem::from_coords({c0, c1, c2, c3, c4, c5});
}

SexticElem mul(const SexticElem& a, const SexticElem& b, Strategy strategy, OpCounter& counter) {
  switch (strategy) {
    case Strategy::kOracle36: return mul_oracle36(a, b, counter);
    case Strategy::kKara18: return mul_kara18(a, b, counter);
    case Strategy::kInterpMatrix: return mul_interp_matrix(a, b, counter);
    case Strategy::kInterpFlat: return mul_interp_flat(a, b, counter);
    case Strategy::kDirectSextic: return mul_direct_sextic(a, b, counter);
  }
  throw Error(ErrorCode::kInvalidConfig, "unknown strategy");
}

SexticElem sextic_pow(const SexticElem& a, std::uint64_t e, Strategy strategy) {
  OpCounter scratch;
  SexticElem result = sextic_one(*a.context());
  SexticElem base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base, strategy, scratch);
    base = mul(base, base, strategy, scratch);
    e >>= 1;
  }
  return result;
}

}  // namespace gf3
