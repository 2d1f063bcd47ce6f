#include "gf3/direct_sextic.hpp"

#include <memory>
#include <optional>
#include <stdexcept>

namespace gf3 {

namespace {

F3Matrix6 invert_mod3(F3Matrix6 m) {
  F3Matrix6 inv{};
  for (std::size_t i = 0; i < 6; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < 6; ++col) {
    std::size_t pivot = col;
    while (pivot < 6 && m[pivot][col] == 0) ++pivot;
    if (pivot == 6) throw std::logic_error("change-of-basis matrix is singular");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const std::uint8_t scale = m[col][col];  // self-inverse in F_3
    for (std::size_t j = 0; j < 6; ++j) {
      m[col][j] = static_cast<std::uint8_t>((m[col][j] * scale) % 3);
      inv[col][j] = static_cast<std::uint8_t>((inv[col][j] * scale) % 3);
    }
    for (std::size_t r = 0; r < 6; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const std::uint8_t f = m[r][col];
      for (std::size_t j = 0; j < 6; ++j) {
        m[r][j] = static_cast<std::uint8_t>((m[r][j] + 3 * 3 - f * m[col][j]) % 3);
        inv[r][j] = static_cast<std::uint8_t>((inv[r][j] + 3 * 3 - f * inv[col][j]) % 3);
      }
    }
  }
  return inv;
}

std::array<std::uint8_t, 6> f3_coords(const SexticElem& e) {
  std::array<std::uint8_t, 6> out{};
  const auto c = e.coords();
  for (std::size_t i = 0; i < 6; ++i) out[i] = c[i].coeffs().get(0);
  return out;
}

DirectSexticBasis build_basis() {
  const auto f3 = default_context(1);
  const FieldContext& ctx = *f3;
  OpCounter scratch;
  for (int index = 0; index < 729; ++index) {
    std::array<Gf3mElem, 6> c;
    int rest = index;
    for (auto& x : c) {
      x = ctx.constant(static_cast<std::uint8_t>(rest % 3));
      rest /= 3;
    }
    const SexticElem rho = SexticElem::from_coords(c);
    std::array<SexticElem, 7> powers;
    powers[0] = sextic_one(ctx);
    for (std::size_t k = 1; k < 7; ++k) powers[k] = mul_oracle36(powers[k - 1], rho, scratch);
    // rho^6 + rho - 1 == 0
    if (!sextic_sub(sextic_add(powers[6], powers[1]), sextic_one(ctx)).is_zero()) continue;

    DirectSexticBasis basis{};
    basis.rho = f3_coords(rho);
    for (std::size_t j = 0; j < 6; ++j) {
      const auto col = f3_coords(powers[j]);
      for (std::size_t i = 0; i < 6; ++i) basis.to_tower[i][j] = col[i];
    }
    basis.from_tower = invert_mod3(basis.to_tower);
    return basis;
  }
  throw std::logic_error("y^6 + y - 1 has no root in F_{3^6}");
}

std::array<Gf3mElem, 6> apply(const F3Matrix6& m, const std::array<Gf3mElem, 6>& x, OpCounter& counter) {
  std::array<Gf3mElem, 6> out;
  for (std::size_t i = 0; i < 6; ++i) {
    std::optional<Gf3mElem> acc;
    for (std::size_t j = 0; j < 6; ++j) {
      const auto k = m[i][j];
      if (k == 0) continue;
      if (!acc) {
        acc = k == 1 ? x[j] : neg(x[j]);
      } else {
        acc = k == 1 ? add(*acc, x[j], counter) : sub(*acc, x[j], counter);
      }
    }
    out[i] = acc ? *acc : x[0].context()->zero();
  }
  return out;
}

using Block = std::array<Gf3mElem, 2>;
using BlockProduct = std::array<Gf3mElem, 3>;

BlockProduct block_mul(const Block& p, const Block& q, OpCounter& c) {
  const auto lo = mul(p[0], q[0], c);
  const auto hi = mul(p[1], q[1], c);
  const auto mid = mul(add(p[0], p[1], c), add(q[0], q[1], c), c);
  return {lo, sub(sub(mid, lo, c), hi, c), hi};
}

Block block_add(const Block& x, const Block& y, OpCounter& c) { return {add(x[0], y[0], c), add(x[1], y[1], c)}; }

BlockProduct bp_add(const BlockProduct& x, const BlockProduct& y, OpCounter& c) {
  return {add(x[0], y[0], c), add(x[1], y[1], c), add(x[2], y[2], c)};
}

BlockProduct bp_sub(const BlockProduct& x, const BlockProduct& y, OpCounter& c) {
  return {sub(x[0], y[0], c), sub(x[1], y[1], c), sub(x[2], y[2], c)};
}

}  // namespace

const DirectSexticBasis& DirectSexticBasis::get() {
  static const DirectSexticBasis basis = build_basis();
  return basis;
}

void require_direct_sextic_support(const FieldContext& ctx) {
  if (ctx.degree() % 3 == 0) {
    throw Error(ErrorCode::kUnsupportedDegree,
                "y^6 + y - 1 is reducible over F_{3^m} for m = " + std::to_string(ctx.degree()));
  }
}

DirectSexticElem to_direct(const SexticElem& a) {
  OpCounter scratch;
  return to_direct(a, scratch);
}

DirectSexticElem to_direct(const SexticElem& a, OpCounter& counter) {
  require_direct_sextic_support(*a.context());
  return {apply(DirectSexticBasis::get().from_tower, a.coords(), counter)};
}

SexticElem from_direct(const DirectSexticElem& a) {
  OpCounter scratch;
  return from_direct(a, scratch);
}

SexticElem from_direct(const DirectSexticElem& a, OpCounter& counter) {
  return SexticElem::from_coords(apply(DirectSexticBasis::get().to_tower, a.c, counter));
}

DirectSexticElem mul_direct(const DirectSexticElem& a, const DirectSexticElem& b, OpCounter& counter) {
  if (a.c[0].context() != b.c[0].context()) {
    throw Error(ErrorCode::kContextMismatch, "operands belong to different fields");
  }
  const Block x0{a.c[0], a.c[1]}, x1{a.c[2], a.c[3]}, x2{a.c[4], a.c[5]};
  const Block y0{b.c[0], b.c[1]}, y1{b.c[2], b.c[3]}, y2{b.c[4], b.c[5]};

  const auto p0 = block_mul(x0, y0, counter);
  const auto p1 = block_mul(x1, y1, counter);
  const auto p2 = block_mul(x2, y2, counter);
  const auto p01 = block_mul(block_add(x0, x1, counter), block_add(y0, y1, counter), counter);
  const auto p02 = block_mul(block_add(x0, x2, counter), block_add(y0, y2, counter), counter);
  const auto p12 = block_mul(block_add(x1, x2, counter), block_add(y1, y2, counter), counter);

  const std::array<BlockProduct, 5> d = {
      p0,
      bp_sub(bp_sub(p01, p0, counter), p1, counter),
      bp_add(bp_sub(bp_sub(p02, p0, counter), p2, counter), p1, counter),
      bp_sub(bp_sub(p12, p1, counter), p2, counter),
      p2,
  };

  // Block i starts at y^{2i}; neighbouring blocks overlap in one coefficient.
  std::array<std::optional<Gf3mElem>, 11> r;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t t = 0; t < 3; ++t) {
      auto& slot = r[2 * i + t];
      slot = slot ? add(*slot, d[i][t], counter) : d[i][t];
    }
  }
  // y^6 = 1 - y
  for (std::size_t k = 10; k >= 6; --k) {
    *r[k - 6] = add(*r[k - 6], *r[k], counter);
    *r[k - 5] = sub(*r[k - 5], *r[k], counter);
  }
  return {{*r[0], *r[1], *r[2], *r[3], *r[4], *r[5]}};
}

SexticElem mul_direct_sextic(const SexticElem& a, const SexticElem& b, OpCounter& counter) {
  if (a.context() != b.context() || a.context() == nullptr) {
    throw Error(ErrorCode::kContextMismatch, "operands belong to different fields");
  }
  return from_direct(mul_direct(to_direct(a, counter), to_direct(b, counter), counter), counter);
}

}  // namespace gf3
