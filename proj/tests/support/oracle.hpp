#pragma once

// Reference arithmetic for tests. Plain digit vectors and schoolbook loops,
// sharing no code with the library beyond element accessors.

#include <array>
#include <cstdint>
#include <vector>

#include "gf3/sextic.hpp"

namespace oracle {

using Poly = std::vector<int>;  // digits 0..2, least significant first

inline Poly trimmed(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % 3;
  }
  return c;
}

/// Remainder of a modulo a monic f.
inline Poly poly_mod(Poly a, const Poly& f) {
  const std::size_t m = f.size() - 1;
  for (std::size_t d = a.size(); d-- > m;) {
    const int q = a[d];
    if (q == 0) continue;
    for (std::size_t i = 0; i <= m; ++i) a[d - m + i] = ((a[d - m + i] - q * f[i]) % 3 + 3) % 3;
  }
  a.resize(m, 0);
  return a;
}

/// Any remainder of f by a monic g of degree 1..deg(f)/2 being zero.
inline bool has_small_factor(const Poly& f) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= 3;
    for (std::size_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      std::size_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<int>(rest % 3);
        rest /= 3;
      }
      g[d] = 1;
      if (trimmed(poly_mod(f, g)).empty()) return true;
    }
  }
  return false;
}

inline bool irreducible_by_trial_division(const Poly& f) { return f.size() >= 2 && !has_small_factor(f); }

inline Poly to_poly(const gf3::Gf3mElem& e) {
  const auto d = e.coeffs().digits();
  Poly p(d.begin(), d.end());
  p.resize(static_cast<std::size_t>(e.context()->degree()), 0);
  return p;
}

inline Poly modulus_poly(const gf3::FieldContext& ctx) {
  const auto d = ctx.modulus().digits();
  Poly p(d.begin(), d.end());
  p.resize(static_cast<std::size_t>(ctx.degree()) + 1, 0);
  return p;
}

inline Poly base_mul(const gf3::FieldContext& ctx, const Poly& a, const Poly& b) {
  return poly_mod(poly_mul(a, b), modulus_poly(ctx));
}

/// F_{3^{6m}} product computed in F_3[x, y, z]/(f(x), y^2 + 1, z^3 - z - 1).
/// Result in tower coordinates (v0, u0, v1, u1, v2, u2).
inline std::array<Poly, 6> sextic_mul(const gf3::SexticElem& a, const gf3::SexticElem& b) {
  const gf3::FieldContext& ctx = *a.context();
  const std::size_t m = static_cast<std::size_t>(ctx.degree());
  const auto ac = a.coords();
  const auto bc = b.coords();
  // big[z power 0..4][y power 0..2] as unreduced x-polynomials.
  std::array<std::array<Poly, 3>, 5> big;
  for (auto& row : big) {
    for (auto& p : row) p.assign(2 * m, 0);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
          const Poly prod = poly_mul(to_poly(ac[2 * i + k]), to_poly(bc[2 * j + l]));
          auto& dst = big[i + j][k + l];
          for (std::size_t t = 0; t < prod.size(); ++t) dst[t] = (dst[t] + prod[t]) % 3;
        }
      }
    }
  }
  auto add_into = [](Poly& dst, const Poly& src, int sign) {
    for (std::size_t t = 0; t < src.size(); ++t) dst[t] = ((dst[t] + sign * src[t]) % 3 + 3) % 3;
  };
  for (auto& row : big) {
    add_into(row[0], row[2], -1);  // y^2 = -1
  }
  // z^4 = z^2 + z, z^3 = z + 1
  for (std::size_t y = 0; y < 2; ++y) {
    add_into(big[2][y], big[4][y], 1);
    add_into(big[1][y], big[4][y], 1);
    add_into(big[1][y], big[3][y], 1);
    add_into(big[0][y], big[3][y], 1);
  }
  const Poly f = modulus_poly(ctx);
  std::array<Poly, 6> out;
  for (std::size_t z = 0; z < 3; ++z) {
    for (std::size_t y = 0; y < 2; ++y) out[2 * z + y] = poly_mod(big[z][y], f);
  }
  return out;
}

inline std::array<Poly, 6> coords_poly(const gf3::SexticElem& e) {
  const auto c = e.coords();
  std::array<Poly, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = to_poly(c[i]);
  return out;
}

}  // namespace oracle
