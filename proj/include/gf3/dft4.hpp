#pragma once

// Length-4 DFT over the powers of s, written as the two sparse Cooley-Tukey
// factors. Templated on an arithmetic policy so the same code runs on real
// field elements (QuadArith) and on symbolic linear forms (formulas.hpp).
//
// Policy requirements: value_type, add(x, y), sub(x, y), mul_s(x).

#include <array>

namespace gf3 {

/// V_s x for x = (x0, x1, x2, x3): evaluation at (1, s, -1, -s).
template <class Arith>
std::array<typename Arith::value_type, 4> dft4_forward(const Arith& ar,
                                                       const std::array<typename Arith::value_type, 4>& x) {
  // Right factor: butterflies (x0 +- x2), (x1 +- x3).
  const auto t0 = ar.add(x[0], x[2]);
  const auto t1 = ar.add(x[1], x[3]);
  const auto t2 = ar.sub(x[0], x[2]);
  const auto t3 = ar.sub(x[1], x[3]);
  // Left factor: (t0 +- t1), (t2 +- s t3).
  const auto st3 = ar.mul_s(t3);
  return {ar.add(t0, t1), ar.add(t2, st3), ar.sub(t0, t1), ar.sub(t2, st3)};
}

/// Same transform for a degree-2 input (x3 = 0), skipping the zero column.
template <class Arith>
std::array<typename Arith::value_type, 4> dft4_forward_deg2(const Arith& ar, const typename Arith::value_type& x0,
                                                            const typename Arith::value_type& x1,
                                                            const typename Arith::value_type& x2) {
  const auto t0 = ar.add(x0, x2);
  const auto t2 = ar.sub(x0, x2);
  const auto sx1 = ar.mul_s(x1);
  return {ar.add(t0, x1), ar.add(t2, sx1), ar.sub(t0, x1), ar.sub(t2, sx1)};
}

/// W_s y = V_{s^3} y. In characteristic 3 the 1/4 scaling is 1.
template <class Arith>
std::array<typename Arith::value_type, 4> dft4_inverse(const Arith& ar,
                                                       const std::array<typename Arith::value_type, 4>& y) {
  const auto t0 = ar.add(y[0], y[2]);
  const auto t1 = ar.add(y[1], y[3]);
  const auto t2 = ar.sub(y[0], y[2]);
  const auto t3 = ar.sub(y[1], y[3]);
  const auto st3 = ar.mul_s(t3);
  return {ar.add(t0, t1), ar.sub(t2, st3), ar.sub(t0, t1), ar.add(t2, st3)};
}

/// Reduction of c0 + c1 z + ... + c4 z^4 modulo z^3 - z - 1:
/// (c0 + c3) + (c1 + c3 + c4) r + (c2 + c4) r^2.
template <class Arith>
std::array<typename Arith::value_type, 3> reduce_artin_schreier(const Arith& ar,
                                                                const std::array<typename Arith::value_type, 5>& c) {
  return {ar.add(c[0], c[3]), ar.add(ar.add(c[1], c[3]), c[4]), ar.add(c[2], c[4])};
}

}  // namespace gf3
