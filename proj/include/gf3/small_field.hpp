#pragma once

// F_{p^2} = F_p[y]/(y^2 + 1) for small primes p = 3 mod 4. Used by the
// root-of-unity search and the point-set generator.

#include <cstdint>
#include <string>
#include <vector>

#include "gf3/op_counter.hpp"

namespace gf3 {

bool is_prime(std::uint64_t n);
/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// v + u s with s^2 = -1.
struct SmallExtElem {
  std::uint32_t v = 0;
  std::uint32_t u = 0;

  friend bool operator==(const SmallExtElem&, const SmallExtElem&) = default;
};

class SmallExtField {
 public:
  /// Throws kBadPrime unless p is a prime with p = 3 mod 4 (so y^2 + 1 is irreducible).
  explicit SmallExtField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  std::uint64_t order() const { return std::uint64_t{p_} * p_; }

  SmallExtElem zero() const { return {}; }
  SmallExtElem one() const { return {1, 0}; }
  SmallExtElem s() const { return {0, 1}; }
  SmallExtElem from_int(std::int64_t n) const;
  SmallExtElem make(std::int64_t v, std::int64_t u) const;

  SmallExtElem add(const SmallExtElem& a, const SmallExtElem& b) const;
  SmallExtElem sub(const SmallExtElem& a, const SmallExtElem& b) const;
  SmallExtElem neg(const SmallExtElem& a) const;
  SmallExtElem mul(const SmallExtElem& a, const SmallExtElem& b) const;
  SmallExtElem inv(const SmallExtElem& a) const;
  SmallExtElem pow(SmallExtElem a, std::uint64_t e) const;

  /// Multiplicative order of a nonzero element (brute force).
  std::uint64_t order_of(const SmallExtElem& a) const;

  /// Enumeration index v + p u; the search order used throughout.
  std::uint64_t index(const SmallExtElem& a) const { return a.v + std::uint64_t{p_} * a.u; }
  SmallExtElem from_index(std::uint64_t i) const;

  std::string to_string(const SmallExtElem& a) const;

 private:
  std::uint32_t p_;
};

}  // namespace gf3
