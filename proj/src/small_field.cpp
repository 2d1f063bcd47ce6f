#include "gf3/small_field.hpp"

#include "gf3/errors.hpp"

namespace gf3 {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

SmallExtField::SmallExtField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p % 4 != 3) {
    throw Error(ErrorCode::kBadPrime, std::to_string(p) + " is not a prime congruent to 3 mod 4");
  }
}

SmallExtElem SmallExtField::make(std::int64_t v, std::int64_t u) const {
  const auto p = static_cast<std::int64_t>(p_);
  return {static_cast<std::uint32_t>(((v % p) + p) % p), static_cast<std::uint32_t>(((u % p) + p) % p)};
}

SmallExtElem SmallExtField::from_int(std::int64_t n) const { return make(n, 0); }

SmallExtElem SmallExtField::add(const SmallExtElem& a, const SmallExtElem& b) const {
  return {(a.v + b.v) % p_, (a.u + b.u) % p_};
}

SmallExtElem SmallExtField::sub(const SmallExtElem& a, const SmallExtElem& b) const {
  return {(a.v + p_ - b.v) % p_, (a.u + p_ - b.u) % p_};
}

SmallExtElem SmallExtField::neg(const SmallExtElem& a) const { return sub(zero(), a); }

SmallExtElem SmallExtField::mul(const SmallExtElem& a, const SmallExtElem& b) const {
  const std::uint64_t p = p_;
  const std::uint64_t vv = std::uint64_t{a.v} * b.v % p;
  const std::uint64_t uu = std::uint64_t{a.u} * b.u % p;
  const std::uint64_t vu = (std::uint64_t{a.v} * b.u + std::uint64_t{a.u} * b.v) % p;
  return {static_cast<std::uint32_t>((vv + p - uu) % p), static_cast<std::uint32_t>(vu)};
}

SmallExtElem SmallExtField::pow(SmallExtElem a, std::uint64_t e) const {
  SmallExtElem r = one();
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

SmallExtElem SmallExtField::inv(const SmallExtElem& a) const {
  if (a == zero()) throw Error(ErrorCode::kZeroInverse, "inverse of zero in F_{p^2}");
  return pow(a, order() - 2);
}

std::uint64_t SmallExtField::order_of(const SmallExtElem& a) const {
  if (a == zero()) throw Error(ErrorCode::kZeroInverse, "zero has no multiplicative order");
  SmallExtElem x = a;
  std::uint64_t k = 1;
  while (!(x == one())) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

SmallExtElem SmallExtField::from_index(std::uint64_t i) const {
  return {static_cast<std::uint32_t>(i % p_), static_cast<std::uint32_t>((i / p_) % p_)};
}

std::string SmallExtField::to_string(const SmallExtElem& a) const {
  if (a.u == 0) return std::to_string(a.v);
  const std::string us = a.u == 1 ? "s" : std::to_string(a.u) + "s";
  if (a.v == 0) return us;
  return std::to_string(a.v) + "+" + us;
}

}  // namespace gf3
