#include "gf3/interp.hpp"

namespace gf3 {

std::string QuadFieldOps::to_string(const QuadElem& a) const {
  if (a.v.coeffs().degree() > 0 || a.u.coeffs().degree() > 0) return a.to_string();
  const auto v = a.v.is_zero() ? 0 : a.v.coeffs().get(0);
  const auto u = a.u.is_zero() ? 0 : a.u.coeffs().get(0);
  if (v == 0 && u == 0) return "0";
  std::string out;
  if (v != 0) out = v == 1 ? "1" : "-1";
  if (u != 0) {
    if (out.empty()) {
      out = u == 1 ? "s" : "-s";
    } else {
      out += u == 1 ? "+s" : "-s";
    }
  }
  return out;
}

RootOfUnity find_root_2p_minus_2(std::uint32_t p) {
  const SmallExtField field(p);
  const std::uint64_t group = field.order() - 1;
  const auto group_primes = prime_factors(group);
  auto has_order = [&](const SmallExtElem& x, std::uint64_t n, const std::vector<std::uint64_t>& primes) {
    if (!(field.pow(x, n) == field.one())) return false;
    for (auto q : primes) {
      if (field.pow(x, n / q) == field.one()) return false;
    }
    return true;
  };
  for (std::uint64_t i = 1; i < field.order(); ++i) {
    const SmallExtElem a = field.from_index(i);
    if (!has_order(a, group, group_primes)) continue;
    const SmallExtElem omega = field.pow(a, (p + 1) / 2);
    const std::uint64_t target = 2 * (std::uint64_t{p} - 1);
    if (!has_order(omega, target, prime_factors(target))) {
      throw std::logic_error("a^((p+1)/2) does not have order 2(p-1)");
    }
    return {field, a, omega, target};
  }
  throw std::logic_error("F_{p^2} has no primitive element");
}

PointSet<SmallExtElem> suggest_points_for_general_case(std::uint32_t p) {
  if (p > 31) throw Error(ErrorCode::kBadPrime, "p = " + std::to_string(p) + " is too large to enumerate");
  const SmallExtField f(p);
  std::vector<SmallExtElem> pts;
  for (std::uint32_t i = 1; i < p; ++i) pts.push_back(f.make(i, 0));
  for (std::uint32_t i = 1; i <= (p - 3) / 2; ++i) {
    pts.push_back(f.make(0, i));
    pts.push_back(f.make(0, -static_cast<std::int64_t>(i)));
  }
  pts.push_back(f.make(0, (p - 1) / 2));
  return PointSet<SmallExtElem>(std::move(pts));
}

}  // namespace gf3
