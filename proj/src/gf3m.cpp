#include "gf3/gf3m.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <utility>

namespace gf3 {

namespace {

using words::Word;
constexpr std::size_t kWide = 2 * kTritWords;

void require_same(const Gf3mElem& a, const Gf3mElem& b) {
  if (a.context() != b.context() || a.context() == nullptr) {
    throw Error(ErrorCode::kContextMismatch, "operands belong to different fields");
  }
}

// out[0 .. 2N) += a * b for N-word operands. Left-to-right comb over b,
// two trit columns per step, with the nine multiples a * (c0 + c1 x)
// precomputed.
template <std::size_t N>
void comb_mul_fixed(const Word* a_lo, const Word* a_hi, const Word* b_lo, const Word* b_hi, Word* out_lo,
                    Word* out_hi) {
  constexpr std::size_t kRow = N + 1;
  constexpr std::size_t kOut = 2 * N;
  Word t_lo[9][kRow] = {}, t_hi[9][kRow] = {};
  // Row c0 + 3 c1, trit value 2 meaning -1.
  for (std::size_t j = 0; j < N; ++j) {
    t_lo[1][j] = a_lo[j];
    t_hi[1][j] = a_hi[j];
  }
  t_lo[3][0] = a_lo[0] << 1;
  t_hi[3][0] = a_hi[0] << 1;
  for (std::size_t j = 1; j < N; ++j) {
    t_lo[3][j] = (a_lo[j] << 1) | (a_lo[j - 1] >> (words::kBits - 1));
    t_hi[3][j] = (a_hi[j] << 1) | (a_hi[j - 1] >> (words::kBits - 1));
  }
  t_lo[3][N] = a_lo[N - 1] >> (words::kBits - 1);
  t_hi[3][N] = a_hi[N - 1] >> (words::kBits - 1);
  for (std::size_t j = 0; j < kRow; ++j) {
    t_lo[2][j] = t_hi[1][j];
    t_hi[2][j] = t_lo[1][j];
    t_lo[6][j] = t_hi[3][j];
    t_hi[6][j] = t_lo[3][j];
    words::add(t_lo[1][j], t_hi[1][j], t_lo[3][j], t_hi[3][j], t_lo[4][j], t_hi[4][j]);
    words::add(t_lo[2][j], t_hi[2][j], t_lo[3][j], t_hi[3][j], t_lo[5][j], t_hi[5][j]);
    words::add(t_lo[1][j], t_hi[1][j], t_lo[6][j], t_hi[6][j], t_lo[7][j], t_hi[7][j]);
    words::add(t_lo[2][j], t_hi[2][j], t_lo[6][j], t_hi[6][j], t_lo[8][j], t_hi[8][j]);
  }

  // Start at the highest occupied column pair of b.
  Word used = 0;
  for (std::size_t i = 0; i < N; ++i) used |= b_lo[i] | b_hi[i];
  if (used == 0) return;
  const std::size_t top = static_cast<std::size_t>(words::kBits - std::countl_zero(used));

  Word r_lo[kOut] = {}, r_hi[kOut] = {};
  for (std::size_t k = (top + 1) & ~std::size_t{1}; k != 0;) {
    k -= 2;
    for (std::size_t i = 0; i < N; ++i) {
      const Word lo2 = (b_lo[i] >> k) & 3;
      const Word hi2 = (b_hi[i] >> k) & 3;
      const std::size_t idx = (lo2 & 1) + 2 * (hi2 & 1) + 3 * ((lo2 >> 1) + 2 * (hi2 >> 1));
      const std::size_t len = i + kRow <= kOut ? kRow : kOut - i;
      for (std::size_t j = 0; j < len; ++j) {
        words::add(r_lo[i + j], r_hi[i + j], t_lo[idx][j], t_hi[idx][j], r_lo[i + j], r_hi[i + j]);
      }
    }
    if (k != 0) {
      for (std::size_t j = kOut - 1; j > 0; --j) {
        r_lo[j] = (r_lo[j] << 2) | (r_lo[j - 1] >> (words::kBits - 2));
        r_hi[j] = (r_hi[j] << 2) | (r_hi[j - 1] >> (words::kBits - 2));
      }
      r_lo[0] <<= 2;
      r_hi[0] <<= 2;
    }
  }
  words::add_into(out_lo, out_hi, r_lo, r_hi, kOut);
}

void comb_mul(const Word* a_lo, const Word* a_hi, const Word* b_lo, const Word* b_hi, std::size_t n, Word* out_lo,
              Word* out_hi) {
  switch (n) {
    case 1: return comb_mul_fixed<1>(a_lo, a_hi, b_lo, b_hi, out_lo, out_hi);
    case 2: return comb_mul_fixed<2>(a_lo, a_hi, b_lo, b_hi, out_lo, out_hi);
    case 3: return comb_mul_fixed<3>(a_lo, a_hi, b_lo, b_hi, out_lo, out_hi);
    default: return comb_mul_fixed<kTritWords>(a_lo, a_hi, b_lo, b_hi, out_lo, out_hi);
  }
}

// out[0 .. 2n) = a * b for n-word operands.
void karatsuba_mul(const Word* a_lo, const Word* a_hi, const Word* b_lo, const Word* b_hi, std::size_t n,
                   Word* out_lo, Word* out_hi) {
  std::fill(out_lo, out_lo + 2 * n, 0);
  std::fill(out_hi, out_hi + 2 * n, 0);
  if (n < 2) {
    comb_mul(a_lo, a_hi, b_lo, b_hi, n, out_lo, out_hi);
    return;
  }
  const std::size_t h = (n + 1) / 2;
  const std::size_t t = n - h;

  Word z0_lo[kWide], z0_hi[kWide];
  Word z2_lo[kWide], z2_hi[kWide];
  Word z1_lo[kWide], z1_hi[kWide];
  karatsuba_mul(a_lo, a_hi, b_lo, b_hi, h, z0_lo, z0_hi);

  // The high halves are padded to h words so all three products have 2h words.
  Word ah_lo[kTritWords] = {}, ah_hi[kTritWords] = {};
  Word bh_lo[kTritWords] = {}, bh_hi[kTritWords] = {};
  std::copy(a_lo + h, a_lo + n, ah_lo);
  std::copy(a_hi + h, a_hi + n, ah_hi);
  std::copy(b_lo + h, b_lo + n, bh_lo);
  std::copy(b_hi + h, b_hi + n, bh_hi);
  karatsuba_mul(ah_lo, ah_hi, bh_lo, bh_hi, h, z2_lo, z2_hi);

  Word sa_lo[kTritWords], sa_hi[kTritWords], sb_lo[kTritWords], sb_hi[kTritWords];
  for (std::size_t i = 0; i < h; ++i) {
    words::add(a_lo[i], a_hi[i], ah_lo[i], ah_hi[i], sa_lo[i], sa_hi[i]);
    words::add(b_lo[i], b_hi[i], bh_lo[i], bh_hi[i], sb_lo[i], sb_hi[i]);
  }
  karatsuba_mul(sa_lo, sa_hi, sb_lo, sb_hi, h, z1_lo, z1_hi);
  words::sub_into(z1_lo, z1_hi, z0_lo, z0_hi, 2 * h);
  words::sub_into(z1_lo, z1_hi, z2_lo, z2_hi, 2 * h);

  words::add_into(out_lo, out_hi, z0_lo, z0_hi, 2 * h);
  words::add_into(out_lo + h, out_hi + h, z1_lo, z1_hi, std::min(2 * h, 2 * n - h));
  words::add_into(out_lo + 2 * h, out_hi + 2 * h, z2_lo, z2_hi, 2 * t);
}

// dst = src >> shift (trits), producing dn words.
void shift_right(const Word* src_lo, const Word* src_hi, std::size_t sn, std::size_t shift, Word* dst_lo,
                 Word* dst_hi, std::size_t dn) {
  const std::size_t off = shift / words::kBits;
  const std::size_t b = shift % words::kBits;
  for (std::size_t i = 0; i < dn; ++i) {
    const std::size_t j = i + off;
    Word lo = j < sn ? src_lo[j] >> b : 0;
    Word hi = j < sn ? src_hi[j] >> b : 0;
    if (b != 0 && j + 1 < sn) {
      lo |= src_lo[j + 1] << (words::kBits - b);
      hi |= src_hi[j + 1] << (words::kBits - b);
    }
    dst_lo[i] = lo;
    dst_hi[i] = hi;
  }
}

// w += sign * (h << shift), sign = -1 when subtract.
void add_shifted(Word* w_lo, Word* w_hi, std::size_t wn, const Word* h_lo, const Word* h_hi, std::size_t hn,
                 std::size_t shift, bool subtract) {
  const std::size_t off = shift / words::kBits;
  const std::size_t b = shift % words::kBits;
  for (std::size_t i = 0; i <= hn; ++i) {
    const std::size_t idx = off + i;
    if (idx >= wn) break;
    Word lo = i < hn ? h_lo[i] << b : 0;
    Word hi = i < hn ? h_hi[i] << b : 0;
    if (b != 0 && i > 0) {
      lo |= h_lo[i - 1] >> (words::kBits - b);
      hi |= h_hi[i - 1] >> (words::kBits - b);
    }
    if (subtract) {
      words::sub(w_lo[idx], w_hi[idx], lo, hi, w_lo[idx], w_hi[idx]);
    } else {
      words::add(w_lo[idx], w_hi[idx], lo, hi, w_lo[idx], w_hi[idx]);
    }
  }
}

void clear_from(Word* lo, Word* hi, std::size_t n, std::size_t bit) {
  for (std::size_t w = bit / words::kBits; w < n; ++w) {
    const std::size_t first = w * words::kBits;
    const Word keep = bit > first ? words::low_mask(bit - first) : 0;
    lo[w] &= keep;
    hi[w] &= keep;
  }
}

std::uint8_t trit_at(const Word* lo, const Word* hi, std::size_t i) {
  const auto w = i / words::kBits;
  const auto b = i % words::kBits;
  return static_cast<std::uint8_t>(((lo[w] >> b) & 1) | (((hi[w] >> b) & 1) << 1));
}

}  // namespace

// --- FieldContext -----------------------------------------------------------

FieldContext::FieldContext(int m, TritVector modulus, MulOptions options)
    : m_(m), modulus_(modulus), options_(options), words_(words::words_for(static_cast<std::size_t>(m))) {
  if (modulus_.weight() == 3 && m_ > 1) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < static_cast<std::size_t>(m_); ++i) {
      if (modulus_.get(i) != 0) k = i;
    }
    if (k != 0 && modulus_.get(0) != 0) {
      trinomial_ = true;
      tri_k_ = k;
      tri_ck_ = modulus_.get(k);
      tri_c0_ = modulus_.get(0);
    }
  }
}

std::shared_ptr<const FieldContext> FieldContext::create(int m, std::span<const std::uint8_t> modulus,
                                                         MulOptions options) {
  if (m < 1 || m > kMaxDegree) {
    throw Error(ErrorCode::kInvalidModulus, "degree " + std::to_string(m) + " out of range 1.." +
                                                std::to_string(kMaxDegree));
  }
  if (modulus.size() != static_cast<std::size_t>(m) + 1 || modulus.back() != 1) {
    throw Error(ErrorCode::kInvalidModulus, "modulus must be monic of degree " + std::to_string(m));
  }
  if (m % 2 == 0) {
    throw Error(ErrorCode::kRejectEvenDegree, "m = " + std::to_string(m) + " is even; y^2 + 1 would split");
  }
  const poly3::Poly f(modulus.begin(), modulus.end());
  for (auto c : f) {
    if (c > 2) throw Error(ErrorCode::kInvalidModulus, "coefficient out of range");
  }
  if (!poly3::is_irreducible(f)) {
    throw Error(ErrorCode::kRejectReducible, "modulus is reducible over F_3");
  }
  return std::shared_ptr<const FieldContext>(new FieldContext(m, TritVector::from_digits(modulus), options));
}

std::shared_ptr<const FieldContext> FieldContext::create(const TritVector& modulus, MulOptions options) {
  const auto d = modulus.digits();
  return create(static_cast<int>(d.size()) - 1, d, options);
}

Gf3mElem FieldContext::zero() const { return Gf3mElem(this, TritVector(static_cast<std::size_t>(m_))); }

Gf3mElem FieldContext::one() const { return constant(1); }

Gf3mElem FieldContext::constant(std::uint8_t c) const {
  TritVector v(static_cast<std::size_t>(m_));
  v.set(0, c % 3);
  return Gf3mElem(this, v);
}

Gf3mElem FieldContext::monomial(std::size_t k) const {
  poly3::Poly p(k + 1, 0);
  p[k] = 1;
  return from_digits(p);
}

Gf3mElem FieldContext::from_digits(std::span<const std::uint8_t> digits) const {
  poly3::Poly p(digits.begin(), digits.end());
  for (auto& c : p) c %= 3;
  p = poly3::mod(std::move(p), modulus_.digits());
  TritVector v(static_cast<std::size_t>(m_));
  for (std::size_t i = 0; i < p.size(); ++i) v.set(i, p[i]);
  return Gf3mElem(this, v);
}

Gf3mElem FieldContext::parse(std::string_view text) const {
  if (text.size() != static_cast<std::size_t>(m_)) {
    throw Error(ErrorCode::kParseError,
                "expected " + std::to_string(m_) + " trits, got " + std::to_string(text.size()));
  }
  return Gf3mElem(this, TritVector::parse(text));
}

std::string FieldContext::modulus_string() const {
  std::string out;
  for (int i = m_; i >= 0; --i) {
    const auto c = modulus_.get(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c == 2 || i == 0) out += std::to_string(c);
    if (i >= 1) out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

void FieldContext::reduce_wide(Word* lo, Word* hi, std::size_t len, TritVector& out) const {
  const auto m = static_cast<std::size_t>(m_);
  if (trinomial_) {
    // x^m = -c_k x^k - c_0; fold the part above x^m until nothing is left.
    Word h_lo[kWide], h_hi[kWide];
    while (len > m) {
      const std::size_t hn = words::words_for(len - m);
      shift_right(lo, hi, kWide, m, h_lo, h_hi, hn);
      bool any = false;
      for (std::size_t i = 0; i < hn; ++i) any = any || (h_lo[i] | h_hi[i]);
      if (!any) break;
      clear_from(lo, hi, kWide, m);
      add_shifted(lo, hi, kWide, h_lo, h_hi, hn, tri_k_, tri_ck_ == 1);
      add_shifted(lo, hi, kWide, h_lo, h_hi, hn, 0, tri_c0_ == 1);
      len = std::max(m, len - m + tri_k_);
    }
  } else if (len > m) {
    // Schoolbook long division, one trit at a time from the top.
    const auto& f = modulus_;
    Word t_lo[kTritWords] = {}, t_hi[kTritWords] = {};
    std::copy(f.lo().begin(), f.lo().end(), t_lo);
    std::copy(f.hi().begin(), f.hi().end(), t_hi);
    clear_from(t_lo, t_hi, kTritWords, m);
    for (std::size_t i = len; i-- > m;) {
      const auto t = trit_at(lo, hi, i);
      if (t == 0) continue;
      // x^i = x^{i-m} * (x^m - f) and x^m - f = -tail.
      add_shifted(lo, hi, kWide, t_lo, t_hi, kTritWords, i - m, t == 1);
      clear_from(lo, hi, kWide, i);
    }
  }
  TritVector r(m);
  for (std::size_t w = 0; w < words_; ++w) {
    r.lo()[w] = lo[w];
    r.hi()[w] = hi[w];
  }
  const std::size_t tail_bits = m % words::kBits;
  if (tail_bits != 0) {
    r.lo()[words_ - 1] &= words::low_mask(tail_bits);
    r.hi()[words_ - 1] &= words::low_mask(tail_bits);
  }
  out = r;
}

// --- element arithmetic ------------------------------------------------------

bool Gf3mElem::is_one() const {
  if (ctx_ == nullptr) return false;
  return coeffs_ == ctx_->one().coeffs_;
}

Gf3mElem add(const Gf3mElem& a, const Gf3mElem& b) {
  require_same(a, b);
  Gf3mElem r(a.ctx_, a.coeffs_);
  const std::size_t n = a.ctx_->words();
  words::add_into(r.coeffs_.lo().data(), r.coeffs_.hi().data(), b.coeffs_.lo().data(), b.coeffs_.hi().data(), n);
  return r;
}

Gf3mElem sub(const Gf3mElem& a, const Gf3mElem& b) {
  require_same(a, b);
  Gf3mElem r(a.ctx_, a.coeffs_);
  const std::size_t n = a.ctx_->words();
  words::sub_into(r.coeffs_.lo().data(), r.coeffs_.hi().data(), b.coeffs_.lo().data(), b.coeffs_.hi().data(), n);
  return r;
}

Gf3mElem neg(const Gf3mElem& a) { return Gf3mElem(a.ctx_, a.coeffs_.negated()); }

Gf3mElem mul(const Gf3mElem& a, const Gf3mElem& b, OpCounter& counter) {
  require_same(a, b);
  ++counter.base_muls;
  const FieldContext& ctx = *a.ctx_;
  const std::size_t n = ctx.words();

  Word lo[kWide] = {}, hi[kWide] = {};
  const auto& x = a.coeffs_;
  const auto& y = b.coeffs_;
  if (n >= 2 && static_cast<std::size_t>(ctx.degree()) > ctx.options().karatsuba_threshold) {
    karatsuba_mul(x.lo().data(), x.hi().data(), y.lo().data(), y.hi().data(), n, lo, hi);
  } else {
    comb_mul(x.lo().data(), x.hi().data(), y.lo().data(), y.hi().data(), n, lo, hi);
  }
  Gf3mElem r(a.ctx_, TritVector{});
  ctx.reduce_wide(lo, hi, 2 * static_cast<std::size_t>(ctx.degree()) - 1, r.coeffs_);
  return r;
}

Gf3mElem inv(const Gf3mElem& a) {
  if (a.context() == nullptr || a.is_zero()) throw Error(ErrorCode::kZeroInverse, "inverse of zero");
  const FieldContext& ctx = *a.context();
  using poly3::Poly;
  // Extended Euclid on (f, a), tracking the Bezout coefficient of a.
  Poly r0 = ctx.modulus().digits();
  Poly r1 = a.coeffs().digits();
  poly3::trim(r1);
  Poly t0{}, t1{1};
  while (!r1.empty()) {
    // Divide r0 by r1.
    Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    Poly rem = r0;
    const std::uint8_t lead_inv = r1.back();  // 1 -> 1, 2 -> 2
    while (rem.size() >= r1.size() && !rem.empty()) {
      const std::size_t shift = rem.size() - r1.size();
      const auto c = static_cast<std::uint8_t>((rem.back() * lead_inv) % 3);
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] = static_cast<std::uint8_t>((rem[shift + i] + 3 * 3 - c * r1[i]) % 3);
      poly3::trim(rem);
    }
    // t2 = t0 - q * t1
    Poly qt(q.size() + t1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < t1.size(); ++j) qt[i + j] = static_cast<std::uint8_t>((qt[i + j] + q[i] * t1[j]) % 3);
    }
    Poly t2(std::max(t0.size(), qt.size()), 0);
    for (std::size_t i = 0; i < t2.size(); ++i) {
      const int u = i < t0.size() ? t0[i] : 0;
      const int v = i < qt.size() ? qt[i] : 0;
      t2[i] = static_cast<std::uint8_t>(((u - v) % 3 + 3) % 3);
    }
    poly3::trim(t2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant c; the inverse is t0 / c.
  assert(r0.size() == 1);
  const std::uint8_t c = r0[0];
  for (auto& d : t0) d = static_cast<std::uint8_t>((d * c) % 3);  // c^{-1} = c in F_3
  return ctx.from_digits(t0);
}

Gf3mElem pow(const Gf3mElem& a, std::uint64_t e) {
  Gf3mElem result = a.context()->one();
  Gf3mElem base = a;
  while (e != 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Gf3mElem random_element(const FieldContext& ctx, std::mt19937_64& rng) {
  std::vector<std::uint8_t> d(static_cast<std::size_t>(ctx.degree()));
  for (auto& t : d) t = static_cast<std::uint8_t>(rng() % 3);
  return ctx.from_digits(d);
}

// --- poly3 -------------------------------------------------------------------

namespace poly3 {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mod(Poly a, const Poly& f_in) {
  Poly f = f_in;
  trim(f);
  trim(a);
  assert(!f.empty());
  const std::uint8_t lead_inv = f.back();
  while (a.size() >= f.size()) {
    const std::size_t shift = a.size() - f.size();
    const auto c = static_cast<std::uint8_t>((a.back() * lead_inv) % 3);
    for (std::size_t i = 0; i < f.size(); ++i) {
      a[shift + i] = static_cast<std::uint8_t>((a[shift + i] + 9 - c * f[i]) % 3);
    }
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f) {
  if (a.empty() || b.empty()) return {};
  Poly p(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) p[i + j] = static_cast<std::uint8_t>((p[i + j] + a[i] * b[j]) % 3);
  }
  return mod(std::move(p), f);
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  // Normalise to monic.
  if (!a.empty() && a.back() == 2) {
    for (auto& c : a) c = static_cast<std::uint8_t>((c * 2) % 3);
  }
  return a;
}

bool is_irreducible(const Poly& f_in) {
  Poly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  Poly h = mod(Poly{0, 1}, f);
  for (std::size_t i = 1; i <= d / 2; ++i) {
    h = mulmod(mulmod(h, h, f), h, f);  // h <- h^3
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<std::uint8_t>((diff[1] + 2) % 3);  // minus x
    trim(diff);
    if (diff.empty()) return false;  // x^{3^i} = x mod f with i <= d/2
    if (gcd(diff, f).size() > 1) return false;
  }
  return true;
}

}  // namespace poly3

TritVector find_irreducible_trinomial(int m) {
  if (m < 2 || m > kMaxDegree) throw Error(ErrorCode::kRejectReducible, "no trinomial of degree " + std::to_string(m));
  const auto mm = static_cast<std::size_t>(m);
  for (std::size_t k = 1; k < mm; ++k) {
    for (std::uint8_t a = 1; a <= 2; ++a) {
      for (std::uint8_t b = 1; b <= 2; ++b) {
        poly3::Poly f(mm + 1, 0);
        f[mm] = 1;
        f[k] = a;
        f[0] = b;
        if (poly3::is_irreducible(f)) return TritVector::from_digits(f);
      }
    }
  }
  throw Error(ErrorCode::kRejectReducible, "no irreducible trinomial of degree " + std::to_string(m));
}

TritVector default_modulus(int m) {
  if (m == 1) {
    const std::uint8_t f[] = {1, 1};
    return TritVector::from_digits(f);
  }
  if (m == 97) {
    std::vector<std::uint8_t> f(98, 0);
    f[97] = 1;
    f[16] = 1;
    f[0] = 2;
    return TritVector::from_digits(f);
  }
  return find_irreducible_trinomial(m);
}

std::shared_ptr<const FieldContext> default_context(int m, MulOptions options) {
  if (m % 2 == 0) throw Error(ErrorCode::kRejectEvenDegree, "m = " + std::to_string(m) + " is even");
  return FieldContext::create(default_modulus(m), options);
}

}  // namespace gf3
