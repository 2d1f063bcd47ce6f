#include "gf3/trit_vector.hpp"

#include <bit>
#include <cassert>
#include <utility>

#include "gf3/errors.hpp"

namespace gf3 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRejectReducible: return "RejectReducible";
    case ErrorCode::kRejectEvenDegree: return "RejectEvenDegree";
    case ErrorCode::kInvalidModulus: return "InvalidModulus";
    case ErrorCode::kContextMismatch: return "ContextMismatch";
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicatePoints: return "DuplicatePoints";
    case ErrorCode::kWrongOrder: return "WrongOrder";
    case ErrorCode::kNonInvertibleSize: return "NonInvertibleSize";
    case ErrorCode::kDegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::kSchemeFieldMismatch: return "SchemeFieldMismatch";
    case ErrorCode::kBadPrime: return "BadPrime";
    case ErrorCode::kUnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

TritVector::TritVector(std::size_t len) : len_(static_cast<std::uint32_t>(len)) {
  if (len > kMaxTrits) {
    throw Error(ErrorCode::kInvalidModulus,
                "trit vector length " + std::to_string(len) + " exceeds " + std::to_string(kMaxTrits));
  }
}

TritVector TritVector::from_digits(std::span<const std::uint8_t> digits) {
  TritVector v(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] > 2) throw Error(ErrorCode::kParseError, "digit out of range at " + std::to_string(i));
    v.set(i, digits[i]);
  }
  return v;
}

TritVector TritVector::parse(std::string_view text) {
  if (text.size() > kMaxTrits) throw Error(ErrorCode::kParseError, "trit string too long");
  TritVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '2') {
      throw Error(ErrorCode::kParseError, "invalid trit '" + std::string(1, c) + "' in \"" + std::string(text) + "\"");
    }
    v.set(i, static_cast<std::uint8_t>(c - '0'));
  }
  return v;
}

std::uint8_t TritVector::get(std::size_t i) const {
  assert(i < len_);
  const auto w = i / words::kBits;
  const auto b = i % words::kBits;
  return static_cast<std::uint8_t>(((lo_[w] >> b) & 1) | (((hi_[w] >> b) & 1) << 1));
}

void TritVector::set(std::size_t i, std::uint8_t trit) {
  assert(i < len_ && trit <= 2);
  const auto w = i / words::kBits;
  const words::Word bit = words::Word{1} << (i % words::kBits);
  lo_[w] &= ~bit;
  hi_[w] &= ~bit;
  if (trit == 1) lo_[w] |= bit;
  if (trit == 2) hi_[w] |= bit;
}

int TritVector::degree() const {
  for (std::size_t w = kTritWords; w-- > 0;) {
    const auto any = lo_[w] | hi_[w];
    if (any) return static_cast<int>(w * words::kBits + (words::kBits - 1 - std::countl_zero(any)));
  }
  return -1;
}

bool TritVector::is_zero() const { return degree() < 0; }

std::size_t TritVector::weight() const {
  std::size_t n = 0;
  for (std::size_t w = 0; w < kTritWords; ++w) n += static_cast<std::size_t>(std::popcount(lo_[w] | hi_[w]));
  return n;
}

std::string TritVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) s[i] = static_cast<char>('0' + get(i));
  return s;
}

std::vector<std::uint8_t> TritVector::digits() const {
  std::vector<std::uint8_t> d(len_);
  for (std::size_t i = 0; i < len_; ++i) d[i] = get(i);
  return d;
}

TritVector TritVector::negated() const {
  TritVector r = *this;
  std::swap(r.lo_, r.hi_);
  return r;
}

bool TritVector::well_formed() const {
  for (std::size_t w = 0; w < kTritWords; ++w) {
    if (lo_[w] & hi_[w]) return false;
    const std::size_t first = w * words::kBits;
    const std::size_t live = len_ > first ? len_ - first : 0;
    const auto tail = ~words::low_mask(live);
    if ((lo_[w] | hi_[w]) & tail) return false;
  }
  return true;
}

}  // namespace gf3
