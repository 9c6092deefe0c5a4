#include "compdist/bignat.hpp"

#include <algorithm>
#include <cmath>

#include "compdist/errors.hpp"

namespace compdist {

namespace {
constexpr std::uint64_t kDecimalChunk = 10'000'000'000'000'000'000ull;  // 10^19
constexpr int kDecimalChunkDigits = 19;
}  // namespace

BigNat::BigNat(std::uint64_t value) {
  if (value != 0) limbs_.push_back(value);
}

BigNat BigNat::power_of_two(std::uint64_t exponent) {
  BigNat out;
  out.limbs_.assign(exponent / 64 + 1, 0);
  out.limbs_.back() = 1ull << (exponent % 64);
  return out;
}

std::size_t BigNat::bit_length() const noexcept {
  if (limbs_.empty()) return 0;
  std::uint64_t top = limbs_.back();
  std::size_t bits = 0;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return 64 * (limbs_.size() - 1) + bits;
}

void BigNat::trim() noexcept {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
  if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  unsigned __int128 carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    carry += limbs_[i];
    if (i < rhs.limbs_.size()) carry += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint64_t>(carry);
    carry >>= 64;
    if (carry == 0 && i >= rhs.limbs_.size()) return *this;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
  return *this;
}

BigNat& BigNat::operator-=(const BigNat& rhs) {
  if (*this < rhs) throw InvariantError("BigNat subtraction would underflow");
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    const std::uint64_t sub = (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
    const std::uint64_t before = limbs_[i];
    const std::uint64_t mid = before - sub;
    const std::uint64_t after = mid - borrow;
    borrow = (before < sub) || (mid < borrow) ? 1 : 0;
    limbs_[i] = after;
    if (borrow == 0 && i >= rhs.limbs_.size()) break;
  }
  trim();
  return *this;
}

BigNat& BigNat::operator*=(std::uint64_t factor) {
  if (factor == 0) {
    limbs_.clear();
    return *this;
  }
  unsigned __int128 carry = 0;
  for (auto& limb : limbs_) {
    carry += static_cast<unsigned __int128>(limb) * factor;
    limb = static_cast<std::uint64_t>(carry);
    carry >>= 64;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
  return *this;
}

BigNat& BigNat::operator<<=(std::uint64_t shift) {
  if (is_zero() || shift == 0) return *this;
  const std::size_t limb_shift = shift / 64;
  const unsigned bit_shift = static_cast<unsigned>(shift % 64);
  const std::size_t old_size = limbs_.size();
  limbs_.resize(old_size + limb_shift + (bit_shift != 0 ? 1 : 0), 0);
  for (std::size_t i = old_size; i-- > 0;) {
    const std::uint64_t value = limbs_[i];
    limbs_[i] = 0;
    if (bit_shift == 0) {
      limbs_[i + limb_shift] = value;
    } else {
      limbs_[i + limb_shift + 1] |= value >> (64 - bit_shift);
      limbs_[i + limb_shift] |= value << bit_shift;
    }
  }
  trim();
  return *this;
}

std::strong_ordering BigNat::operator<=>(const BigNat& rhs) const noexcept {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() <=> rhs.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

double BigNat::to_double_scaled(int exponent) const noexcept {
  if (limbs_.empty()) return 0.0;
  const std::size_t k = limbs_.size();
  if (k == 1) return std::ldexp(static_cast<double>(limbs_[0]), exponent);
  // Top two limbs carry >= 65 significant bits; everything below them is
  // smaller than half an ulp of the result.
  const double mantissa = std::ldexp(static_cast<double>(limbs_[k - 1]), 64) +
                          static_cast<double>(limbs_[k - 2]);
  const long long scale = 64ll * static_cast<long long>(k - 2) + exponent;
  return std::ldexp(mantissa, static_cast<int>(scale));
}

std::string BigNat::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint64_t> work = limbs_;
  std::string out;
  while (!work.empty()) {
    unsigned __int128 rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      const unsigned __int128 cur = (rem << 64) | work[i];
      work[i] = static_cast<std::uint64_t>(cur / kDecimalChunk);
      rem = cur % kDecimalChunk;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    std::uint64_t chunk = static_cast<std::uint64_t>(rem);
    for (int d = 0; d < kDecimalChunkDigits; ++d) {
      out.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
      if (work.empty() && chunk == 0) break;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace compdist
