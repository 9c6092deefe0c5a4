#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace compdist {

/// Arbitrary-precision unsigned integer stored as little-endian 64-bit
/// limbs.  Supports exactly what the counting code needs: addition,
/// subtraction of a smaller value, multiplication by a machine word,
/// shifts, decimal rendering and conversion to double with a binary
/// exponent.
class BigNat {
 public:
  BigNat() = default;
  explicit BigNat(std::uint64_t value);

  static BigNat power_of_two(std::uint64_t exponent);

  bool is_zero() const noexcept { return limbs_.empty(); }

  /// Number of significant bits; 0 for the value 0.
  std::size_t bit_length() const noexcept;

  BigNat& operator+=(const BigNat& rhs);
  /// Requires *this >= rhs; throws InvariantError otherwise.
  BigNat& operator-=(const BigNat& rhs);
  BigNat& operator*=(std::uint64_t factor);
  BigNat& operator<<=(std::uint64_t shift);

  friend BigNat operator+(BigNat lhs, const BigNat& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BigNat operator-(BigNat lhs, const BigNat& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend BigNat operator*(BigNat lhs, std::uint64_t rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend BigNat operator<<(BigNat lhs, std::uint64_t shift) {
    lhs <<= shift;
    return lhs;
  }

  std::strong_ordering operator<=>(const BigNat& rhs) const noexcept;
  bool operator==(const BigNat& rhs) const noexcept = default;

  /// value * 2^exponent rounded to double.  Relative error is at most a
  /// couple of ulps (the top 128 bits are used for the mantissa).
  double to_double_scaled(int exponent) const noexcept;
  double to_double() const noexcept { return to_double_scaled(0); }

  /// Decimal representation.
  std::string to_string() const;

 private:
  void trim() noexcept;

  std::vector<std::uint64_t> limbs_;  // little-endian, no high zero limbs
};

}  // namespace compdist
