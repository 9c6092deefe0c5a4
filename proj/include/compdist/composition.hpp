#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "compdist/bignat.hpp"

namespace compdist {

/// Enumerating all 2^(n-1) compositions of n is exponential; refuse above
/// this many parts unless the caller raises the guard explicitly.
inline constexpr std::int64_t kDefaultEnumerationCap = 25;

/// An ordered sequence of positive parts summing to `total`.
struct Composition {
  std::int64_t total = 0;
  std::vector<std::int64_t> parts;

  bool operator==(const Composition&) const = default;
};

/// Builds a composition and validates its invariants (parts >= 1, sum
/// equals total).  Throws std::invalid_argument on violation.
Composition make_composition(std::int64_t total, std::vector<std::int64_t> parts);

/// 0/1 string of length n whose final element is 1.  Bit p (1-based) is 1
/// exactly at the cumulative part sums of the associated composition, so
/// the parts are the waiting times between consecutive 1s.
struct BitString {
  std::vector<std::uint8_t> bits;

  bool operator==(const BitString&) const = default;
};

/// Number of distinct values among the parts.
std::int64_t distinct_part_count(const Composition& c);

BitString to_bitstring(const Composition& c);

/// Inverse of to_bitstring.  Throws std::invalid_argument if the string is
/// empty or does not end in 1.
Composition from_bitstring(const BitString& b);

/// Compositions of n indexed by their bit strings read as (n-1)-bit
/// big-endian integers; iteration is therefore lexicographic over bit
/// strings.  Index i corresponds to bits b_1..b_{n-1} with b_1 the most
/// significant bit of i, and b_n = 1 always.
Composition composition_at(std::int64_t n, std::uint64_t index);

/// Lazily yields every composition of n exactly once, in lexicographic
/// bit-string order.  Throws std::invalid_argument for n < 1 and
/// ResourceLimitError for n above the cap.
class CompositionRange {
 public:
  explicit CompositionRange(std::int64_t n, std::int64_t cap = kDefaultEnumerationCap);

  class iterator {
   public:
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(std::int64_t n, std::uint64_t index);

    const Composition& operator*() const { return current_; }
    const Composition* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.index_ >= (std::uint64_t{1} << (it.n_ - 1));
    }

   private:
    std::int64_t n_;
    std::uint64_t index_;
    Composition current_;
  };

  iterator begin() const { return iterator(n_, 0); }
  std::default_sentinel_t end() const { return {}; }

  /// Exactly 2^(n-1).
  std::uint64_t size() const { return std::uint64_t{1} << (n_ - 1); }

 private:
  std::int64_t n_;
};

inline CompositionRange enumerate_compositions(std::int64_t n,
                                               std::int64_t cap = kDefaultEnumerationCap) {
  return CompositionRange(n, cap);
}

/// Exact expectation value stored as numerator / 2^denominator_log2.  The
/// denominator is kept as the full 2^(n-1) without reduction so numerators
/// are directly comparable across implementations.
struct RationalExpectation {
  BigNat numerator;
  std::int64_t denominator_log2 = 0;

  BigNat denominator() const {
    return BigNat::power_of_two(static_cast<std::uint64_t>(denominator_log2));
  }
  double to_double() const {
    return numerator.to_double_scaled(static_cast<int>(-denominator_log2));
  }

  bool operator==(const RationalExpectation&) const = default;
};

/// Mean number of distinct part sizes over all compositions of n, computed
/// by full enumeration.  The reference oracle for the dynamic-programming
/// route; subject to the enumeration cap.
RationalExpectation brute_force_expectation(std::int64_t n,
                                            std::int64_t cap = kDefaultEnumerationCap);

}  // namespace compdist
