#include "compdist/composition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "compdist/errors.hpp"

namespace compdist {

namespace {

void check_enumerable(std::int64_t n, std::int64_t cap) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (cap > 62) throw std::invalid_argument("enumeration cap above 62 is not representable");
  if (n > cap)
    throw ResourceLimitError("n = " + std::to_string(n) +
                             " exceeds the enumeration cap of " + std::to_string(cap));
}

}  // namespace

Composition make_composition(std::int64_t total, std::vector<std::int64_t> parts) {
  if (total < 1) throw std::invalid_argument("composition total must be >= 1");
  std::int64_t sum = 0;
  for (const std::int64_t p : parts) {
    if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
    sum += p;
  }
  if (sum != total) throw std::invalid_argument("composition parts must sum to the total");
  return Composition{total, std::move(parts)};
}

std::int64_t distinct_part_count(const Composition& c) {
  // Small enough values fit a 64-bit presence mask; anything larger (only
  // a clipped final part can realistically be) goes through the slow path.
  std::uint64_t mask = 0;
  std::vector<std::int64_t> large;
  for (const std::int64_t p : c.parts) {
    if (p <= 64) {
      mask |= std::uint64_t{1} << (p - 1);
    } else if (std::find(large.begin(), large.end(), p) == large.end()) {
      large.push_back(p);
    }
  }
  return std::popcount(mask) + static_cast<std::int64_t>(large.size());
}

BitString to_bitstring(const Composition& c) {
  BitString out;
  out.bits.assign(static_cast<std::size_t>(c.total), 0);
  std::int64_t cursor = 0;
  for (const std::int64_t p : c.parts) {
    cursor += p;
    out.bits[static_cast<std::size_t>(cursor - 1)] = 1;
  }
  return out;
}

Composition from_bitstring(const BitString& b) {
  if (b.bits.empty() || b.bits.back() != 1)
    throw std::invalid_argument("bit string must be nonempty and end in 1");
  Composition out;
  out.total = static_cast<std::int64_t>(b.bits.size());
  std::int64_t previous = 0;
  for (std::int64_t pos = 1; pos <= out.total; ++pos) {
    if (b.bits[static_cast<std::size_t>(pos - 1)] != 0) {
      out.parts.push_back(pos - previous);
      previous = pos;
    }
  }
  return out;
}

Composition composition_at(std::int64_t n, std::uint64_t index) {
  Composition out;
  out.total = n;
  std::int64_t previous = 0;
  for (std::int64_t pos = 1; pos < n; ++pos) {
    if ((index >> (n - 1 - pos)) & 1u) {
      out.parts.push_back(pos - previous);
      previous = pos;
    }
  }
  out.parts.push_back(n - previous);
  return out;
}

CompositionRange::CompositionRange(std::int64_t n, std::int64_t cap) : n_(n) {
  check_enumerable(n, cap);
}

CompositionRange::iterator::iterator(std::int64_t n, std::uint64_t index)
    : n_(n), index_(index) {
  if (*this != std::default_sentinel) current_ = composition_at(n_, index_);
}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
  ++index_;
  if (*this != std::default_sentinel) current_ = composition_at(n_, index_);
  return *this;
}

RationalExpectation brute_force_expectation(std::int64_t n, std::int64_t cap) {
  check_enumerable(n, cap);
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::uint64_t total_distinct = 0;
  for (std::uint64_t index = 0; index < count; ++index) {
    // Decode the gap structure directly; parts of a composition of n <= 62
    // always fit the 64-bit presence mask.
    std::uint64_t mask = 0;
    std::int64_t previous = 0;
    for (std::int64_t pos = 1; pos < n; ++pos) {
      if ((index >> (n - 1 - pos)) & 1u) {
        mask |= std::uint64_t{1} << (pos - previous - 1);
        previous = pos;
      }
    }
    mask |= std::uint64_t{1} << (n - previous - 1);
    total_distinct += static_cast<std::uint64_t>(std::popcount(mask));
  }
  return RationalExpectation{BigNat(total_distinct), n - 1};
}

}  // namespace compdist
