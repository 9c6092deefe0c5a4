#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "compdist/bignat.hpp"
#include "compdist/composition.hpp"

namespace compdist {

/// The avoidance-count DP is O(n^2) big-integer additions on ~n-bit
/// numbers; 4096 keeps a full expectation under a few seconds.
inline constexpr std::int64_t kDefaultBigintCap = 4096;

/// The rescaled floating-point DP is O(n^2) flops.
inline constexpr std::int64_t kDefaultScaledFloatCap = std::int64_t{1} << 16;

/// a_m(n): number of compositions of n with no part equal to m.
/// a_m(0) = 1 (the empty composition); a_m(n) = 2^(n-1) whenever m > n.
/// Computed by the prefix-sum recurrence
///   a_m(n) = sum_{i<n} a_m(i) - [m <= n] a_m(n-m).
BigNat count_avoiding(std::int64_t m, std::int64_t n,
                      std::int64_t bigint_cap = kDefaultBigintCap);

enum class ExpectationMode { bigint, scaled_float };

struct ExactExpectationRecord {
  std::int64_t n = 0;
  /// Engaged in bigint mode only; denominator is exactly 2^(n-1).
  std::optional<RationalExpectation> exact;
  double float_value = 0.0;
  ExpectationMode mode = ExpectationMode::bigint;
};

/// Mean number of distinct part sizes over the uniform compositions of n,
/// as the exact rational sum_{m=1..n} (1 - a_m(n)/2^(n-1)).  Requests above
/// the big-int cap are answered by the rescaled floating-point DP instead.
ExactExpectationRecord exact_expectation(std::int64_t n,
                                         std::int64_t bigint_cap = kDefaultBigintCap);

/// Same dynamic program with counts carried as probabilities
/// a_m(i) / 2^(i-1), renormalized by one halving per step so every stored
/// value stays in [0,1].  Agrees with the big-int route to ~1e-12 relative.
ExactExpectationRecord scaled_float_expectation(std::int64_t n,
                                                std::int64_t float_cap = kDefaultScaledFloatCap);

/// Expected number of non-colliding values among Gamma_2..Gamma_k for
/// i.i.d. Geometric(1/2) draws:
///   sum_{i=2..k} P(Gamma_i != Gamma_j, j<i) = sum_m {1-(1-2^-m)^k} - 1,
/// evaluated by truncated series with absolute error <= 1e-12.
double geometric_prefix_expectation(std::int64_t k);

struct ExpectationTableEntry {
  std::int64_t n = 0;
  std::optional<ExactExpectationRecord> record;
  std::string error;  // nonempty when the entry failed
};

/// One record per requested n, in input order.  Per-entry failures are
/// reported in place without aborting the batch; an empty batch throws.
std::vector<ExpectationTableEntry> expectation_table(
    std::span<const std::int64_t> ns, std::int64_t bigint_cap = kDefaultBigintCap,
    std::int64_t float_cap = kDefaultScaledFloatCap);

}  // namespace compdist
