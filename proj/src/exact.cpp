#include "compdist/exact.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "compdist/errors.hpp"
#include "compdist/series.hpp"

namespace compdist {

namespace {

/// Fills a[0..n] with the avoidance counts a_m(0..n) for one forbidden
/// size m.  The vector is reused across calls so limb buffers keep their
/// capacity.
void avoidance_row(std::int64_t m, std::int64_t n, std::vector<BigNat>& a) {
  a.resize(static_cast<std::size_t>(n) + 1);
  a[0] = BigNat(1);
  BigNat prefix(1);  // sum of a[0..i-1]
  for (std::int64_t i = 1; i <= n; ++i) {
    auto& slot = a[static_cast<std::size_t>(i)];
    slot = prefix;
    if (i >= m) slot -= a[static_cast<std::size_t>(i - m)];
    prefix += slot;
  }
}

void check_bigint_n(std::int64_t n, std::int64_t cap) {
  if (n > cap)
    throw ResourceLimitError("n = " + std::to_string(n) +
                             " exceeds the big-int cap of " + std::to_string(cap));
}

/// Rescaled avoidance probability p_m(n) = a_m(n) / 2^(n-1).  The running
/// prefix R(n) = sum_{i<n} a_m(i) / 2^(n-1) obeys R(n+1) = (R(n)+p(n))/2,
/// which keeps every stored value inside [0,1].
double scaled_avoidance_tail(std::int64_t m, std::int64_t n, std::vector<double>& p) {
  p.assign(static_cast<std::size_t>(n) + 1, 0.0);
  double running = 1.0;  // R(1)
  for (std::int64_t i = 1; i <= n; ++i) {
    double value = running;
    if (i > m)
      value -= std::ldexp(p[static_cast<std::size_t>(i - m)], static_cast<int>(-m));
    else if (i == m)
      value -= std::ldexp(1.0, static_cast<int>(-(i - 1)));
    p[static_cast<std::size_t>(i)] = value;
    running = 0.5 * (running + value);
  }
  return p[static_cast<std::size_t>(n)];
}

}  // namespace

BigNat count_avoiding(std::int64_t m, std::int64_t n, std::int64_t bigint_cap) {
  if (m < 1) throw std::invalid_argument("forbidden part size m must be >= 1");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  check_bigint_n(n, bigint_cap);
  std::vector<BigNat> a;
  avoidance_row(m, n, a);
  return a[static_cast<std::size_t>(n)];
}

ExactExpectationRecord exact_expectation(std::int64_t n, std::int64_t bigint_cap) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > bigint_cap) return scaled_float_expectation(n);

  // E D_n = sum_{m=1..n} (2^(n-1) - a_m(n)) / 2^(n-1).
  BigNat numerator = BigNat(static_cast<std::uint64_t>(n))
                     << static_cast<std::uint64_t>(n - 1);
  BigNat avoid_sum;
  std::vector<BigNat> a;
  for (std::int64_t m = 1; m <= n; ++m) {
    avoidance_row(m, n, a);
    avoid_sum += a[static_cast<std::size_t>(n)];
  }
  numerator -= avoid_sum;

  ExactExpectationRecord out;
  out.n = n;
  out.exact = RationalExpectation{std::move(numerator), n - 1};
  out.float_value = out.exact->to_double();
  out.mode = ExpectationMode::bigint;
  return out;
}

ExactExpectationRecord scaled_float_expectation(std::int64_t n, std::int64_t float_cap) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > float_cap)
    throw ResourceLimitError("n = " + std::to_string(n) +
                             " exceeds the scaled-float cap of " + std::to_string(float_cap));
  double expectation = 0.0;
  std::vector<double> p;
  for (std::int64_t m = 1; m <= n; ++m) {
    expectation += 1.0 - scaled_avoidance_tail(m, n, p);
  }
  ExactExpectationRecord out;
  out.n = n;
  out.float_value = expectation;
  out.mode = ExpectationMode::scaled_float;
  return out;
}

double geometric_prefix_expectation(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  SeriesConfig cfg;
  cfg.tolerance = 1e-13;  // well under the 1e-12 contract
  return distinct_series_sum(static_cast<double>(k), cfg).value - 1.0;
}

std::vector<ExpectationTableEntry> expectation_table(std::span<const std::int64_t> ns,
                                                     std::int64_t bigint_cap,
                                                     std::int64_t float_cap) {
  if (ns.empty()) throw std::invalid_argument("empty batch");
  std::vector<ExpectationTableEntry> out;
  out.reserve(ns.size());
  for (const std::int64_t n : ns) {
    ExpectationTableEntry entry;
    entry.n = n;
    try {
      if (n <= bigint_cap) {
        entry.record = exact_expectation(n, bigint_cap);
      } else {
        entry.record = scaled_float_expectation(n, float_cap);
      }
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace compdist
