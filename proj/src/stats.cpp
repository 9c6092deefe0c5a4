#include "compdist/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "compdist/errors.hpp"
#include "compdist/rng.hpp"
#include "compdist/sampler.hpp"

namespace compdist {

namespace {

/// P(a,x) by power series, for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int k = 1; k < 1000; ++k) {
    term *= x / (a + k);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16)
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  throw InvariantError("incomplete gamma series failed to converge");
}

/// Q(a,x) by Lentz continued fraction, for x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16)
      return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  throw InvariantError("incomplete gamma continued fraction failed to converge");
}

}  // namespace

double regularized_gamma_lower(double a, double x) {
  if (!(a > 0.0)) throw std::invalid_argument("incomplete gamma needs a > 0");
  if (x < 0.0) throw std::invalid_argument("incomplete gamma needs x >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_continued_fraction(a, x);
}

double chi2_cdf(double x, int df) {
  if (df < 1) throw std::invalid_argument("chi-square needs df >= 1");
  if (x <= 0.0) return 0.0;
  return regularized_gamma_lower(0.5 * df, 0.5 * x);
}

double chi2_quantile(double p, int df) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantile needs 0 < p < 1");
  if (df < 1) throw std::invalid_argument("chi-square needs df >= 1");
  double lo = 0.0;
  double hi = df + 200.0 * std::sqrt(2.0 * df) + 200.0;
  while (chi2_cdf(hi, df) < p) hi *= 2.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-10 * (1.0 + hi); ++iter) {
    const double mid = 0.5 * (lo + hi);
    (chi2_cdf(mid, df) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

GoodnessOfFit composition_uniformity_test(std::int64_t n, std::int64_t samples,
                                          std::uint64_t seed) {
  if (n < 2 || n > 20)
    throw std::invalid_argument("uniformity test supports 2 <= n <= 20");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");

  const std::size_t cells = std::size_t{1} << (n - 1);
  std::vector<std::int64_t> counts(cells, 0);
  GeometricStream stream(seed);
  for (std::int64_t s = 0; s < samples; ++s) {
    const StoppedComposition sample = sample_composition(n, stream);
    // Bit string index, big-endian over positions 1..n-1.
    std::uint64_t index = 0;
    std::int64_t cursor = 0;
    for (const std::int64_t part : sample.composition.parts) {
      cursor += part;
      if (cursor < n) index |= std::uint64_t{1} << (n - 1 - cursor);
    }
    ++counts[index];
  }

  const double expected = static_cast<double>(samples) / static_cast<double>(cells);
  double statistic = 0.0;
  for (const std::int64_t observed : counts) {
    const double diff = static_cast<double>(observed) - expected;
    statistic += diff * diff / expected;
  }

  GoodnessOfFit result;
  result.statistic = statistic;
  result.degrees_of_freedom = static_cast<int>(cells) - 1;
  result.threshold = chi2_quantile(0.999, result.degrees_of_freedom);
  result.accept = statistic <= result.threshold;
  return result;
}

GoodnessOfFit tau_distribution_test(std::int64_t n, std::int64_t samples,
                                    std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("tau test needs n >= 2");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");

  // Observed tau counts; tau ranges over 1..n.
  std::vector<std::int64_t> observed(static_cast<std::size_t>(n) + 1, 0);
  GeometricStream stream(seed);
  for (std::int64_t s = 0; s < samples; ++s) {
    const StoppedComposition sample = sample_composition(n, stream);
    ++observed[static_cast<std::size_t>(sample.tau)];
  }

  // Expected counts from tau - 1 ~ Bin(n-1, 1/2); binomial coefficients up
  // to n ~ 50 are exact in doubles via the Pascal recurrence.
  std::vector<double> expected(static_cast<std::size_t>(n) + 1, 0.0);
  {
    std::vector<double> row(static_cast<std::size_t>(n), 0.0);
    row[0] = 1.0;
    for (std::int64_t r = 1; r <= n - 1; ++r)
      for (std::int64_t k = r; k >= 1; --k) row[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k - 1)];
    const double scale = std::ldexp(static_cast<double>(samples), static_cast<int>(-(n - 1)));
    for (std::int64_t k = 0; k <= n - 1; ++k)
      expected[static_cast<std::size_t>(k + 1)] = row[static_cast<std::size_t>(k)] * scale;
  }

  // Merge consecutive cells until each merged cell expects >= 5 draws; the
  // straggler at the end folds into the last closed cell.
  double statistic = 0.0;
  int bins = 0;
  double acc_obs = 0.0, acc_exp = 0.0;
  double last_obs = 0.0, last_exp = 0.0;
  bool have_last = false;
  for (std::int64_t tau = 1; tau <= n; ++tau) {
    acc_obs += static_cast<double>(observed[static_cast<std::size_t>(tau)]);
    acc_exp += expected[static_cast<std::size_t>(tau)];
    if (acc_exp >= 5.0) {
      if (have_last) {
        const double diff = last_obs - last_exp;
        statistic += diff * diff / last_exp;
        ++bins;
      }
      last_obs = acc_obs;
      last_exp = acc_exp;
      have_last = true;
      acc_obs = acc_exp = 0.0;
    }
  }
  if (!have_last) throw InvariantError("tau test: no cell reached the expected-count floor");
  last_obs += acc_obs;
  last_exp += acc_exp;
  const double diff = last_obs - last_exp;
  statistic += diff * diff / last_exp;
  ++bins;

  GoodnessOfFit result;
  result.statistic = statistic;
  result.degrees_of_freedom = bins - 1;
  if (result.degrees_of_freedom < 1)
    throw InvariantError("tau test: not enough cells after merging");
  result.threshold = chi2_quantile(0.999, result.degrees_of_freedom);
  result.accept = statistic <= result.threshold;
  return result;
}

}  // namespace compdist
