#pragma once

#include <cstdint>

namespace compdist {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double regularized_gamma_lower(double a, double x);

/// CDF of the chi-square distribution with df degrees of freedom.
double chi2_cdf(double x, int df);

/// Inverse chi-square CDF by bisection on P(df/2, x/2).
double chi2_quantile(double p, int df);

struct GoodnessOfFit {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double threshold = 0.0;  // the 99.9% quantile used for acceptance
  bool accept = false;
};

/// Chi-square goodness of fit of sampled compositions of n against the
/// uniform law on all 2^(n-1) of them.  Cells are indexed by bit string;
/// threshold is the 99.9% chi-square quantile with 2^(n-1)-1 df.
GoodnessOfFit composition_uniformity_test(std::int64_t n, std::int64_t samples,
                                          std::uint64_t seed);

/// Chi-square goodness of fit of the sampled stopping time tau against
/// 1 + Binomial(n-1, 1/2).  Consecutive cells are merged until each merged
/// cell has expected count >= 5.
GoodnessOfFit tau_distribution_test(std::int64_t n, std::int64_t samples,
                                    std::uint64_t seed);

}  // namespace compdist
