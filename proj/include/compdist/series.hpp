#pragma once

namespace compdist {

/// Truncation control for the series evaluators.  Every evaluation carries
/// a certified tail bound; evaluation fails loudly if max_terms is reached
/// before the bound drops below tolerance.
struct SeriesConfig {
  double tolerance = 1e-13;
  int max_terms = 20000;
};

struct SeriesValue {
  double value = 0.0;
  double error_bound = 0.0;
};

/// Sum over m >= 1 of { 1 - (1 - 2^-m)^count } for real count > 0: the
/// expected number of distinct values among `count` i.i.d. Geometric(1/2)
/// draws.  Terms are bounded by count * 2^-m, so the tail after the last
/// included term is certified <= tolerance/2.
SeriesValue distinct_series_sum(double count, const SeriesConfig& cfg = {});

}  // namespace compdist
