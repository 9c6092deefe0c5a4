#include "compdist/series.hpp"

#include <cmath>
#include <stdexcept>

#include "compdist/errors.hpp"

namespace compdist {

SeriesValue distinct_series_sum(double count, const SeriesConfig& cfg) {
  if (!(count > 0.0) || !std::isfinite(count))
    throw std::invalid_argument("distinct_series_sum requires a positive finite count");
  if (!(cfg.tolerance > 0.0))
    throw std::invalid_argument("series tolerance must be positive");

  const double tail_scale = std::max(count, 1.0);
  double sum = 0.0;
  for (int m = 1; m <= cfg.max_terms; ++m) {
    const double q = std::ldexp(1.0, -m);
    sum += -std::expm1(count * std::log1p(-q));
    const double tail = tail_scale * q;  // bound on everything past term m
    if (tail <= 0.5 * cfg.tolerance) return SeriesValue{sum, tail};
  }
  throw ResourceLimitError("distinct_series_sum: max_terms reached before certification");
}

}  // namespace compdist
