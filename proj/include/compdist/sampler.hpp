#pragma once

#include <cstdint>

#include "compdist/composition.hpp"
#include "compdist/rng.hpp"

namespace compdist {

/// A uniform random composition realized as a stopped geometric sequence:
/// raw draws Gamma_1, Gamma_2, ... until the running sum first reaches n
/// (tau = that index), with the final part clipped to n - sum of the rest.
struct StoppedComposition {
  Composition composition;
  std::int64_t tau = 0;        // number of parts
  bool truncated_last = false; // final part was clipped below the raw draw
};

/// Draws one uniform composition of n.  Consumes exactly tau geometric
/// draws from the stream.
StoppedComposition sample_composition(std::int64_t n, GeometricStream& stream);

struct EstimateReport {
  std::int64_t n = 0;
  std::int64_t samples = 0;
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
};

/// Monte Carlo mean of the distinct-part-size statistic.  Samples are
/// split into fixed 65536-sample blocks; block b always uses the
/// substream derived from (seed, b) and per-block tallies are integers,
/// so the report is bitwise identical for any worker count.
EstimateReport estimate_expectation(std::int64_t n, std::int64_t samples,
                                    std::uint64_t seed, int workers = 1);

/// Concentration window for tau around its exact mean (n+1)/2, using
/// t_n = sqrt((n-1) log n) with the natural logarithm.
struct WindowBounds {
  std::int64_t n = 0;
  double t_n = 0.0;
  double n0 = 0.0;  // (n+1)/2 - t_n
  double n1 = 0.0;  // (n+1)/2 + t_n
};

WindowBounds window_bounds(std::int64_t n);

struct TailCheckReport {
  std::int64_t n = 0;
  double threshold = 0.0;  // the t in P(|tau - E tau| >= t)
  double empirical = 0.0;
  double bound = 0.0;      // 2 exp(-2 t^2 / (n-1))
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Empirical tail frequency of |tau - (n+1)/2| >= t against the
/// Hoeffding-type bound; tau is 1 + Bin(n-1, 1/2) so E tau = (n+1)/2
/// exactly.
TailCheckReport tau_tail_check(std::int64_t n, double threshold,
                               std::int64_t samples, std::uint64_t seed);

}  // namespace compdist
