#include "compdist/sampler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace compdist {

namespace {

constexpr std::int64_t kSampleBlock = 1 << 16;

/// Streams the parts of one sampled composition into `visit` without
/// materializing them.  Returns tau.  Consumption rule: one geometric draw
/// per part, including the clipped final one.
template <typename Visit>
std::int64_t stream_parts(std::int64_t n, GeometricStream& stream, Visit&& visit) {
  std::int64_t sum = 0;
  std::int64_t tau = 0;
  for (;;) {
    const std::int64_t draw = stream.next();
    ++tau;
    if (sum + draw >= n) {
      visit(n - sum, draw);
      return tau;
    }
    sum += draw;
    visit(draw, draw);
  }
}

/// Distinct-value tally for one sample: a 64-bit presence mask for values
/// <= 64 plus a tiny spill list (only a clipped final part realistically
/// lands there).
struct DistinctTally {
  std::uint64_t mask = 0;
  std::vector<std::int64_t> large;

  void reset() {
    mask = 0;
    large.clear();
  }
  void add(std::int64_t value) {
    if (value <= 64) {
      mask |= std::uint64_t{1} << (value - 1);
    } else if (std::find(large.begin(), large.end(), value) == large.end()) {
      large.push_back(value);
    }
  }
  std::int64_t count() const {
    return std::popcount(mask) + static_cast<std::int64_t>(large.size());
  }
};

struct BlockSums {
  std::uint64_t sum = 0;
  std::uint64_t sum_squares = 0;
};

BlockSums run_block(std::int64_t n, std::uint64_t seed, std::uint64_t block,
                    std::int64_t block_samples) {
  GeometricStream stream = GeometricStream::for_block(seed, block);
  BlockSums sums;
  DistinctTally tally;
  for (std::int64_t s = 0; s < block_samples; ++s) {
    tally.reset();
    stream_parts(n, stream, [&](std::int64_t part, std::int64_t) { tally.add(part); });
    const std::uint64_t d = static_cast<std::uint64_t>(tally.count());
    sums.sum += d;
    sums.sum_squares += d * d;
  }
  return sums;
}

}  // namespace

StoppedComposition sample_composition(std::int64_t n, GeometricStream& stream) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  StoppedComposition out;
  out.composition.total = n;
  std::int64_t last_raw = 0;
  out.tau = stream_parts(n, stream, [&](std::int64_t part, std::int64_t raw) {
    out.composition.parts.push_back(part);
    last_raw = raw;
  });
  out.truncated_last = out.composition.parts.back() != last_raw;
  return out;
}

EstimateReport estimate_expectation(std::int64_t n, std::int64_t samples,
                                    std::uint64_t seed, int workers) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  const std::uint64_t blocks =
      static_cast<std::uint64_t>((samples + kSampleBlock - 1) / kSampleBlock);
  const auto block_size = [&](std::uint64_t b) {
    return std::min<std::int64_t>(kSampleBlock,
                                  samples - static_cast<std::int64_t>(b) * kSampleBlock);
  };

  BlockSums total;
  if (workers == 1 || blocks <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) {
      const BlockSums part = run_block(n, seed, b, block_size(b));
      total.sum += part.sum;
      total.sum_squares += part.sum_squares;
    }
  } else {
    // Blocks are assigned round-robin; integer tallies commute, so the
    // result does not depend on the worker count.
    const int nworkers = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(workers), blocks));
    std::vector<BlockSums> partial(static_cast<std::size_t>(nworkers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nworkers));
    for (int w = 0; w < nworkers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = static_cast<std::uint64_t>(w); b < blocks;
             b += static_cast<std::uint64_t>(nworkers)) {
          const BlockSums part = run_block(n, seed, b, block_size(b));
          partial[static_cast<std::size_t>(w)].sum += part.sum;
          partial[static_cast<std::size_t>(w)].sum_squares += part.sum_squares;
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& part : partial) {
      total.sum += part.sum;
      total.sum_squares += part.sum_squares;
    }
  }

  EstimateReport report;
  report.n = n;
  report.samples = samples;
  report.seed = seed;
  report.mean = static_cast<double>(total.sum) / static_cast<double>(samples);
  if (samples > 1) {
    // N * sum(d^2) - (sum d)^2 = N (N-1) * sample variance, kept exact in
    // 128-bit integers before the single conversion to double.
    const unsigned __int128 n_sq = static_cast<unsigned __int128>(total.sum_squares) *
                                   static_cast<unsigned __int128>(samples);
    const unsigned __int128 s_sq = static_cast<unsigned __int128>(total.sum) *
                                   static_cast<unsigned __int128>(total.sum);
    const double numerator = static_cast<double>(n_sq - s_sq);
    const double count = static_cast<double>(samples);
    const double variance = numerator / (count * (count - 1.0));
    report.std_error = std::sqrt(variance / count);
  }
  return report;
}

WindowBounds window_bounds(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("window bounds need n >= 2");
  WindowBounds out;
  out.n = n;
  out.t_n = std::sqrt(static_cast<double>(n - 1) * std::log(static_cast<double>(n)));
  const double center = 0.5 * static_cast<double>(n + 1);
  out.n0 = center - out.t_n;
  out.n1 = center + out.t_n;
  return out;
}

TailCheckReport tau_tail_check(std::int64_t n, double threshold,
                               std::int64_t samples, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("tau tail check needs n >= 2");
  if (threshold < 0.0) throw std::invalid_argument("threshold must be >= 0");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");

  const double center = 0.5 * static_cast<double>(n + 1);
  std::int64_t hits = 0;
  const std::uint64_t blocks =
      static_cast<std::uint64_t>((samples + kSampleBlock - 1) / kSampleBlock);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    GeometricStream stream = GeometricStream::for_block(seed, b);
    const std::int64_t block_samples = std::min<std::int64_t>(
        kSampleBlock, samples - static_cast<std::int64_t>(b) * kSampleBlock);
    for (std::int64_t s = 0; s < block_samples; ++s) {
      const std::int64_t tau = stream_parts(n, stream, [](std::int64_t, std::int64_t) {});
      if (std::abs(static_cast<double>(tau) - center) >= threshold) ++hits;
    }
  }

  TailCheckReport report;
  report.n = n;
  report.threshold = threshold;
  report.samples = samples;
  report.seed = seed;
  report.empirical = static_cast<double>(hits) / static_cast<double>(samples);
  report.bound =
      2.0 * std::exp(-2.0 * threshold * threshold / static_cast<double>(n - 1));
  return report;
}

}  // namespace compdist
