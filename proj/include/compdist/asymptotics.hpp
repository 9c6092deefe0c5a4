#pragma once

#include <complex>
#include <cstdint>

#include "compdist/rng.hpp"
#include "compdist/series.hpp"

namespace compdist {

struct AsymptoticConstants {
  double euler_gamma;
  double ln2;
  double c;                 // euler_gamma/ln2 - 1/2: limit mean of f(x) - x
  double theorem_constant;  // euler_gamma/ln2 - 3/2 = c - 1
};

AsymptoticConstants asymptotic_constants() noexcept;

/// f(x) = sum_{m>=1} { 1 - (1 - 2^-m)^(2^x) }.  Strictly increasing in x;
/// f(x) - x converges to c + g(frac(x)) as x grows.
double eval_f(double x, const SeriesConfig& cfg = {});

/// One point of the periodic fluctuation g and the correction weight h,
/// with the certified truncation bound of the evaluation.
struct PeriodicEval {
  double x = 0.0;  // reduced to [0, 1)
  double g_value = 0.0;
  double h_value = 0.0;
  double error_bound = 0.0;
};

/// g(x) = -x - euler_gamma/ln2 + 1/2
///        - sum_{m<=0} exp(-2^(x-m)) + sum_{m>=1} (1 - exp(-2^(x-m))),
/// periodic with period 1, mean zero, |g| <= 1.6e-6.  x is reduced to its
/// fractional part first (the series is exactly shift-invariant).
PeriodicEval eval_g(double x, const SeriesConfig& cfg = {});

/// h(x) = sum_{m in Z} 2^(2(x-m)) exp(-2^(x-m)); period 1, order 1.4.
double eval_h(double x, const SeriesConfig& cfg = {});

/// Fourier coefficient of g in the e^(2 pi i k x) basis:
///   c_k = -Gamma(-2 pi i k / ln2) / ln2   for k >= 1,
/// with conjugate symmetry c_{-k} = conj(c_k).  The magnitudes decrease
/// geometrically: 2|c_1| ~ 1.57e-6, 2|c_2| < 1e-12.
struct FourierCoefficient {
  int k = 0;
  std::complex<double> value;
};

FourierCoefficient fourier_coefficient(int k);

/// Trigonometric reconstruction sum_{1<=|k|<=harmonics} c_k e^(2 pi i k x).
/// The conjugate pairing makes the imaginary part vanish identically; it is
/// asserted and discarded.
double eval_g_fourier(double x, int harmonics);

/// log2(n) + euler_gamma/ln2 - 3/2 + g(log2 n), for n >= 2.
double asymptotic_expectation(std::int64_t n);

/// Mean of the limit series of f(x) - x over one period, by Gauss-Legendre
/// quadrature of
///   c0 ln2 = -int_1^inf e^-u du/u + int_0^1 (1 - e^-u) du/u,
/// which equals Euler's constant.  `refinement` multiplies the panel count
/// (for convergence checks).
double quadrature_c0(int refinement = 1);

/// |quadrature_c0() - euler_gamma/ln2|; must come out <= 1e-9.
double mean_constant_check();

/// Domain for the exponential sandwich estimates: a > 0, b >= 0,
/// lambda a > 0 and b/lambda <= 1/2.
struct BoundTriple {
  double a = 0.0;
  double b = 0.0;
  double lambda = 0.0;
};

struct SandwichVerdict {
  bool lower_ok = false;         // exp(-2ab) <= (1 - b/lambda)^(a lambda)
  bool upper_ok = false;         // (1 - b/lambda)^(a lambda) <= exp(-ab)
  bool higher_order_ok = false;  // exp(-ab - a b^2/lambda) <= (1 - b/lambda)^(a lambda)
};

/// Evaluates the three inequalities in log space with 1e-12 relative slack.
SandwichVerdict check_sandwich_bounds(const BoundTriple& t);

/// Uniformly random in-domain triple; mixes the 2^k / 2^x / 2^-m grid the
/// estimates are applied with and free-range values up to the b/lambda = 1/2
/// boundary.
BoundTriple random_bound_triple(Xoshiro256pp& gen);

/// The concentration bracket around the expectation: series values at the
/// window exponents n0, n1 plus the center value f(log2(n/2)).
struct ExpectationBracket {
  double f_at_half_n = 0.0;
  double bracket_low = 0.0;
  double bracket_high = 0.0;
};

ExpectationBracket expectation_bracket(std::int64_t n);

}  // namespace compdist
