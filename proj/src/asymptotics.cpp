#include "compdist/asymptotics.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "compdist/errors.hpp"
#include "compdist/gamma_complex.hpp"
#include "compdist/sampler.hpp"

namespace compdist {

namespace {

using std::numbers::egamma;
using std::numbers::ln2;
using std::numbers::pi;

/// exp(-t) underflows past ~745.1; anything beyond contributes nothing
/// representable.
constexpr double kExpCutoff = 746.0;

// 20-point Gauss-Legendre rule on [-1, 1] (positive half; nodes are
// symmetric).
struct GaussNode {
  double x;
  double w;
};
constexpr std::array<GaussNode, 10> kGauss20 = {{
    {0.993128599185094925, 0.0176140071391521183},
    {0.963971927277913791, 0.0406014298003869413},
    {0.912234428251325906, 0.0626720483341090636},
    {0.839116971822218823, 0.0832767415767047487},
    {0.746331906460150793, 0.101930119817240435},
    {0.636053680726515025, 0.118194531961518417},
    {0.510867001950827098, 0.131688638449176627},
    {0.373706088715419561, 0.142096109318382051},
    {0.227785851141645078, 0.149172986472603747},
    {0.0765265211334973338, 0.152753387130725851},
}};

template <typename F>
double gauss20(F&& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (const auto& node : kGauss20) {
    sum += node.w * (f(mid + half * node.x) + f(mid - half * node.x));
  }
  return half * sum;
}

double fractional_part(double x) {
  const double r = x - std::floor(x);
  return r < 1.0 ? r : 0.0;
}

}  // namespace

AsymptoticConstants asymptotic_constants() noexcept {
  AsymptoticConstants k;
  k.euler_gamma = egamma;
  k.ln2 = ln2;
  k.c = egamma / ln2 - 0.5;
  k.theorem_constant = k.c - 1.0;
  return k;
}

double eval_f(double x, const SeriesConfig& cfg) {
  if (!(x >= 0.0)) throw std::invalid_argument("eval_f needs x >= 0");
  if (x > 512.0) throw std::invalid_argument("eval_f: x too large for the double range");
  return distinct_series_sum(std::exp2(x), cfg).value;
}

PeriodicEval eval_g(double x, const SeriesConfig& cfg) {
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("series tolerance must be positive");
  const double xr = fractional_part(x);

  double g = -xr - egamma / ln2 + 0.5;
  double error = 0.0;

  // m <= 0 leg: terms exp(-2^(xr+j)), j = -m, die off double-exponentially.
  for (int j = 0;; ++j) {
    const double t = std::exp2(xr + j);
    if (t > kExpCutoff) break;  // remaining mass below the double range
    g -= std::exp(-t);
  }

  // m >= 1 leg: 1 - exp(-2^(xr-m)) <= 2^(xr-m); the tail after m equals
  // that bound.
  for (int m = 1;; ++m) {
    if (m > cfg.max_terms)
      throw ResourceLimitError("eval_g: max_terms reached before certification");
    const double t = std::exp2(xr - m);
    g += -std::expm1(-t);
    if (t <= 0.5 * cfg.tolerance) {
      error += t;
      break;
    }
  }

  PeriodicEval out;
  out.x = xr;
  out.g_value = g;
  out.h_value = eval_h(xr, cfg);
  out.error_bound = error + 0.5 * cfg.tolerance;  // the h truncation bound
  return out;
}

double eval_h(double x, const SeriesConfig& cfg) {
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("series tolerance must be positive");
  const double xr = fractional_part(x);
  double h = 0.0;

  // Decreasing m (t doubling): terms t^2 exp(-t) vanish in double precision
  // once t passes the exp cutoff.
  for (int j = 0;; ++j) {
    const double t = std::exp2(xr + j);
    if (t > kExpCutoff) break;
    h += t * t * std::exp(-t);
  }

  // Increasing m (t halving): terms bounded by t^2, tail by t^2 / 3.
  for (int m = 1;; ++m) {
    if (m > cfg.max_terms)
      throw ResourceLimitError("eval_h: max_terms reached before certification");
    const double t = std::exp2(xr - m);
    h += t * t * std::exp(-t);
    if (t * t / 3.0 <= 0.5 * cfg.tolerance) break;
  }
  return h;
}

FourierCoefficient fourier_coefficient(int k) {
  if (k == 0) throw std::invalid_argument("fourier coefficient index must be nonzero");
  const int ka = std::abs(k);
  const double chi = 2.0 * pi * static_cast<double>(ka) / ln2;
  const std::complex<double> gamma_at = complex_gamma(std::complex<double>(0.0, chi));
  std::complex<double> value = -std::conj(gamma_at) / ln2;
  if (k < 0) value = std::conj(value);
  return FourierCoefficient{k, value};
}

double eval_g_fourier(double x, int harmonics) {
  if (harmonics < 1) throw std::invalid_argument("need at least one harmonic");
  std::complex<double> acc(0.0, 0.0);
  for (int k = 1; k <= harmonics; ++k) {
    const std::complex<double> coeff = fourier_coefficient(k).value;
    const std::complex<double> phase = std::polar(1.0, 2.0 * pi * k * x);
    acc += coeff * phase + std::conj(coeff * phase);
  }
  if (std::abs(acc.imag()) > 1e-12)
    throw InvariantError("fourier reconstruction has a nonreal part");
  return acc.real();
}

double asymptotic_expectation(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("asymptotic expectation needs n >= 2");
  const double log2n = std::log2(static_cast<double>(n));
  const AsymptoticConstants k = asymptotic_constants();
  return log2n + k.theorem_constant + eval_g(log2n).g_value;
}

double quadrature_c0(int refinement) {
  if (refinement < 1) throw std::invalid_argument("refinement must be >= 1");

  // int_0^1 (1 - e^-u)/u du over equal panels; the integrand is entire.
  double upper_integral = 0.0;
  const int panels = 2 * refinement;
  for (int i = 0; i < panels; ++i) {
    const double lo = static_cast<double>(i) / panels;
    const double hi = static_cast<double>(i + 1) / panels;
    upper_integral += gauss20([](double u) { return -std::expm1(-u) / u; }, lo, hi);
  }

  // int_1^inf e^-u/u du = int_0^1 e^(-1/v)/v dv over dyadic panels; the
  // substitution keeps every panel smooth and the deep ones vanish.
  double lower_integral = 0.0;
  for (int j = 0; j < 16; ++j) {
    const double hi = std::ldexp(1.0, -j);
    const double lo = 0.5 * hi;
    if (std::exp(-1.0 / hi) == 0.0) break;
    for (int i = 0; i < refinement; ++i) {
      const double a = lo + (hi - lo) * static_cast<double>(i) / refinement;
      const double b = lo + (hi - lo) * static_cast<double>(i + 1) / refinement;
      lower_integral += gauss20([](double v) { return std::exp(-1.0 / v) / v; }, a, b);
    }
  }

  return (upper_integral - lower_integral) / ln2;
}

double mean_constant_check() {
  return std::abs(quadrature_c0() - egamma / ln2);
}

SandwichVerdict check_sandwich_bounds(const BoundTriple& t) {
  if (!(t.a > 0.0) || !(t.b >= 0.0) || !(t.lambda * t.a > 0.0))
    throw std::invalid_argument("sandwich bounds need a > 0, b >= 0, lambda a > 0");
  const double u = t.b / t.lambda;
  if (!(u <= 0.5)) throw std::invalid_argument("sandwich bounds need b/lambda <= 1/2");

  // Compare in log space; 1e-12 relative slack on the values is 1e-12
  // absolute slack on the logs, widened by the rounding scale of the
  // exponents themselves.
  const double mid_log = t.a * t.lambda * std::log1p(-u);
  const double ab = t.a * t.b;
  const double slack = 1e-12 * (1.0 + std::abs(ab) + std::abs(mid_log));

  SandwichVerdict verdict;
  verdict.lower_ok = -2.0 * ab <= mid_log + slack;
  verdict.upper_ok = mid_log <= -ab + slack;
  verdict.higher_order_ok = -ab - ab * u <= mid_log + slack;
  return verdict;
}

BoundTriple random_bound_triple(Xoshiro256pp& gen) {
  BoundTriple t;
  if (gen.next() % 4 != 0) {
    // The grid the estimates are used with: lambda = 2^k, a = 2^x, b = 2^-m.
    const int k = 1 + static_cast<int>(gen.next() % 30);
    const int m = 1 + static_cast<int>(gen.next() % 20);
    t.lambda = std::ldexp(1.0, k);
    t.a = std::exp2(gen.uniform01());
    t.b = std::ldexp(1.0, -m);
  } else {
    // Free-range values, reaching the b/lambda = 1/2 boundary.
    t.lambda = std::exp(8.0 * gen.uniform01() - 2.0);
    t.a = std::exp(8.0 * gen.uniform01() - 4.0);
    t.b = t.lambda * 0.5 * gen.uniform01();
  }
  return t;
}

ExpectationBracket expectation_bracket(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("expectation bracket needs n >= 2");
  const WindowBounds wb = window_bounds(n);
  if (!(wb.n0 > 0.0))
    throw InvariantError("expectation bracket: window lower edge is not positive");
  ExpectationBracket out;
  out.f_at_half_n = distinct_series_sum(static_cast<double>(n) / 2.0).value;
  out.bracket_low = distinct_series_sum(wb.n0).value;
  out.bracket_high = distinct_series_sum(wb.n1).value;
  return out;
}

}  // namespace compdist
