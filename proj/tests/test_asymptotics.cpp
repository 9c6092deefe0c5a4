#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "compdist/asymptotics.hpp"
#include "compdist/errors.hpp"
#include "compdist/exact.hpp"
#include "compdist/gamma_complex.hpp"
#include "compdist/rng.hpp"

using namespace compdist;

TEST_CASE("constants") {
  const AsymptoticConstants k = asymptotic_constants();
  CHECK(k.theorem_constant == k.c - 1.0);
  CHECK(k.c == doctest::Approx(0.3327461772768672).epsilon(1e-14));
  CHECK(k.theorem_constant == doctest::Approx(-0.6672538227231328).epsilon(1e-14));
  CHECK(k.euler_gamma == doctest::Approx(0.5772156649015329).epsilon(1e-16));
}

TEST_CASE("f at exactly evaluable points") {
  CHECK(eval_f(0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eval_f(1.0) == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(eval_f(-0.5), std::invalid_argument);
}

TEST_CASE("f is strictly increasing") {
  Xoshiro256pp gen(2024);
  for (int i = 0; i < 200; ++i) {
    const double x = 45.0 * gen.uniform01();
    const double step = 1e-3 + 2.0 * gen.uniform01();
    CHECK(eval_f(x) < eval_f(x + step));
  }
}

TEST_CASE("f(x+1) - f(x) approaches 1") {
  for (const double x : {30.0, 33.3, 36.9, 40.0}) {
    CHECK(std::abs(eval_f(x + 1.0) - eval_f(x) - 1.0) < 1e-6);
  }
}

TEST_CASE("f(x+k) - x - k reaches c + g(x)") {
  const AsymptoticConstants k = asymptotic_constants();
  const double direct = eval_f(40.5) - 40.5;
  const double via_g = k.c + eval_g(0.5).g_value;
  CHECK(std::abs(direct - via_g) <= 1e-10);

  // cross-route agreement at k = 30 for several fractional parts
  for (const double x : {0.0, 0.125, 0.33, 0.5, 0.77, 0.99}) {
    const double from_f = eval_f(x + 30.0) - (x + 30.0) - k.c;
    CHECK(std::abs(from_f - eval_g(x).g_value) <= 2e-9);
  }
}

TEST_CASE("g spot values") {
  // reference values computed with 30-digit arithmetic
  CHECK(eval_g(0.0).g_value == doctest::Approx(1.20515603207436e-6).epsilon(1e-7));
  CHECK(eval_g(0.25).g_value == doctest::Approx(1.01114996667516e-6).epsilon(1e-7));
  CHECK(eval_g(0.5).g_value == doctest::Approx(-1.20515518013063e-6).epsilon(1e-7));
  CHECK(eval_g(0.75).g_value == doctest::Approx(-1.0111508186189e-6).epsilon(1e-7));
}

TEST_CASE("g stays within the bound and is nonconstant") {
  double max_abs = 0.0, lo = 1.0, hi = -1.0;
  for (int i = 0; i < 10'000; ++i) {
    const double g = eval_g(i / 10'000.0).g_value;
    max_abs = std::max(max_abs, std::abs(g));
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  }
  CHECK(max_abs <= 1.6e-6);
  const double two_c1 = 2.0 * std::abs(fourier_coefficient(1).value);
  CHECK(hi - lo >= 0.9 * 2.0 * two_c1);
}

TEST_CASE("g is periodic and reduction makes shifts exact") {
  Xoshiro256pp gen(5);
  for (int i = 0; i < 100; ++i) {
    const double x = 20.0 * gen.uniform01() - 10.0;
    const PeriodicEval at = eval_g(x);
    const PeriodicEval shifted = eval_g(x + 1.0);
    CHECK(std::abs(at.g_value - shifted.g_value) <= 2.0 * 1e-13);
    CHECK(at.error_bound <= 1e-13);
  }
}

TEST_CASE("g has mean zero over one period") {
  const int nodes = 1 << 12;
  double mean = 0.0;
  for (int i = 0; i < nodes; ++i)
    mean += eval_g((i + 0.5) / nodes).g_value;
  mean /= nodes;
  CHECK(std::abs(mean) <= 1e-9);
}

TEST_CASE("h is periodic, positive, and order one") {
  Xoshiro256pp gen(6);
  double lo = 100.0, hi = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double x = gen.uniform01();
    const double h = eval_h(x);
    CHECK(std::abs(h - eval_h(x + 1.0)) <= 2e-13);
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  CHECK(hi < 10.0);
  CHECK(lo > 0.0);
  CHECK(eval_h(0.0) == doctest::Approx(1.44280323343011).epsilon(1e-12));
  CHECK(eval_h(0.5) == doctest::Approx(1.44258684860641).epsilon(1e-12));
}

TEST_CASE("complex gamma against reference values") {
  const std::complex<double> g1 = complex_gamma({0.0, 9.064720283654388});
  CHECK(g1.real() == doctest::Approx(-4.1767510525305206e-7).epsilon(1e-12));
  CHECK(g1.imag() == doctest::Approx(-3.5043802189279857e-7).epsilon(1e-12));

  const std::complex<double> g2 = complex_gamma({0.5, 5.0});
  CHECK(g2.real() == doctest::Approx(-0.00096948070526994948).epsilon(1e-12));
  CHECK(g2.imag() == doctest::Approx(8.3630391299613725e-5).epsilon(1e-12));

  const std::complex<double> g3 = complex_gamma({1.0, -9.064720283654388});
  CHECK(g3.real() == doctest::Approx(3.1766226452153715e-6).epsilon(1e-12));
  CHECK(g3.imag() == doctest::Approx(3.7861079985648222e-6).epsilon(1e-12));

  CHECK(log_gamma({1.0, 30.0}).real() ==
        doctest::Approx(-44.504352579811148).epsilon(1e-13));

  // real axis: Gamma(n) = (n-1)!
  CHECK(complex_gamma({5.0, 0.0}).real() == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(complex_gamma({0.5, 0.0}).real() ==
        doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("gamma modulus identity on the imaginary axis") {
  // |Gamma(iy)|^2 = pi / (y sinh(pi y)), an exact identity
  for (const double y : {1.0, 2.5, 9.064720283654388, 18.129440567308776, 30.0}) {
    const double reference =
        std::sqrt(std::numbers::pi / (y * std::sinh(std::numbers::pi * y)));
    const double computed = std::abs(complex_gamma({0.0, y}));
    CHECK(std::abs(computed - reference) <= 1e-12 * reference);
  }
}

TEST_CASE("fourier coefficient magnitudes match the oscillation scale") {
  const FourierCoefficient c1 = fourier_coefficient(1);
  CHECK(std::abs(2.0 * std::abs(c1.value) - 0.00000157316) <= 1e-11);
  CHECK(c1.value.real() == doctest::Approx(6.0257780305135403e-7).epsilon(1e-11));
  CHECK(c1.value.imag() == doctest::Approx(-5.0557519632367848e-7).epsilon(1e-11));

  const FourierCoefficient c2 = fourier_coefficient(2);
  CHECK(2.0 * std::abs(c2.value) < 1e-12);
  CHECK(2.0 * std::abs(c2.value) == doctest::Approx(7.2847098432903633e-13).epsilon(1e-6));

  CHECK_THROWS_AS(fourier_coefficient(0), std::invalid_argument);
}

TEST_CASE("fourier coefficients have conjugate symmetry") {
  for (const int k : {1, 2, 3, 7}) {
    const std::complex<double> plus = fourier_coefficient(k).value;
    const std::complex<double> minus = fourier_coefficient(-k).value;
    CHECK(minus == std::conj(plus));
  }
}

TEST_CASE("three harmonics reconstruct g to 1e-10") {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = i / 1000.0;
    worst = std::max(worst, std::abs(eval_g(x).g_value - eval_g_fourier(x, 3)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("first harmonic carries the whole oscillation") {
  double lo = 1.0, hi = -1.0;
  for (int i = 0; i < 2000; ++i) {
    const double v = eval_g_fourier(i / 2000.0, 1);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double expected = 2.0 * (2.0 * std::abs(fourier_coefficient(1).value));
  CHECK(hi - lo == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("asymptotic expectation") {
  const AsymptoticConstants k = asymptotic_constants();
  // at powers of two the fractional part is 0
  for (const int e : {1, 5, 12}) {
    const double expected = e + k.theorem_constant + eval_g(0.0).g_value;
    CHECK(asymptotic_expectation(std::int64_t{1} << e) ==
          doctest::Approx(expected).epsilon(1e-15));
  }
  CHECK_THROWS_AS(asymptotic_expectation(1), std::invalid_argument);
}

TEST_CASE("quadrature recovers Euler's constant") {
  CHECK(mean_constant_check() <= 1e-9);
  const double c0 = quadrature_c0();
  CHECK(c0 * std::numbers::ln2 ==
        doctest::Approx(0.5772156649015329).epsilon(1e-12));
  // doubling the resolution moves the result by less than 1e-10
  CHECK(std::abs(quadrature_c0(1) - quadrature_c0(2)) < 1e-10);
}

TEST_CASE("sandwich bounds at handpicked points") {
  // b = 0: all sides equal 1
  const SandwichVerdict at_zero = check_sandwich_bounds({1.5, 0.0, 2.0});
  CHECK(at_zero.lower_ok);
  CHECK(at_zero.upper_ok);
  CHECK(at_zero.higher_order_ok);

  // the b/lambda = 1/2 boundary: (1-1/2)^1 = 0.5 vs e^-1, e^-0.75, e^-0.5
  const SandwichVerdict boundary = check_sandwich_bounds({1.0, 0.5, 1.0});
  CHECK(boundary.lower_ok);
  CHECK(boundary.upper_ok);
  CHECK(boundary.higher_order_ok);

  CHECK_THROWS_AS(check_sandwich_bounds({-1.0, 0.1, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(check_sandwich_bounds({1.0, 2.0, 1.0}), std::invalid_argument);
}

TEST_CASE("sandwich bounds across the application grid") {
  // lambda = 2^k, a = 2^x, b = 2^-m: the exact shape the estimates are
  // used with
  for (int k = 1; k <= 30; ++k) {
    for (int m = 1; m <= 20; ++m) {
      for (const double x : {0.0, 0.25, 0.5, 0.9}) {
        const BoundTriple t{std::exp2(x), std::ldexp(1.0, -m), std::ldexp(1.0, k)};
        const SandwichVerdict verdict = check_sandwich_bounds(t);
        CHECK(verdict.lower_ok);
        CHECK(verdict.upper_ok);
        CHECK(verdict.higher_order_ok);
      }
    }
  }
}

TEST_CASE("sandwich bounds hold for random in-domain triples") {
  Xoshiro256pp gen(314159);
  for (int i = 0; i < 10'000; ++i) {
    const BoundTriple t = random_bound_triple(gen);
    const SandwichVerdict verdict = check_sandwich_bounds(t);
    CHECK(verdict.lower_ok);
    CHECK(verdict.upper_ok);
    CHECK(verdict.higher_order_ok);
  }
}

TEST_CASE("expectation bracket") {
  for (const std::int64_t n : {2, 16, 100, 1024}) {
    const ExpectationBracket bracket = expectation_bracket(n);
    CHECK(bracket.bracket_low <= bracket.bracket_high);
    CHECK(bracket.bracket_low <= bracket.f_at_half_n);
    CHECK(bracket.f_at_half_n <= bracket.bracket_high);
  }
  CHECK_THROWS_AS(expectation_bracket(1), std::invalid_argument);

  // the exact value sits inside the bracket with the o(1) slack at n = 256
  const ExpectationBracket b256 = expectation_bracket(256);
  const double exact = exact_expectation(256).float_value;
  CHECK(exact >= b256.bracket_low - 0.1);
  CHECK(exact <= b256.bracket_high + 0.1);

  // f(log2(n/2)) - log2(n/2) approaches c + g(log2(n/2)) for large n,
  // up to the first-order correction h(0) 2^-(x+1) at integer x
  const AsymptoticConstants k = asymptotic_constants();
  const ExpectationBracket big = expectation_bracket(std::int64_t{1} << 20);
  const double x = std::log2((std::int64_t{1} << 20) / 2.0);
  const double residual = big.f_at_half_n - x - k.c - eval_g(x).g_value;
  CHECK(std::abs(residual) < 5e-6);
  CHECK(std::abs(residual - eval_h(0.0) * std::ldexp(1.0, -20)) < 1e-9);
}
