#include "compdist/gamma_complex.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace compdist {

namespace {

// Lanczos g = 6.024680040776729583740234375, 13-term rational form
// (the standard double-precision coefficient set).
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr std::array<double, 13> kLanczosNum = {
    23531376880.410759688572007674451636754734,
    42919803642.649098768957899047001988850926,
    35711959237.355668049440185451547166705960,
    17921034426.037209699919755754458931112671,
    6039542586.3520280050642916443072979210699,
    1439720407.3117216736632230727949123939715,
    248874557.86205415651146038641322942321632,
    31426415.585400194380614231628318205362874,
    2876370.6289353724412254090516208496135991,
    186056.26539522349504029498971604569928220,
    8071.6720023658162106380029022722506138218,
    210.82427775157934587250973392071336271166,
    2.5066282746310002701649081771338373386264,
};

constexpr std::array<double, 13> kLanczosDenom = {
    0.0,       39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0, 13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,     66.0,       1.0,
};

std::complex<double> lanczos_sum(std::complex<double> z) {
  std::complex<double> num = kLanczosNum[12];
  std::complex<double> den = kLanczosDenom[12];
  for (int i = 11; i >= 0; --i) {
    num = num * z + kLanczosNum[static_cast<std::size_t>(i)];
    den = den * z + kLanczosDenom[static_cast<std::size_t>(i)];
  }
  return num / den;
}

/// log(sin(pi z)) up to multiples of 2 pi i; safe against overflow for
/// arbitrarily large |Im z|.
std::complex<double> log_sin_pi(std::complex<double> z) {
  using namespace std::numbers;
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  if (z.imag() <= 1.0) return std::log(std::sin(pi * z));
  // sin(pi z) = e^{-i pi z} * (i/2) * (1 - e^{2 i pi z}) with the last
  // factor within e^{-2 pi} of 1.
  const std::complex<double> iw(-pi * z.imag(), pi * z.real());
  return -iw + std::complex<double>(-ln2, pi / 2) +
         std::log(1.0 - std::exp(2.0 * iw));
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  using namespace std::numbers;
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(std::complex<double>(pi)) - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  const std::complex<double> t = z + (kLanczosG - 0.5);
  return std::log(lanczos_sum(z)) + (z - 0.5) * std::log(t) - t;
}

std::complex<double> complex_gamma(std::complex<double> z) {
  return std::exp(log_gamma(z));
}

}  // namespace compdist
