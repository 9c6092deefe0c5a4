#pragma once

#include <complex>

namespace compdist {

/// log Gamma(z) for complex z (z not a nonpositive integer).  Uses the
/// 13-term Lanczos rational approximation on Re(z) >= 0.5 and the
/// reflection formula, carried out in log space, elsewhere.  The real part
/// is accurate to ~13 significant digits on the imaginary axis up to
/// |Im z| ~ 50; the imaginary part is not reduced to the principal branch
/// after reflection.
std::complex<double> log_gamma(std::complex<double> z);

/// Gamma(z) = exp(log_gamma(z)); underflows gracefully to 0 for arguments
/// far up the imaginary axis.
std::complex<double> complex_gamma(std::complex<double> z);

}  // namespace compdist
