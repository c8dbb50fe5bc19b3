#ifndef DUNKL_GAMMAFN_HPP
#define DUNKL_GAMMAFN_HPP

#include <complex>

namespace dunkl {

/// log Gamma(z) for complex z with Re z > 0 (Lanczos approximation,
/// g = 7, 15 coefficients; relative accuracy ~1e-13 on the right half plane).
std::complex<double> log_gamma(std::complex<double> z);

/// Gamma(z), Re z > 0.
std::complex<double> gamma_fn(std::complex<double> z);

}  // namespace dunkl

#endif
