#include "dunkl/gammafn.hpp"

#include <cmath>
#include <stdexcept>

namespace dunkl {

namespace {
// Lanczos g = 7, n = 15 (Godfrey's coefficient set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[15] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
    0.0,                      0.0,                   0.0,
    0.0,                      0.0,                   0.0};
// Only the first 9 coefficients are nonzero in this set.
constexpr int kLanczosN = 9;
}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (!(z.real() > 0.0))
    throw std::invalid_argument("log_gamma: requires Re z > 0");
  // log Gamma(z) = log A(z) + (z - 1/2) log t - t, t = z + g - 1/2
  std::complex<double> zm1 = z - 1.0;
  std::complex<double> a = kLanczos[0];
  for (int i = 1; i < kLanczosN; ++i) a += kLanczos[i] / (zm1 + static_cast<double>(i));
  const std::complex<double> t = zm1 + kLanczosG + 0.5;
  const double half_log_2pi = 0.91893853320467274178;  // log(2 pi)/2
  return half_log_2pi + (zm1 + 0.5) * std::log(t) - t + std::log(a);
}

std::complex<double> gamma_fn(std::complex<double> z) { return std::exp(log_gamma(z)); }

}  // namespace dunkl
