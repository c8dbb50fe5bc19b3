#ifndef DUNKL_MULTIPLICITY_HPP
#define DUNKL_MULTIPLICITY_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

namespace dunkl {

using cplx = std::complex<double>;

/// Deformation parameter k of the Dunkl operator
///   T_k f(x) = f'(x) + k (f(x) - f(-x)) / x.
/// Construction requires Re k >= 0; for Re k < 0 the odd recursion
/// denominators n + 2k may vanish and the calculus breaks down.
class Multiplicity {
 public:
  explicit Multiplicity(double re, double im = 0.0) : v_(re, im) {
    if (!std::isfinite(re) || !std::isfinite(im) || re < 0.0)
      throw std::invalid_argument("Multiplicity: requires finite k with Re k >= 0");
  }

  double re() const { return v_.real(); }
  double im() const { return v_.imag(); }
  cplx value() const { return v_; }
  bool is_real() const { return v_.imag() == 0.0; }
  /// modulus |k|, as used in the iterated-derivative bounds
  double abs() const { return std::abs(v_); }

  friend bool operator==(const Multiplicity& a, const Multiplicity& b) {
    return a.v_ == b.v_;
  }

 private:
  cplx v_;
};

/// Action of T_k on the monomial x^n: T_k x^n = gamma_seq(k,n) x^{n-1},
/// with gamma = n for even n and gamma = n + 2k for odd n. Never zero for
/// Re k >= 0 since Re(n + 2k) >= n >= 1.
inline cplx gamma_seq(const Multiplicity& k, long n) {
  if (n < 1) throw std::invalid_argument("gamma_seq: n must be >= 1");
  if (n % 2 == 0) return cplx(static_cast<double>(n), 0.0);
  return cplx(static_cast<double>(n), 0.0) + 2.0 * k.value();
}

}  // namespace dunkl

#endif
