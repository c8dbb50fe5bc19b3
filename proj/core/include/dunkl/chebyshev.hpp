#ifndef DUNKL_CHEBYSHEV_HPP
#define DUNKL_CHEBYSHEV_HPP

#include <complex>
#include <functional>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/multiplicity.hpp"

namespace dunkl {

/// Chebyshev interpolant of degree N on [-L, L], stored with the parity
/// split: even_coeffs multiply T_0, T_2, ... and odd_coeffs multiply
/// T_1, T_3, ... of the scaled variable x/L, so reflection x -> -x is exact
/// by construction. Coefficient arithmetic runs in extended precision:
/// repeated differentiation amplifies roundoff by ~N^2/L per pass, and the
/// iterated-operator experiments take up to eight passes.
class ChebPoly {
 public:
  using xreal = long double;
  using xcplx = std::complex<long double>;

  ChebPoly() = default;

  /// Interpolant at the N+1 Chebyshev extrema nodes L cos(pi j / N).
  /// Throws on non-finite samples.
  static ChebPoly fit(const std::function<cplx(double)>& f, double L, int N,
                      double trim_tol = 1e-14);

  /// From full coefficients c_0..c_N of sum c_m T_m(x/L).
  static ChebPoly from_coefficients(const std::vector<cplx>& full, double L);

  double halfwidth() const { return L_; }
  int degree() const;
  bool empty() const { return even_.empty() && odd_.empty(); }

  std::vector<cplx> even_coeffs() const;
  std::vector<cplx> odd_coeffs() const;
  std::vector<cplx> full_coeffs() const;

  /// Evaluates the interpolant; returns 0 outside [-L, L] (the proxy is a
  /// compactly supported surrogate).
  cplx eval(double x) const;

  /// Exact derivative of the interpolant (degree drops by one, parity flips).
  ChebPoly derivative() const;

  /// x -> f(-x): negates the odd coefficients.
  ChebPoly reflected() const;

  ChebPoly even_part() const;
  ChebPoly odd_part() const;

  /// The polynomial h with x h(x) = odd part of f, obtained by
  /// back-substituting the coefficient relations of multiplication by x in
  /// the Chebyshev basis (an upper-bidiagonal system). Throws AccuracyError
  /// if the verification residual exceeds residual_tol relative to the odd
  /// part.
  ChebPoly odd_divided_by_x(double residual_tol = 1e-8) const;

  /// Drops trailing coefficients below rel_tol * max coefficient magnitude.
  /// The dropped mass is recorded in trim_loss (relative).
  ChebPoly trimmed(double rel_tol) const;
  double trim_loss() const { return trim_loss_; }

  ChebPoly scaled(cplx factor) const;
  ChebPoly plus(const ChebPoly& other) const;  // same halfwidth required

  double max_coeff() const;

 private:
  double L_ = 1.0;
  std::vector<xcplx> even_;  // T_0, T_2, ...
  std::vector<xcplx> odd_;   // T_1, T_3, ...
  double trim_loss_ = 0.0;

  std::vector<xcplx> merged() const;
  static ChebPoly from_merged(std::vector<xcplx> full, double L, double carried_loss);
};

}  // namespace dunkl

#endif
