#ifndef DUNKL_CLOSEDFORM_HPP
#define DUNKL_CLOSEDFORM_HPP

#include <complex>
#include <vector>

#include "dunkl/multiplicity.hpp"

namespace dunkl {

/// Closed-form test families used across the experiments:
///  - Gaussian(sigma):           exp(-x^2 / (2 sigma^2))
///  - PolyGaussian(p, sigma):    p(x) exp(-x^2 / (2 sigma^2))
///  - Bump(R, rho):              smooth, = 1 on [-rho R, rho R], = 0 outside
///                               [-R, R], infinitely flat at the endpoints
///  - Indicator(R):              characteristic function of [-R, R]
/// The Gaussian family is closed under the Dunkl operator; the indicator is
/// admitted only for transform/norm operations (it is not C^1).
class ClosedForm {
 public:
  enum class Kind { Gaussian, PolyGaussian, Bump, Indicator };

  static ClosedForm gaussian(double sigma);
  static ClosedForm poly_gaussian(std::vector<cplx> poly, double sigma);
  static ClosedForm bump(double R, double rho);
  static ClosedForm indicator(double R);

  Kind kind() const { return kind_; }
  cplx eval(double x) const;
  bool smooth() const { return kind_ != Kind::Indicator; }
  bool compact() const { return kind_ == Kind::Bump || kind_ == Kind::Indicator; }

  /// radius beyond which |f| <= rel_tol * sup|f|
  double decay_radius(double rel_tol) const;

  /// T_k applied in closed form; defined for the Gaussian family only
  /// (bumps route through a spectral fit, indicators are not C^1).
  ClosedForm dunkl_applied(const Multiplicity& k) const;

  double sigma() const { return sigma_; }
  double R() const { return R_; }
  double rho() const { return rho_; }
  const std::vector<cplx>& poly() const { return poly_; }

 private:
  Kind kind_ = Kind::Gaussian;
  double sigma_ = 1.0;
  double R_ = 1.0;
  double rho_ = 0.5;
  std::vector<cplx> poly_;
};

}  // namespace dunkl

#endif
