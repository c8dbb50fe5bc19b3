#include "dunkl/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dunkl {

namespace {

double ramp(double t) {
  // smooth 0 -> 1 transition, infinitely flat at both ends
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

cplx poly_eval(const std::vector<cplx>& p, double x) {
  cplx acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

ClosedForm ClosedForm::gaussian(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian: sigma must be > 0");
  ClosedForm f;
  f.kind_ = Kind::Gaussian;
  f.sigma_ = sigma;
  return f;
}

ClosedForm ClosedForm::poly_gaussian(std::vector<cplx> poly, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("poly_gaussian: sigma must be > 0");
  if (poly.empty()) poly.push_back(0.0);
  ClosedForm f;
  f.kind_ = Kind::PolyGaussian;
  f.sigma_ = sigma;
  f.poly_ = std::move(poly);
  return f;
}

ClosedForm ClosedForm::bump(double R, double rho) {
  if (!(R > 0.0)) throw std::invalid_argument("bump: R must be > 0");
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("bump: need 0 < rho < 1");
  ClosedForm f;
  f.kind_ = Kind::Bump;
  f.R_ = R;
  f.rho_ = rho;
  return f;
}

ClosedForm ClosedForm::indicator(double R) {
  if (!(R > 0.0)) throw std::invalid_argument("indicator: R must be > 0");
  ClosedForm f;
  f.kind_ = Kind::Indicator;
  f.R_ = R;
  return f;
}

cplx ClosedForm::eval(double x) const {
  switch (kind_) {
    case Kind::Gaussian:
      return std::exp(-x * x / (2.0 * sigma_ * sigma_));
    case Kind::PolyGaussian:
      return poly_eval(poly_, x) * std::exp(-x * x / (2.0 * sigma_ * sigma_));
    case Kind::Bump: {
      const double ax = std::abs(x);
      if (ax >= R_) return 0.0;
      if (ax <= rho_ * R_) return 1.0;
      return ramp((R_ - ax) / (R_ * (1.0 - rho_)));
    }
    case Kind::Indicator:
      return std::abs(x) <= R_ ? 1.0 : 0.0;
  }
  return 0.0;
}

double ClosedForm::decay_radius(double rel_tol) const {
  switch (kind_) {
    case Kind::Bump:
    case Kind::Indicator:
      return R_;
    case Kind::Gaussian:
      return sigma_ * std::sqrt(-2.0 * std::log(std::max(rel_tol, 1e-300)));
    case Kind::PolyGaussian: {
      // outer solve of |x|^d exp(-x^2/(2s^2)) = rel_tol * peak
      const double d = static_cast<double>(poly_.size());
      double r = sigma_ * std::sqrt(-2.0 * std::log(std::max(rel_tol, 1e-300)));
      for (int it = 0; it < 30; ++it)
        r = sigma_ * std::sqrt(2.0 * (-std::log(std::max(rel_tol, 1e-300)) +
                                      d * std::log(1.0 + r)));
      return r;
    }
  }
  return 0.0;
}

ClosedForm ClosedForm::dunkl_applied(const Multiplicity& k) const {
  const double s2 = sigma_ * sigma_;
  if (kind_ == Kind::Gaussian) {
    // T_k e^{-x^2/(2s^2)} = -x/s^2 e^{...} (even input, no reflection term)
    return poly_gaussian({0.0, -1.0 / s2}, sigma_);
  }
  if (kind_ == Kind::PolyGaussian) {
    // T_k (p G) = (p' - x p / s^2 + 2k * odd(p)/x) G
    const std::size_t n = poly_.size();
    std::vector<cplx> out(n + 1, 0.0);
    for (std::size_t j = 1; j < n; ++j) out[j - 1] += static_cast<double>(j) * poly_[j];
    for (std::size_t j = 0; j < n; ++j) out[j + 1] -= poly_[j] / s2;
    for (std::size_t j = 1; j < n; j += 2) out[j - 1] += 2.0 * k.value() * poly_[j];
    return poly_gaussian(std::move(out), sigma_);
  }
  throw std::invalid_argument(
      "dunkl_applied: closed form only for the Gaussian family");
}

}  // namespace dunkl
