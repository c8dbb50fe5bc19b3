#ifndef DUNKL_BANDLIMITED_HPP
#define DUNKL_BANDLIMITED_HPP

#include <memory>
#include <vector>

#include "dunkl/closedform.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/multiplicity.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {

/// Function with exactly known spectral support: f = inverse transform of a
/// smooth bump g supported in [-R, R] (the canonical band-limited test
/// input). Evaluation integrates g against the kernel on a cached weighted
/// lambda-grid:
///     f(x) = (2 / c_k) sum_{lambda_j > 0} w_j g_j E(lambda_j |x|),
/// using that g and w_k are even, which folds the +-lambda and +-x pairs
/// into the even kernel part. The grid resolves oscillation up to
/// |x| <= eval_radius.
class BandLimited {
 public:
  BandLimited(const Multiplicity& k, double R, double rho, double eval_radius,
              WeightedGrid grid, cplx c_k, double kernel_tol);

  double R() const { return R_; }
  double rho() const { return rho_; }
  double eval_radius() const { return eval_radius_; }
  const Multiplicity& k() const { return k_; }
  cplx c_k() const { return c_k_; }

  cplx eval(double x) const;
  std::vector<cplx> eval_many(const std::vector<double>& xs) const;

  /// g evaluated on the spectrum (the synthetic profile).
  double g(double lambda) const { return bump_.eval(lambda).real(); }
  const ClosedForm& bump() const { return bump_; }
  const WeightedGrid& spectral_grid() const { return *grid_; }
  /// w_j * g_j over the positive spectral nodes, aligned with
  /// spectral_grid().positive_nodes().
  const std::vector<cplx>& weighted_g() const { return wg_; }
  const KernelEvaluator& evaluator() const { return ev_; }

 private:
  Multiplicity k_{0.0};
  double R_ = 1.0;
  double rho_ = 0.9;
  double eval_radius_ = 0.0;
  ClosedForm bump_;
  std::shared_ptr<const WeightedGrid> grid_;
  std::vector<cplx> wg_;
  cplx c_k_{};
  KernelEvaluator ev_;
};

}  // namespace dunkl

#endif
