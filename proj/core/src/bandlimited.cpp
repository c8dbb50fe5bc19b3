#include "dunkl/bandlimited.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/parallel.hpp"

namespace dunkl {

BandLimited::BandLimited(const Multiplicity& k, double R, double rho,
                         double eval_radius, WeightedGrid grid, cplx c_k,
                         double kernel_tol)
    : k_(k),
      R_(R),
      rho_(rho),
      eval_radius_(eval_radius),
      bump_(ClosedForm::bump(R, rho)),
      grid_(std::make_shared<WeightedGrid>(std::move(grid))),
      c_k_(c_k),
      ev_(k, kernel_tol) {
  const auto& pos = grid_->positive_nodes();
  wg_.reserve(pos.size());
  for (const auto& nd : pos) wg_.push_back(nd.w_k * bump_.eval(nd.x));
}

cplx BandLimited::eval(double x) const {
  const auto& pos = grid_->positive_nodes();
  const double ax = std::abs(x);
  std::vector<double> radii(pos.size());
  for (std::size_t j = 0; j < pos.size(); ++j) radii[j] = pos[j].x * ax;
  const auto pts = ev_.eval_ray(cplx(1.0, 0.0), radii);
  cplx acc = 0.0;
  for (std::size_t j = 0; j < pos.size(); ++j) acc += wg_[j] * pts[j].even;
  return 2.0 * acc / c_k_;
}

std::vector<cplx> BandLimited::eval_many(const std::vector<double>& xs) const {
  std::vector<cplx> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { out[i] = eval(xs[i]); });
  return out;
}

}  // namespace dunkl
