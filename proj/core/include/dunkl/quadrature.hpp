#ifndef DUNKL_QUADRATURE_HPP
#define DUNKL_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/multiplicity.hpp"

namespace dunkl {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree <= 2n-1.
/// Cached per order, thread-safe.
const QuadratureRule& gauss_legendre(int n);

/// Rule for the singular-weight integral on the unit panel:
///   int_0^1 f(s) s^alpha ds ~= sum_i w_i f(s_i),   alpha >= 0,
/// exact for polynomial f of degree <= 2n-1. Nodes are the mapped roots of
/// the Jacobi polynomial P_n^{(0,alpha)}.
QuadratureRule gauss_jacobi01(int n, double alpha);

struct WeightedNode {
  double x;
  double w_abs;  // quadrature weight times |w_k(x)| = |x|^{2 Re k}
  cplx w_k;      // quadrature weight times w_k(x) = |x|^{2k}
};

struct GridOptions {
  double delta = 0.1;           // origin panel halfwidth
  int gl_order = 32;            // Gauss-Legendre order on regular panels
  int jacobi_order = 24;        // order of the origin panels
  double max_panel_width = 6.0; // width cap away from the origin
  double max_freq = 0.0;        // largest oscillation frequency to resolve
};

/// Panel quadrature on [-xmax, xmax] for the measure w_k(x) dx with
/// w_k(x) = |x|^{2k}. Two origin panels [-delta, 0], [0, delta] carry
/// Gauss-Jacobi nodes absorbing |x|^{2 Re k}; panels then grow
/// geometrically away from the origin up to a width that resolves the
/// requested oscillation frequency. The oscillatory factor
/// exp(2i Im k ln|x|) of a complex multiplicity is folded into the node
/// weights, keeping the node measure real and positive.
class WeightedGrid {
 public:
  static WeightedGrid build(const Multiplicity& k, double xmax, GridOptions opt = {});

  const std::vector<WeightedNode>& nodes() const { return nodes_; }
  /// Nodes with x > 0 (the grid is symmetric; negatives mirror these).
  const std::vector<WeightedNode>& positive_nodes() const { return pos_nodes_; }
  double xmax() const { return xmax_; }
  const Multiplicity& k() const { return k_; }
  const GridOptions& options() const { return opt_; }

  /// sum of w_k * f(x) over all nodes, in fixed ascending-x order.
  template <class F>
  cplx integrate(F&& f) const {
    cplx acc = 0.0;
    for (const auto& nd : nodes_) acc += nd.w_k * f(nd.x);
    return acc;
  }

  /// sum of |w_k| * f(x), f real-valued.
  template <class F>
  double integrate_abs(F&& f) const {
    double acc = 0.0;
    for (const auto& nd : nodes_) acc += nd.w_abs * f(nd.x);
    return acc;
  }

 private:
  Multiplicity k_{0.0};
  double xmax_ = 0.0;
  GridOptions opt_;
  std::vector<WeightedNode> nodes_;
  std::vector<WeightedNode> pos_nodes_;
};

/// Convergence-controlled integration against w_k: every integral is
/// evaluated on a coarse/fine grid pair (orders m and 3m/2); disagreement
/// beyond tolerance triggers order doubling, at most max_refinements times,
/// after which AccuracyError carries the defect.
class CheckedQuadrature {
 public:
  CheckedQuadrature(const Multiplicity& k, double xmax, GridOptions opt = {},
                    double tol = 1e-10, int max_refinements = 2)
      : k_(k), xmax_(xmax), opt_(opt), tol_(tol), max_refinements_(max_refinements) {}

  template <class F>
  cplx integrate(F&& f, double scale = 0.0) {
    GridOptions o = opt_;
    for (int r = 0;; ++r) {
      const auto [coarse, fine] = grid_pair(o);
      const cplx vc = coarse.integrate(f);
      const cplx vf = fine.integrate(f);
      last_defect_ = std::abs(vc - vf);
      const double ref = std::max({scale, std::abs(vf), 1e-300});
      if (last_defect_ <= tol_ * ref) return vf;
      if (r >= max_refinements_)
        throw AccuracyError("quadrature did not converge under panel refinement",
                            last_defect_ / ref);
      o.gl_order *= 2;
      o.jacobi_order *= 2;
    }
  }

  template <class F>
  double integrate_abs(F&& f, double scale = 0.0) {
    GridOptions o = opt_;
    for (int r = 0;; ++r) {
      const auto [coarse, fine] = grid_pair(o);
      const double vc = coarse.integrate_abs(f);
      const double vf = fine.integrate_abs(f);
      last_defect_ = std::abs(vc - vf);
      const double ref = std::max({scale, std::abs(vf), 1e-300});
      if (last_defect_ <= tol_ * ref) return vf;
      if (r >= max_refinements_)
        throw AccuracyError("quadrature did not converge under panel refinement",
                            last_defect_ / ref);
      o.gl_order *= 2;
      o.jacobi_order *= 2;
    }
  }

  double last_defect() const { return last_defect_; }

 private:
  std::pair<WeightedGrid, WeightedGrid> grid_pair(const GridOptions& o) const {
    GridOptions fine = o;
    fine.gl_order = o.gl_order * 3 / 2;
    fine.jacobi_order = o.jacobi_order * 3 / 2;
    return {WeightedGrid::build(k_, xmax_, o), WeightedGrid::build(k_, xmax_, fine)};
  }

  Multiplicity k_;
  double xmax_;
  GridOptions opt_;
  double tol_;
  int max_refinements_;
  double last_defect_ = 0.0;
};

}  // namespace dunkl

#endif
