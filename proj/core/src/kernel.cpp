#include "dunkl/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/quadrature.hpp"

namespace dunkl {

namespace {
constexpr cplx kI{0.0, 1.0};
}

KernelSeries KernelSeries::build(const Multiplicity& k, cplx lambda, double disc_radius,
                                 double tol, long cap, long n_min) {
  if (!(tol > 0.0)) throw std::invalid_argument("KernelSeries: tol must be > 0");
  if (!(disc_radius >= 0.0))
    throw std::invalid_argument("KernelSeries: disc_radius must be >= 0");
  KernelSeries s;
  s.k_ = k;
  s.lambda_ = lambda;
  s.disc_radius_ = disc_radius;
  s.c_.push_back(1.0);

  const double r = disc_radius;
  const cplx il = kI * lambda;
  double term = 1.0;  // |c_n| r^n
  for (long n = 1; n <= cap; ++n) {
    const cplx g = gamma_seq(k, n);
    s.c_.push_back(s.c_.back() * il / g);
    term = std::abs(s.c_.back()) * std::pow(r, static_cast<double>(n));
    if (n >= n_min) {
      const double ratio_next = std::abs(il) * r / std::abs(gamma_seq(k, n + 1));
      if (2.0 * term <= tol && ratio_next <= 0.5) {
        // geometric majorant: |tail| <= |c_{N+1}| r^{N+1} / (1 - q),
        // q <= |il| r / (N + 2) <= 1/2 since |gamma_m| >= m for Re k >= 0
        const double first = term * ratio_next;
        const double q = std::min(0.5, std::abs(il) * r / static_cast<double>(n + 2));
        s.tail_bound_ = first / (1.0 - q);
        return s;
      }
    }
  }
  const double achieved = 2.0 * term;
  throw TruncationError("KernelSeries: tolerance unreachable within term cap",
                        achieved, static_cast<int>(cap));
}

cplx KernelSeries::eval(cplx z) const {
  // Horner on the stored coefficients
  cplx acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

KernelEvaluator::Point KernelEvaluator::origin_series(cplx u, double tol_abs) const {
  Point p;
  p.even = 1.0;
  p.terms = 1;
  cplx t = 1.0;  // c_n u^n
  const double au = std::abs(u);
  for (long n = 1; n <= series_cap; ++n) {
    const cplx g = gamma_seq(k_, n);
    const cplx t_div = t * (kI / g);  // c_n u^{n-1}: stays finite at u = 0
    t = t_div * u;
    const double dn = static_cast<double>(n);
    if (n % 2 == 0) {
      p.even += t;
      p.deven += dn * t_div;
    } else {
      p.odd += t;
      p.odd_over_u += t_div;
      p.dodd += dn * t_div;
    }
    p.terms = static_cast<int>(n) + 1;
    if (n >= 8) {
      const double at = std::abs(t);
      const double ratio_next = au / std::abs(gamma_seq(k_, n + 1));
      if (2.0 * at <= tol_abs && ratio_next <= 0.5) {
        const double q = std::min(0.5, au / static_cast<double>(n + 2));
        p.tail_bound = at * ratio_next / (1.0 - q);
        return p;
      }
    }
  }
  throw TruncationError("kernel series: tolerance unreachable within term cap",
                        2.0 * std::abs(t), static_cast<int>(series_cap));
}

namespace {

// One recentered Taylor step: coefficients of E, O around center a from the
// state (E(a), O(a)), evaluated at every requested offset (all with
// |offset| <= ds along the ray). Returns the certified step tail bound.
struct StepEval {
  cplx even, odd, deven, dodd;
};

double taylor_step(const cplx twok, const cplx a, const cplx e0, const cplx o0,
                   double ds, cplx dir, const std::vector<double>& offsets,
                   std::vector<StepEval>& out, int order_cap, double tol_step) {
  constexpr cplx kI{0.0, 1.0};
  thread_local std::vector<cplx> e, o;
  e.assign(1, e0);
  o.assign(1, o0);

  double tail = -1.0;
  double prev_tau = 1e308;
  for (int m = 0;; ++m) {
    const cplx em = e[m];
    const cplx om = o[m];
    const cplx em1 = (m >= 1) ? e[m - 1] : cplx(0.0);
    const double mp1 = static_cast<double>(m + 1);
    e.push_back(kI * om / mp1);
    o.push_back((kI * a * em + kI * em1 - (static_cast<double>(m) + twok) * om) /
                (a * mp1));
    const double tau =
        (std::abs(e.back()) + std::abs(o.back())) * std::pow(ds, mp1);
    if (m + 1 >= 10 && tau <= 0.25 * tol_step && tau <= prev_tau * 0.6) {
      const double r = std::min(0.6, tau / prev_tau);
      tail = tau * (1.0 + r / (1.0 - r));
      break;
    }
    prev_tau = std::max(tau, 1e-300);
    if (m + 1 >= order_cap) return -1.0;  // caller halves the step
  }

  const int order = static_cast<int>(e.size()) - 1;
  out.resize(offsets.size());
  for (std::size_t j = 0; j < offsets.size(); ++j) {
    const cplx v = offsets[j] * dir;
    cplx se = 0.0, so = 0.0, sde = 0.0, sdo = 0.0;
    for (int m = order; m >= 1; --m) {
      se = se * v + e[m];
      so = so * v + o[m];
      sde = sde * v + static_cast<double>(m) * e[m];
      sdo = sdo * v + static_cast<double>(m) * o[m];
    }
    out[j].even = se * v + e[0];
    out[j].odd = so * v + o[0];
    out[j].deven = sde;
    out[j].dodd = sdo;
  }
  return tail;
}

}  // namespace

std::vector<KernelEvaluator::Point> KernelEvaluator::eval_ray(
    cplx dir, const std::vector<double>& radii) const {
  std::vector<Point> result(radii.size());
  if (radii.empty()) return result;
  const double rmax = radii.back();
  if (std::abs(dir.imag()) * rmax > im_guard)
    throw RangeError("kernel evaluation out of double range: |Im(lambda z)| too large");

  // near-origin points straight from the series
  std::size_t j = 0;
  while (j < radii.size() && radii[j] <= series_cutoff) {
    result[j] = origin_series(radii[j] * dir, tol_ * std::exp(std::abs((radii[j] * dir).imag())));
    ++j;
  }
  if (j == radii.size()) return result;

  const double total_len = rmax - series_cutoff;
  const int est_steps = static_cast<int>(total_len / step) + 2;
  // absolute budget, relative to the growth envelope along the ray
  const double env = std::exp(std::abs(dir.imag()) * rmax);
  const double tol_leg = 0.5 * tol_ * env;
  const double tol_step = tol_leg / est_steps;

  Point state = origin_series(series_cutoff * dir, 0.5 * tol_);
  double bound = state.tail_bound;
  int terms = state.terms;
  double s = series_cutoff;

  std::vector<double> offsets;
  std::vector<StepEval> vals;
  while (s < rmax * (1.0 - 1e-15)) {
    double ds = std::min(step, rmax - s);
    // offsets: requested radii inside (s, s+ds], plus the step endpoint
    for (;;) {
      offsets.clear();
      std::size_t jj = j;
      while (jj < radii.size() && radii[jj] <= s + ds * (1.0 + 1e-15)) {
        offsets.push_back(radii[jj] - s);
        ++jj;
      }
      offsets.push_back(ds);
      const cplx a = s * dir;
      const double tail = taylor_step(2.0 * k_.value(), a, state.even, state.odd, ds,
                                      dir, offsets, vals, local_order_cap, tol_step);
      if (tail >= 0.0) {
        bound += tail;
        terms += static_cast<int>(offsets.size());
        // record interior points
        std::size_t idx = 0;
        for (; j < jj; ++j, ++idx) {
          const cplx u = radii[j] * dir;
          result[j].even = vals[idx].even;
          result[j].odd = vals[idx].odd;
          result[j].odd_over_u = vals[idx].odd / u;
          result[j].deven = vals[idx].deven;
          result[j].dodd = vals[idx].dodd;
          result[j].tail_bound = bound;
          result[j].terms = terms;
        }
        state.even = vals.back().even;
        state.odd = vals.back().odd;
        state.deven = vals.back().deven;
        state.dodd = vals.back().dodd;
        s += ds;
        break;
      }
      ds *= 0.5;
      if (ds < 1e-3)
        throw TruncationError("kernel marching: step tolerance unreachable", tol_step,
                              terms);
    }
  }
  return result;
}

KernelEvaluator::Point KernelEvaluator::eval_u(cplx u) const {
  const double au = std::abs(u);
  if (au <= series_cutoff)
    return origin_series(u, tol_ * std::exp(std::abs(u.imag())));
  if (std::abs(u.imag()) > im_guard)
    throw RangeError("kernel evaluation out of double range: |Im(lambda z)| too large");
  const cplx dir = u / au;
  auto pts = eval_ray(dir, {au});
  return pts[0];
}

KernelValue kernel_eval(const Multiplicity& k, cplx lambda, cplx z, double tol) {
  KernelEvaluator ev(k, tol);
  const auto p = ev.eval_u(lambda * z);
  return {p.value(), p.tail_bound, p.terms};
}

double kernel_residual(const Multiplicity& k, cplx lambda, double x, double tol) {
  if (!std::isfinite(x)) throw std::invalid_argument("kernel_residual: x must be finite");
  KernelEvaluator ev(k, tol);
  const cplx u = lambda * x;
  const double au = std::abs(u);

  const auto at_x = ev.eval_u(u);
  const cplx psi = at_x.value();
  const cplx dpsi_z = lambda * at_x.deriv_u();  // f'(x) = lambda psi'(u)

  // reflection term through the integral form: k int_{-1}^1 f'(tx) dt,
  // with f'(tx) = lambda psi'(u t). Gauss-Legendre in t; the integrand is
  // entire, so the order only needs to scale with |u|.
  int order = 48 + static_cast<int>(0.75 * au);
  order = std::min(order, 512);
  const auto& rule = gauss_legendre(order);

  cplx integral = 0.0;
  if (au == 0.0) {
    const cplx dpsi0 = ev.eval_u(0.0).deriv_u();
    for (int i = 0; i < order; ++i) integral += rule.weights[i] * lambda * dpsi0;
  } else {
    const cplx dir = u / au;
    std::vector<double> radii(order);
    for (int i = 0; i < order; ++i) radii[i] = std::abs(rule.nodes[i]) * au;
    std::vector<std::size_t> perm(order);
    for (int i = 0; i < order; ++i) perm[i] = static_cast<std::size_t>(i);
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return radii[a] < radii[b]; });
    std::vector<double> sorted(order);
    std::vector<std::size_t> where(order);
    for (int i = 0; i < order; ++i) {
      sorted[i] = radii[perm[i]];
      where[perm[i]] = static_cast<std::size_t>(i);
    }
    const auto pts = ev.eval_ray(dir, sorted);
    for (int i = 0; i < order; ++i) {
      const auto& p = pts[where[static_cast<std::size_t>(i)]];
      // psi'( t u ) for t < 0 via parity: E' is odd, O' is even in u
      const cplx dval = (rule.nodes[i] >= 0.0) ? p.deriv_u() : (-p.deven + p.dodd);
      integral += rule.weights[i] * lambda * dval;
    }
  }

  const cplx resid = dpsi_z + k.value() * integral - kI * lambda * psi;
  return std::abs(resid);
}

}  // namespace dunkl
