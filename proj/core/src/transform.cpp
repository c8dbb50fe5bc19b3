#include "dunkl/transform.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "dunkl/parallel.hpp"

namespace dunkl {

namespace {

constexpr cplx kI{0.0, 1.0};

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// int f(t) psi_{sign * p_i}(t) w_k(t) dt over the grid, for real points p_i.
// One kernel march per positive node row covers every p_i and both signs of
// t (the grid is symmetric and w_k is even). Accumulation runs in ascending
// node order regardless of the thread count.
std::vector<cplx> kernel_integrals(const KernelEvaluator& ev, const WeightedGrid& grid,
                                   const std::function<cplx(double)>& f,
                                   const std::vector<double>& points, int sign,
                                   std::vector<double>* cancellation = nullptr,
                                   double* l1_abs = nullptr) {
  const auto& pos = grid.positive_nodes();
  const std::size_t rows = pos.size();
  const std::size_t q = points.size();

  // sort |p| once; multiplying by x > 0 preserves the order
  std::vector<std::size_t> rank(q);
  {
    std::vector<std::size_t> idx(q);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(points[a]) < std::abs(points[b]);
    });
    for (std::size_t r = 0; r < q; ++r) rank[idx[r]] = r;
  }
  std::vector<double> asorted(q);
  for (std::size_t i = 0; i < q; ++i) asorted[rank[i]] = std::abs(points[i]);

  std::vector<cplx> acc(q, 0.0);
  std::vector<double> abs_acc(q, 0.0);

  const std::size_t chunk = std::max<std::size_t>(
      1, std::min<std::size_t>(rows, (8u << 20) / (sizeof(cplx) * std::max<std::size_t>(q, 1))));
  std::vector<cplx> buf(chunk * q);
  std::vector<double> abuf(cancellation ? chunk * q : 0);
  std::vector<double> l1buf(l1_abs ? chunk : 0);
  double l1 = 0.0;

  for (std::size_t base = 0; base < rows; base += chunk) {
    const std::size_t cnt = std::min(chunk, rows - base);
    parallel_for(cnt, [&](std::size_t r) {
      const std::size_t j = base + r;
      const double x = pos[j].x;
      const cplx w = pos[j].w_k;
      const cplx fp = f(x);
      const cplx fm = f(-x);
      const cplx fsum = fp + fm;
      const cplx fdif = fp - fm;
      if (l1_abs) l1buf[r] = pos[j].w_abs * (std::abs(fp) + std::abs(fm));
      std::vector<double> radii(q);
      for (std::size_t s = 0; s < q; ++s) radii[s] = asorted[s] * x;
      const auto pts = ev.eval_ray(cplx(1.0, 0.0), radii);
      for (std::size_t i = 0; i < q; ++i) {
        const auto& pt = pts[rank[i]];
        const double s = sign >= 0 ? sgn(points[i]) : -sgn(points[i]);
        buf[r * q + i] = w * (fsum * pt.even + s * fdif * pt.odd);
        if (cancellation)
          abuf[r * q + i] = std::abs(w) * (std::abs(fp) + std::abs(fm)) *
                            (std::abs(pt.even) + std::abs(pt.odd));
      }
    });
    for (std::size_t r = 0; r < cnt; ++r) {
      for (std::size_t i = 0; i < q; ++i) {
        acc[i] += buf[r * q + i];
        if (cancellation) abs_acc[i] += abuf[r * q + i];
      }
      if (l1_abs) l1 += l1buf[r];
    }
  }
  if (l1_abs) *l1_abs = l1;
  if (cancellation) {
    cancellation->assign(q, 0.0);
    for (std::size_t i = 0; i < q; ++i)
      (*cancellation)[i] = abs_acc[i] / std::max(std::abs(acc[i]), 1e-300);
  }
  return acc;
}

struct FillResult {
  std::vector<cplx> values;
  double defect = 0.0;
  double l1_abs = 0.0;  // int |f| |w_k| on the fine grid
};

FillResult checked_kernel_integrals(const Multiplicity& k, const KernelEvaluator& ev,
                                    const std::function<cplx(double)>& f,
                                    const std::vector<double>& points, int sign,
                                    double xmax, const TransformOptions& opt,
                                    std::vector<double>* cancellation = nullptr) {
  GridOptions o = opt.grid;
  for (int r = 0;; ++r) {
    GridOptions fine = o;
    fine.gl_order = o.gl_order * 3 / 2;
    fine.jacobi_order = o.jacobi_order * 3 / 2;
    const WeightedGrid gc = WeightedGrid::build(k, xmax, o);
    const WeightedGrid gf = WeightedGrid::build(k, xmax, fine);
    const auto vc = kernel_integrals(ev, gc, f, points, sign);
    double l1 = 0.0;
    auto vf = kernel_integrals(ev, gf, f, points, sign, cancellation, &l1);
    double scale = std::max(opt.scale_floor, 1e-300);
    for (const auto& v : vf) scale = std::max(scale, std::abs(v));
    double defect = 0.0;
    for (std::size_t i = 0; i < vf.size(); ++i)
      defect = std::max(defect, std::abs(vc[i] - vf[i]));
    if (defect <= opt.quad_tol * scale) return {std::move(vf), defect / scale, l1};
    if (r >= opt.max_refinements)
      throw AccuracyError("transform quadrature did not converge", defect / scale);
    o.gl_order *= 2;
    o.jacobi_order *= 2;
  }
}

std::function<cplx(double)> as_callable(const FuncRep& f) {
  return [&f](double x) { return eval(f, x); };
}

}  // namespace

cplx weight_constant(const Multiplicity& k) {
  static std::mutex mu;
  static std::map<std::pair<double, double>, cplx> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    const auto it = cache.find({k.re(), k.im()});
    if (it != cache.end()) return it->second;
  }
  const double alpha = 2.0 * k.re();
  // X with e^{-X^2/2} X^alpha below 1e-18 relative
  double X = 9.5;
  for (int it = 0; it < 40; ++it) X = std::sqrt(2.0 * (42.0 + alpha * std::log(X)));
  GridOptions g;
  g.max_freq = 0.0;
  CheckedQuadrature q(k, X, g, 1e-12, 2);
  const cplx v =
      q.integrate([](double x) { return cplx(std::exp(-0.5 * x * x), 0.0); });
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(std::make_pair(k.re(), k.im()), v);
  return v;
}

SpectralProfile dunkl_transform(const Multiplicity& k, const FuncRep& f,
                                std::vector<double> lambdas,
                                const TransformOptions& opt) {
  const double xmax =
      std::min(decay_radius(f, opt.envelope_cutoff), opt.domain_cap);
  double max_abs_l = 0.0;
  for (double l : lambdas) max_abs_l = std::max(max_abs_l, std::abs(l));

  TransformOptions o = opt;
  o.grid.max_freq = std::max({opt.grid.max_freq, max_abs_l, max_frequency(f)});
  const KernelEvaluator ev(k, opt.kernel_tol);
  const cplx c = weight_constant(k);
  o.scale_floor = opt.scale_floor * std::abs(c);

  auto fill = checked_kernel_integrals(k, ev, as_callable(f), lambdas, -1, xmax, o);

  SpectralProfile p;
  p.k = k;
  p.grid = std::move(lambdas);
  p.values.resize(fill.values.size());
  for (std::size_t i = 0; i < fill.values.size(); ++i) p.values[i] = fill.values[i] / c;
  p.provenance = "computed-from-f";
  p.truncation_radius = xmax;
  p.defect = fill.defect;

  if (k.is_real()) {
    // |D_k f| <= (1/|c_k|) int |f| |w_k| (sharp bound for real multiplicities;
    // the bound itself carries the fill grid's quadrature error, hence the
    // small inflation)
    const double bound = fill.l1_abs / std::abs(c) * (1.0 + 1e-6);
    for (const auto& v : p.values)
      if (std::abs(v) > bound + 1e-9 * (1.0 + bound) + p.defect * bound)
        throw AccuracyError("transform exceeded its L1 bound", std::abs(v) - bound);
  }
  return p;
}

std::vector<cplx> dunkl_transform_complex(const Multiplicity& k, const FuncRep& f,
                                          const std::vector<cplx>& zs,
                                          const TransformOptions& opt) {
  if (!compactly_supported(f))
    throw std::invalid_argument(
        "dunkl_transform_complex: requires a compactly supported representation");
  const double xmax = decay_radius(f, opt.envelope_cutoff);
  double max_abs = 0.0;
  for (const auto& z : zs) max_abs = std::max(max_abs, std::abs(z));

  TransformOptions o = opt;
  o.grid.max_freq = std::max({opt.grid.max_freq, max_abs, max_frequency(f)});
  const KernelEvaluator ev(k, opt.kernel_tol);
  const cplx c = weight_constant(k);
  const auto fc = as_callable(f);

  GridOptions base = o.grid;
  for (int r = 0;; ++r) {
    GridOptions fineo = base;
    fineo.gl_order = base.gl_order * 3 / 2;
    fineo.jacobi_order = base.jacobi_order * 3 / 2;
    const WeightedGrid gc = WeightedGrid::build(k, xmax, base);
    const WeightedGrid gf = WeightedGrid::build(k, xmax, fineo);

    const auto fill = [&](const WeightedGrid& grid) {
      const auto& pos = grid.positive_nodes();
      std::vector<cplx> fsum(pos.size()), fdif(pos.size());
      for (std::size_t j = 0; j < pos.size(); ++j) {
        const cplx fp = fc(pos[j].x);
        const cplx fm = fc(-pos[j].x);
        fsum[j] = fp + fm;
        fdif[j] = fp - fm;
      }
      std::vector<cplx> out(zs.size());
      parallel_for(zs.size(), [&](std::size_t i) {
        const cplx z = zs[i];
        const double az = std::abs(z);
        cplx acc = 0.0;
        if (az == 0.0) {
          for (std::size_t j = 0; j < pos.size(); ++j) acc += pos[j].w_k * fsum[j];
        } else {
          const cplx dir = -z / az;  // u = -z x along this ray for x > 0
          std::vector<double> radii(pos.size());
          for (std::size_t j = 0; j < pos.size(); ++j) radii[j] = az * pos[j].x;
          const auto pts = ev.eval_ray(dir, radii);
          for (std::size_t j = 0; j < pos.size(); ++j)
            acc += pos[j].w_k * (fsum[j] * pts[j].even + fdif[j] * pts[j].odd);
        }
        out[i] = acc;
      });
      return out;
    };

    const auto vc = fill(gc);
    const auto vf = fill(gf);
    double scale = std::max(opt.scale_floor * std::abs(c), 1e-300), defect = 0.0;
    for (const auto& v : vf) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < vf.size(); ++i)
      defect = std::max(defect, std::abs(vc[i] - vf[i]));
    if (defect <= opt.quad_tol * scale) {
      std::vector<cplx> out(vf.size());
      for (std::size_t i = 0; i < vf.size(); ++i) out[i] = vf[i] / c;
      return out;
    }
    if (r >= opt.max_refinements)
      throw AccuracyError("complex-argument transform did not converge",
                          defect / scale);
    base.gl_order *= 2;
    base.jacobi_order *= 2;
  }
}

QuadProfile dunkl_transform_quad(const Multiplicity& k, const FuncRep& f,
                                 double lambda_max, double inverse_domain,
                                 const TransformOptions& opt) {
  TransformOptions o = opt;
  // the lambda-grid sees two oscillation scales: the kernel at |x| up to
  // inverse_domain and D_k f itself at the support radius of f
  o.grid.max_freq = std::max(
      opt.grid.max_freq, inverse_domain + decay_radius(f, opt.envelope_cutoff));
  GridOptions go = o.grid;
  go.gl_order = go.gl_order * 3 / 2;
  go.jacobi_order = go.jacobi_order * 3 / 2;
  auto grid = std::make_shared<WeightedGrid>(WeightedGrid::build(k, lambda_max, go));

  std::vector<double> lambdas;
  lambdas.reserve(grid->nodes().size());
  for (const auto& nd : grid->nodes()) lambdas.push_back(nd.x);

  SpectralProfile p = dunkl_transform(k, f, lambdas, o);
  QuadProfile qp;
  qp.k = k;
  qp.grid = std::move(grid);
  qp.values = std::move(p.values);
  qp.truncation_radius = p.truncation_radius;
  qp.defect = p.defect;
  return qp;
}

std::vector<cplx> inverse_transform(const Multiplicity& k, const QuadProfile& g,
                                    const std::vector<double>& xs) {
  const KernelEvaluator ev(k, 1e-12);
  const cplx c = weight_constant(k);
  const auto& pos = g.grid->positive_nodes();
  const std::size_t m = pos.size();

  std::vector<cplx> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    const double x = xs[i];
    const double ax = std::abs(x);
    const double s = sgn(x);
    std::vector<double> radii(m);
    for (std::size_t j = 0; j < m; ++j) radii[j] = pos[j].x * ax;
    const auto pts = ev.eval_ray(cplx(1.0, 0.0), radii);
    cplx acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const cplx gp = g.values[m + j];      // value at +lambda_j
      const cplx gm = g.values[m - 1 - j];  // value at -lambda_j
      acc += pos[j].w_k * ((gp + gm) * pts[j].even + s * (gp - gm) * pts[j].odd);
    }
    out[i] = acc / c;
  });
  return out;
}

std::vector<cplx> inverse_transform(const Multiplicity& k, const FuncRep& g,
                                    double lambda_max, const std::vector<double>& xs,
                                    const TransformOptions& opt) {
  // same integral with the roles of x and lambda exchanged (the kernel is
  // symmetric) and the opposite kernel sign
  double max_abs_x = 0.0;
  for (double x : xs) max_abs_x = std::max(max_abs_x, std::abs(x));
  TransformOptions o = opt;
  o.grid.max_freq = std::max({opt.grid.max_freq, max_abs_x, max_frequency(g)});
  const KernelEvaluator ev(k, opt.kernel_tol);
  const cplx c = weight_constant(k);
  o.scale_floor = opt.scale_floor * std::abs(c);
  const double lmax = std::min(
      {lambda_max, decay_radius(g, opt.envelope_cutoff), opt.domain_cap});
  auto fill = checked_kernel_integrals(k, ev, as_callable(g), xs, +1, lmax, o);
  for (auto& v : fill.values) v /= c;
  return std::move(fill.values);
}

cplx weighted_inner(const Multiplicity& k, const FuncRep& f, const FuncRep& g,
                    const TransformOptions& opt) {
  const double xmax = std::min({decay_radius(f, opt.envelope_cutoff),
                                decay_radius(g, opt.envelope_cutoff), opt.domain_cap});
  GridOptions go = opt.grid;
  go.max_freq = std::max({go.max_freq, max_frequency(f), max_frequency(g)});
  CheckedQuadrature q(k, xmax, go, opt.quad_tol, opt.max_refinements);
  // anchor the convergence scale to the absolute mass so that integrals that
  // vanish by parity do not demand relative accuracy at the roundoff floor;
  // a single fixed grid is plenty for an anchor
  const double mass = WeightedGrid::build(k, xmax, go).integrate_abs(
      [&](double x) { return std::abs(eval(f, x)) * std::abs(eval(g, x)); });
  return q.integrate([&](double x) { return eval(f, x) * eval(g, x); }, mass);
}

double lp_norm(const Multiplicity& k, const FuncRep& f, double p, bool use_abs,
               const TransformOptions& opt) {
  (void)use_abs;  // every p < inf norm integrates against |x|^{2 Re k}
  if (std::isinf(p)) return sup_norm(f);
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: need 1 <= p <= inf");
  const double xmax = std::min(decay_radius(f, opt.envelope_cutoff), opt.domain_cap);
  GridOptions go = opt.grid;
  go.max_freq = std::max(go.max_freq, max_frequency(f));
  // |f|^p has kinks at the sign changes of f for p < 2; panel quadrature
  // converges only algebraically there, so the convergence gate matches what
  // the rule can deliver (the p = 1 norms feed 1e-2-level comparisons)
  const double tol = (p < 2.0) ? std::max(opt.quad_tol, 1e-4) : opt.quad_tol;
  CheckedQuadrature q(k, xmax, go, tol, opt.max_refinements);
  const double val =
      q.integrate_abs([&](double x) { return std::pow(std::abs(eval(f, x)), p); });
  return std::pow(val, 1.0 / p);
}

BandLimited band_limited_synthesize(const Multiplicity& k, double R, double rho,
                                    double eval_radius, const TransformOptions& opt) {
  if (!(R > 0.0)) throw std::invalid_argument("band_limited_synthesize: R > 0");
  if (!(rho > 0.0 && rho < 1.0))
    throw std::invalid_argument("band_limited_synthesize: 0 < rho < 1");
  const cplx c = weight_constant(k);
  GridOptions go = opt.grid;
  go.delta = std::min(go.delta, R / 8.0);
  go.max_freq = eval_radius;

  const std::vector<double> probes = {0.0, 0.37 * eval_radius, eval_radius};
  for (int r = 0;; ++r) {
    GridOptions fine = go;
    fine.gl_order = go.gl_order * 3 / 2;
    fine.jacobi_order = go.jacobi_order * 3 / 2;
    BandLimited coarse(k, R, rho, eval_radius, WeightedGrid::build(k, R, go), c,
                       opt.kernel_tol);
    BandLimited fine_bl(k, R, rho, eval_radius, WeightedGrid::build(k, R, fine), c,
                        opt.kernel_tol);
    double defect = 0.0, scale = std::abs(fine_bl.eval(0.0));
    for (double x : probes)
      defect = std::max(defect, std::abs(coarse.eval(x) - fine_bl.eval(x)));
    if (defect <= opt.quad_tol * std::max(scale, 1e-300)) return fine_bl;
    if (r >= opt.max_refinements)
      throw AccuracyError("band-limited synthesis grid did not converge",
                          defect / std::max(scale, 1e-300));
    go.gl_order *= 2;
    go.jacobi_order *= 2;
  }
}

SpectralProfile band_profile(const BandLimited& bl, int samples) {
  SpectralProfile p;
  p.k = bl.k();
  p.provenance = "synthetic-g";
  p.truncation_radius = bl.R();
  const double R = bl.R();
  for (int i = 0; i < samples; ++i) {
    const double l = -R + 2.0 * R * i / (samples - 1);
    p.grid.push_back(l);
    p.values.push_back(bl.g(l));
  }
  return p;
}

SpectralSource make_source(const BandLimited& bl) {
  SpectralSource s;
  s.k = bl.k();
  s.lambda_grid = std::make_shared<WeightedGrid>(bl.spectral_grid());
  s.wg_pos = bl.weighted_g();
  s.lambda_sup = bl.R();
  s.compact_spectrum = true;
  s.R_true = bl.R();
  s.c_k = bl.c_k();
  const ClosedForm bump = bl.bump();
  s.g_eval = [bump](double l) { return bump.eval(l).real(); };
  BandLimited copy = bl;
  s.f_eval = [copy](double x) { return copy.eval(x); };
  s.x_budget = bl.eval_radius();
  s.tag = "bandlimited";
  return s;
}

SpectralSource make_gaussian_source(const Multiplicity& k, int n_max,
                                    const TransformOptions& opt) {
  // spectrum g = e^{-lambda^2/2}; lambda^n g must be covered up to n_max
  const double n = std::max(n_max, 1);
  double lam = std::sqrt(n) + 1.0;
  const double peak = 0.5 * n * std::log(n) - 0.5 * n;
  for (int it = 0; it < 60; ++it) {
    const double fv = n * std::log(lam) - 0.5 * lam * lam - (peak - 42.0);
    const double dv = n / lam - lam;
    lam -= fv / dv;
  }
  SpectralSource s;
  s.k = k;
  GridOptions go = opt.grid;
  go.max_freq = 64.0;  // norms of the Gaussian chain live at |x| <~ sqrt(2 n)
  go.gl_order = go.gl_order * 3 / 2;
  go.jacobi_order = go.jacobi_order * 3 / 2;
  s.lambda_grid = std::make_shared<WeightedGrid>(WeightedGrid::build(k, lam, go));
  s.g_eval = [](double l) { return std::exp(-0.5 * l * l); };
  for (const auto& nd : s.lambda_grid->positive_nodes())
    s.wg_pos.push_back(nd.w_k * s.g_eval(nd.x));
  s.lambda_sup = lam;
  s.compact_spectrum = false;
  s.c_k = weight_constant(k);
  s.f_eval = [](double x) { return cplx(std::exp(-0.5 * x * x), 0.0); };
  s.x_budget = 64.0;
  s.tag = "gaussian";
  return s;
}

SpectralSource resample_source(const SpectralSource& src, const GridOptions& grid_opt) {
  SpectralSource s = src;
  s.lambda_grid = std::make_shared<WeightedGrid>(
      WeightedGrid::build(src.k, src.lambda_sup, grid_opt));
  s.wg_pos.clear();
  for (const auto& nd : s.lambda_grid->positive_nodes())
    s.wg_pos.push_back(nd.w_k * src.g_eval(nd.x));
  s.x_budget = grid_opt.max_freq;
  return s;
}

PowerEvaluator::PowerEvaluator(SpectralSource src, double kernel_tol)
    : src_(std::move(src)), ev_(src_.k, kernel_tol) {
  for (const auto& nd : src_.lambda_grid->positive_nodes()) lpos_.push_back(nd.x);
}

std::vector<std::vector<cplx>> PowerEvaluator::values(const std::vector<double>& xs,
                                                      const std::vector<int>& ns) const {
  const std::size_t nx = xs.size();
  const std::size_t nl = lpos_.size();
  int n_hi = 0;
  for (int n : ns) n_hi = std::max(n_hi, n);

  std::vector<std::vector<cplx>> out(ns.size(), std::vector<cplx>(nx));
  // parallel over x; each row owns its output slots across every n
  parallel_for(nx, [&](std::size_t i) {
    const double ax = std::abs(xs[i]);
    std::vector<double> radii(nl);
    for (std::size_t j = 0; j < nl; ++j) radii[j] = lpos_[j] * ax;
    const auto pts = ev_.eval_ray(cplx(1.0, 0.0), radii);

    // fold (i lambda)^n g against the even/odd kernel parts; lambda^n by
    // running products so every requested n shares the row
    thread_local std::vector<cplx> acc;
    acc.assign(static_cast<std::size_t>(n_hi) + 1, cplx(0.0));
    for (std::size_t j = 0; j < nl; ++j) {
      const cplx wg = src_.wg_pos[j];
      const double l = lpos_[j];
      double lp = 1.0;
      for (int n = 0; n <= n_hi; ++n) {
        acc[n] += wg * lp * (n % 2 == 0 ? pts[j].even : pts[j].odd);
        lp *= l;
      }
    }
    for (std::size_t a = 0; a < ns.size(); ++a) {
      const int n = ns[a];
      static const cplx ipow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
      out[a][i] = 2.0 * ipow[n % 4] * acc[n] / src_.c_k;
    }
  });
  return out;
}

PowerNormGrids make_power_norm_grids(const SpectralSource& src, int n_max,
                                     const TransformOptions& opt,
                                     double domain_override) {
  const Multiplicity& k = src.k;
  const double alpha = 2.0 * k.re();

  // probe the envelope of the highest power to pick the norm domain
  double domain = domain_override, sup_domain = 0.0;
  {
    const double cap = std::min({opt.domain_cap, src.x_budget});
    std::vector<double> probe_xs;
    const int np = 96;
    for (int i = 0; i <= np; ++i)
      probe_xs.push_back(std::exp(std::log(1.0) +
                                  (std::log(cap) - std::log(1.0)) * i / np));
    PowerEvaluator probe(src, opt.kernel_tol);
    const auto vals = probe.values(probe_xs, {std::max(1, n_max)});
    double peak_w = 0.0, peak_s = 0.0;
    std::vector<double> wv(probe_xs.size()), sv(probe_xs.size());
    for (std::size_t i = 0; i < probe_xs.size(); ++i) {
      sv[i] = std::abs(vals[0][i]);
      wv[i] = sv[i] * std::pow(probe_xs[i], alpha + 1.0);  // integrand mass scale
      peak_w = std::max(peak_w, wv[i]);
      peak_s = std::max(peak_s, sv[i]);
    }
    if (domain <= 0.0) {
      domain = cap;
      int run = 0;
      for (std::size_t i = 0; i < probe_xs.size(); ++i) {
        if (wv[i] <= 1e-7 * peak_w) {
          if (++run >= 3) {
            domain = probe_xs[i];
            break;
          }
        } else {
          run = 0;
        }
      }
    }
    sup_domain = domain;
    int run = 0;
    for (std::size_t i = 0; i < probe_xs.size(); ++i) {
      if (sv[i] <= 1e-9 * peak_s) {
        if (++run >= 3) {
          sup_domain = probe_xs[i];
          break;
        }
      } else {
        run = 0;
      }
    }
    sup_domain = std::min(sup_domain, domain);
  }

  GridOptions xg = opt.grid;
  xg.max_freq = std::max(src.lambda_sup * 1.05, 0.25);
  GridOptions xg_fine = xg;
  xg_fine.gl_order = xg.gl_order * 3 / 2;
  xg_fine.jacobi_order = xg.jacobi_order * 3 / 2;
  const WeightedGrid gxc = WeightedGrid::build(k, domain, xg);
  const WeightedGrid gxf = WeightedGrid::build(k, domain, xg_fine);

  GridOptions lg_coarse = opt.grid;
  lg_coarse.max_freq = std::max(domain, 1.0);
  GridOptions lg_fine = lg_coarse;
  lg_fine.gl_order = lg_coarse.gl_order * 3 / 2;
  lg_fine.jacobi_order = lg_coarse.jacobi_order * 3 / 2;

  PowerNormGrids g{PowerEvaluator(resample_source(src, lg_coarse), opt.kernel_tol),
                   PowerEvaluator(resample_source(src, lg_fine), opt.kernel_tol),
                   {}, {}, {}, {}, {}, domain, sup_domain};
  for (const auto& nd : gxc.positive_nodes()) {
    g.xs_coarse.push_back(nd.x);
    g.w_coarse.push_back(nd.w_abs);
  }
  for (const auto& nd : gxf.positive_nodes()) {
    g.xs_fine.push_back(nd.x);
    g.w_fine.push_back(nd.w_abs);
  }
  const int nsup = 6144;
  for (int i = 0; i <= nsup; ++i) g.xs_sup.push_back(sup_domain * i / nsup);
  return g;
}

PowerValues compute_power_values(const PowerNormGrids& grids,
                                 const std::vector<int>& ns) {
  PowerValues v;
  v.ns = ns;
  v.coarse = grids.coarse.values(grids.xs_coarse, ns);
  v.fine = grids.fine.values(grids.xs_fine, ns);
  v.sup = grids.fine.values(grids.xs_sup, ns);
  return v;
}

std::vector<PowerNorm> power_norms(const PowerNormGrids& grids,
                                   const PowerValues& vals, double p) {
  const std::vector<int>& ns = vals.ns;
  std::vector<PowerNorm> out(ns.size());
  if (std::isinf(p)) {
    // sup over the dense grid, refined by a parabolic fit through the peak;
    // the coarse/fine proxy is the even-index subsample
    for (std::size_t a = 0; a < ns.size(); ++a) {
      const auto sup_of = [&](const std::vector<cplx>& v) {
        double best = 0.0;
        std::size_t bi = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
          if (std::abs(v[i]) > best) {
            best = std::abs(v[i]);
            bi = i;
          }
        // parabolic peak refinement through the neighbors
        if (bi > 0 && bi + 1 < v.size()) {
          const double fm = std::abs(v[bi - 1]), f0 = best, fp = std::abs(v[bi + 1]);
          const double den = fm - 2.0 * f0 + fp;
          if (den < 0.0) {
            const double t = 0.5 * (fm - fp) / den;
            best = f0 - 0.25 * (fm - fp) * t;
          }
        }
        return best;
      };
      std::vector<cplx> half;
      for (std::size_t i = 0; i < vals.sup[a].size(); i += 2)
        half.push_back(vals.sup[a][i]);
      const double vf = sup_of(vals.sup[a]);
      const double vc = sup_of(half);
      out[a] = {vf, std::abs(vf - vc) / std::max(vf, 1e-300)};
    }
    return out;
  }

  for (std::size_t a = 0; a < ns.size(); ++a) {
    double sc = 0.0, sf = 0.0;
    for (std::size_t i = 0; i < grids.xs_coarse.size(); ++i)
      sc += grids.w_coarse[i] * std::pow(std::abs(vals.coarse[a][i]), p);
    for (std::size_t i = 0; i < grids.xs_fine.size(); ++i)
      sf += grids.w_fine[i] * std::pow(std::abs(vals.fine[a][i]), p);
    const double nc = std::pow(2.0 * sc, 1.0 / p);
    const double nf = std::pow(2.0 * sf, 1.0 / p);
    out[a] = {nf, std::abs(nf - nc) / std::max(nf, 1e-300)};
  }
  return out;
}

std::vector<PowerNorm> power_norms(const PowerNormGrids& grids,
                                   const std::vector<int>& ns, double p) {
  return power_norms(grids, compute_power_values(grids, ns), p);
}

double spectral_power_norm(const Multiplicity& k, const BandLimited& bl, int n,
                           double p, const TransformOptions& opt) {
  (void)k;
  const SpectralSource src = make_source(bl);
  const PowerNormGrids grids = make_power_norm_grids(src, std::max(n, 1), opt);
  return power_norms(grids, {n}, p)[0].value;
}

}  // namespace dunkl
