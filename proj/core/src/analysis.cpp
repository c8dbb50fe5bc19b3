#include "dunkl/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace dunkl {

namespace {
constexpr cplx kI{0.0, 1.0};
}

BangSequence bang_sequence(const Multiplicity& k, const SpectralSource& src,
                           double p, int n_max, BangMethod method,
                           const BangOptions& opt) {
  if (n_max < 1) throw std::invalid_argument("bang_sequence: n_max must be >= 1");
  BangSequence seq;
  seq.k = k;
  seq.p = p;
  seq.R_true = src.R_true;
  seq.source_tag = src.tag;

  std::vector<int> ns(n_max);
  for (int n = 1; n <= n_max; ++n) ns[n - 1] = n;

  if (method == BangMethod::spectral) {
    const BangWorkspace ws = make_bang_workspace(src, n_max, opt);
    return bang_from_workspace(k, src, ws, p);
  }

  // direct route: iterate the operator on a proxy fit
  seq.method = "direct";
  if (n_max > opt.direct_cap)
    throw std::invalid_argument("bang_sequence: direct route capped at small n");
  double L = opt.direct_halfwidth;
  if (L <= 0.0) L = opt.window;  // a norm-window override drives both routes
  if (L <= 0.0) {
    L = src.compact_spectrum ? std::clamp(10.0 / src.R_true, 6.0, 20.0) : 12.0;
  }
  seq.norm_domain = L;
  const ChebPoly f0 = ChebPoly::fit(src.f_eval, L, opt.direct_degree);
  FuncRep g = f0;
  for (int n = 1; n <= n_max; ++n) {
    try {
      g = dunkl_apply(k, g);
      if (auto* poly = std::get_if<ChebPoly>(&g)) {
        ChebPoly t = poly->trimmed(1e-14);
        if (t.trim_loss() > 1e-6)
          throw InstabilityError("bang direct: trim budget exceeded", t.trim_loss(), n);
        g = std::move(t);
      }
    } catch (const InstabilityError& e) {
      seq.note = std::string("instability at n = ") + std::to_string(n) + ": " +
                 e.what();
      break;
    }
    const double v = lp_norm(k, g, p, true, opt.transform);
    seq.entries.push_back({n, v, v > 0.0 ? std::pow(v, 1.0 / n) : 0.0, 0.0});
  }
  return seq;
}

BangWorkspace make_bang_workspace(const SpectralSource& src, int n_max,
                                  const BangOptions& opt) {
  BangWorkspace ws{make_power_norm_grids(src, n_max, opt.transform, opt.window), {}};
  std::vector<int> ns(n_max);
  for (int n = 1; n <= n_max; ++n) ns[n - 1] = n;
  ws.values = compute_power_values(ws.grids, ns);
  return ws;
}

BangSequence bang_from_workspace(const Multiplicity& k, const SpectralSource& src,
                                 const BangWorkspace& ws, double p) {
  BangSequence seq;
  seq.k = k;
  seq.p = p;
  seq.R_true = src.R_true;
  seq.source_tag = src.tag;
  seq.method = "spectral";
  seq.norm_domain = ws.grids.domain;
  const auto norms = power_norms(ws.grids, ws.values, p);
  for (std::size_t a = 0; a < ws.values.ns.size(); ++a) {
    const int n = ws.values.ns[a];
    const double v = norms[a].value;
    seq.entries.push_back({n, v, v > 0.0 ? std::pow(v, 1.0 / n) : 0.0, norms[a].defect});
  }
  return seq;
}

namespace {

// scan + bracket refinement shared by the support estimators
struct ScanHit {
  double radius = 0.0;
  bool at_boundary = false;
  bool empty = true;
  double bracket_hi = 0.0;
  double side = 1.0;  // sign of lambda where the outermost exceedance sits
};

ScanHit scan_profile(const std::vector<double>& grid, const std::vector<cplx>& vals,
                     double eps) {
  double peak = 0.0;
  for (const auto& v : vals) peak = std::max(peak, std::abs(v));
  ScanHit hit;
  if (peak <= 0.0) return hit;
  hit.empty = false;
  const double thr = eps * peak;
  double best = -1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (std::abs(vals[i]) > thr && std::abs(grid[i]) > best) {
      best = std::abs(grid[i]);
      hit.side = grid[i] >= 0.0 ? 1.0 : -1.0;
    }
  }
  if (best < 0.0) {
    hit.radius = 0.0;
    return hit;
  }
  hit.radius = best;
  // smallest grid radius beyond the hit
  double next = -1.0;
  for (double l : grid) {
    const double a = std::abs(l);
    if (a > best * (1.0 + 1e-12) && (next < 0.0 || a < next)) next = a;
  }
  if (next < 0.0) {
    hit.at_boundary = true;
    hit.bracket_hi = best;
  } else {
    hit.bracket_hi = next;
  }
  return hit;
}

}  // namespace

SupportEstimate support_radius(const Multiplicity& k, const FuncRep& f, double eps,
                               double lambda_max, const SupportOptions& opt,
                               SpectralProfile* scan_out) {
  if (!(eps > 0.0)) throw std::invalid_argument("support_radius: eps must be > 0");
  SupportEstimate est;
  est.epsilon = eps;
  est.lambda_max = lambda_max;

  const int n = opt.scan_points;
  std::vector<double> grid;
  grid.reserve(2 * n + 1);
  for (int i = -n; i <= n; ++i) grid.push_back(lambda_max * i / n);
  const SpectralProfile prof = dunkl_transform(k, f, grid, opt.transform);
  if (scan_out) *scan_out = prof;

  double peak = 0.0;
  for (const auto& v : prof.values) peak = std::max(peak, std::abs(v));
  ScanHit hit = scan_profile(prof.grid, prof.values, eps);
  if (hit.empty) {
    est.radius = 0.0;  // sup over the empty set: reported as zero
    return est;
  }
  if (hit.at_boundary) {
    est.infinite = true;
    est.radius = lambda_max;
    return est;
  }
  if (hit.radius == 0.0) {
    est.radius = 0.0;
    return est;
  }

  // shrink the bracket with fresh evaluations (one fine subdivision locates
  // the crossing far below the acceptance windows); the scan peak anchors
  // the quadrature convergence scale out in the tail
  const double thr = eps * peak;
  double lo = hit.radius, hi = hit.bracket_hi;
  TransformOptions topt = opt.transform;
  topt.scale_floor = peak;
  {
    const int m = 48;
    std::vector<double> sub;
    for (int i = 0; i <= m; ++i) sub.push_back(hit.side * (lo + (hi - lo) * i / m));
    const SpectralProfile sp = dunkl_transform(k, f, sub, topt);
    double new_lo = lo, new_hi = hi;
    for (int i = m; i >= 0; --i)
      if (std::abs(sp.values[i]) > thr) {
        new_lo = std::abs(sub[i]);
        new_hi = (i == m) ? hi : std::abs(sub[i + 1]);
        break;
      }
    lo = new_lo;
    hi = new_hi;
  }
  est.radius = 0.5 * (lo + hi);
  return est;
}

SupportEstimate support_radius(const SpectralProfile& profile, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("support_radius: eps must be > 0");
  if (profile.values.empty())
    throw std::invalid_argument("support_radius: empty profile");
  SupportEstimate est;
  est.epsilon = eps;
  est.lambda_max = 0.0;
  for (double l : profile.grid) est.lambda_max = std::max(est.lambda_max, std::abs(l));

  const ScanHit hit = scan_profile(profile.grid, profile.values, eps);
  if (hit.empty) {
    est.radius = 0.0;
    return est;
  }
  if (hit.at_boundary) {
    est.infinite = true;
    est.radius = est.lambda_max;
    return est;
  }
  est.radius = 0.5 * (hit.radius + hit.bracket_hi);
  return est;
}

GrowthCertificate growth_certify(const Multiplicity& k, const ChebPoly& f, int n,
                                 double tau_max, GridSpec grid,
                                 const TransformOptions& opt) {
  if (n < 0) throw std::invalid_argument("growth_certify: n must be >= 0");
  const double R = f.halfwidth();

  const auto sup_on = [&](int n_sigma, int n_tau) {
    std::vector<cplx> zs;
    const int nt = (tau_max > 0.0) ? n_tau : 1;
    zs.reserve(static_cast<std::size_t>(n_sigma) * nt);
    for (int a = 0; a < n_sigma; ++a) {
      const double sigma =
          (n_sigma == 1) ? 0.0 : -grid.sigma_max + 2.0 * grid.sigma_max * a / (n_sigma - 1);
      for (int b = 0; b < nt; ++b) {
        const double tau = (nt == 1) ? 0.0 : -tau_max + 2.0 * tau_max * b / (nt - 1);
        zs.emplace_back(sigma, tau);
      }
    }
    TransformOptions o = opt;
    const auto vals = dunkl_transform_complex(k, f, zs, o);
    double best = 0.0;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      const double az = std::abs(zs[i]);
      const double w = std::pow(1.0 + az, n) * std::exp(-R * std::abs(zs[i].imag()));
      best = std::max(best, std::abs(vals[i]) * w);
    }
    return best;
  };

  GrowthCertificate cert;
  cert.R = R;
  cert.n = n;
  cert.tau_max = tau_max;
  cert.grid = grid;
  const double base = sup_on(grid.n_sigma, grid.n_tau);
  const double dbl = sup_on(2 * grid.n_sigma - 1, 2 * grid.n_tau - 1);
  cert.C_n = dbl;
  cert.stability = std::abs(dbl - base) / std::max(dbl, 1e-300);
  return cert;
}

std::vector<double> axis_growth_ratios(const Multiplicity& k, const ChebPoly& f,
                                       double R_claim, const std::vector<double>& taus,
                                       const TransformOptions& opt) {
  std::vector<cplx> zs;
  for (double t : taus) zs.emplace_back(0.0, t);
  const auto vals = dunkl_transform_complex(k, f, zs, opt);
  std::vector<double> out(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i)
    out[i] = std::abs(vals[i]) * std::exp(-R_claim * taus[i]);
  return out;
}

double upper_bound_curve(double C, double R, const Multiplicity& k, int n) {
  if (n < 1 || !(C > 0.0) || !(R > 0.0))
    throw std::invalid_argument("upper_bound_curve: need n >= 1, C > 0, R > 0");
  const double two_abs_k = 2.0 * k.abs();
  const double ln = std::log(C) + n + std::lgamma(n + 1.0 + two_abs_k) -
                    n * std::log(static_cast<double>(n)) -
                    std::lgamma(1.0 + two_abs_k) + n * std::log(R);
  return std::exp(ln);
}

double gamma_ratio_factor(const Multiplicity& k, int n) {
  if (n < 0) throw std::invalid_argument("gamma_ratio_factor: n must be >= 0");
  const double two_abs_k = 2.0 * k.abs();
  return std::exp(std::lgamma(n + 1.0 + two_abs_k) - std::lgamma(n + 1.0) -
                  std::lgamma(1.0 + two_abs_k));
}

IdentityFamily IdentityFamily::standard(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  const auto random_compact = [&](double R, double rho, int deg) {
    std::vector<double> c(deg + 1);
    for (auto& v : c) v = U(rng);
    const ClosedForm b = ClosedForm::bump(R, rho);
    return ChebPoly::fit(
        [c, b](double x) {
          double p = 0.0;
          for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * x + *it;
          return cplx(p, 0.0) * b.eval(x);
        },
        R, 140);
  };

  IdentityFamily fam;
  fam.compact.push_back(ChebPoly::fit(
      [](double x) { return ClosedForm::bump(2.0, 0.5).eval(x); }, 2.0, 140));
  fam.compact.push_back(random_compact(2.0, 0.6, 5));
  fam.compact.push_back(random_compact(2.0, 0.55, 4));
  fam.pairs.emplace_back(fam.compact[0], fam.compact[1]);
  fam.pairs.emplace_back(fam.compact[1], fam.compact[2]);
  return fam;
}

namespace {

// <D_k f, g>_k with g compactly supported: D_k f is sampled at the
// lambda-quadrature nodes of supp g, checked on the lambda side by the
// coarse/fine pair (the x side is checked inside dunkl_transform).
cplx inner_with_transform(const Multiplicity& k, const ChebPoly& f, const ChebPoly& g,
                          const TransformOptions& opt) {
  const double Lg = g.halfwidth();
  GridOptions go = opt.grid;
  go.max_freq = std::max(max_frequency(FuncRep(g)), decay_radius(FuncRep(f), 1e-14));
  GridOptions gf = go;
  gf.gl_order = go.gl_order * 3 / 2;
  gf.jacobi_order = go.jacobi_order * 3 / 2;

  const auto eval_on = [&](const GridOptions& o) {
    const WeightedGrid grid = WeightedGrid::build(k, Lg, o);
    std::vector<double> ls;
    for (const auto& nd : grid.nodes()) ls.push_back(nd.x);
    const SpectralProfile p = dunkl_transform(k, FuncRep(f), ls, opt);
    cplx acc = 0.0;
    const auto& nodes = grid.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i)
      acc += nodes[i].w_k * p.values[i] * g.eval(nodes[i].x);
    return acc;
  };
  const cplx vc = eval_on(go);
  const cplx vf = eval_on(gf);
  if (std::abs(vc - vf) > std::max(opt.quad_tol, 1e-9) *
                              std::max({std::abs(vf), 1.0e-6}))
    throw AccuracyError("inner_with_transform: lambda quadrature drift",
                        std::abs(vc - vf));
  return vf;
}

// Quadrature-node transform profile over [-lambda, lambda], extended
// geometrically until the tail of the inverse integrand |D_k f| |w_k| at the
// outer nodes drops below `target` relative to its peak. Keeps the
// lambda-domain honest without a separate far-field probe.
QuadProfile adaptive_quad_profile(const Multiplicity& k, const FuncRep& f,
                                  double lambda_start, double target,
                                  double inverse_domain,
                                  const TransformOptions& opt) {
  const double alpha = 2.0 * k.re();
  double lam = lambda_start;
  for (int round = 0;; ++round) {
    QuadProfile qp = dunkl_transform_quad(k, f, lam, inverse_domain, opt);
    const auto& nodes = qp.grid->nodes();
    double peak = 0.0, outer = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double w = std::abs(qp.values[i]) * std::pow(std::abs(nodes[i].x), alpha);
      peak = std::max(peak, w);
      if (std::abs(nodes[i].x) > 0.92 * lam) outer = std::max(outer, w);
    }
    if (outer <= target * peak || round >= 2) return qp;
    lam *= 2.0;
  }
}

}  // namespace

IdentityReport identity_suite(const Multiplicity& k, const IdentityFamily& family,
                              const TransformOptions& opt) {
  IdentityReport rep;
  const auto rel = [](double num, double scale) {
    return num / std::max(scale, 1e-30);
  };

  // anti-symmetry: <T_k f, g>_k = -<f, T_k g>_k
  {
    double worst = 0.0;
    for (const auto& [f, g] : family.pairs) {
      const FuncRep tf = dunkl_apply(k, FuncRep(f));
      const FuncRep tg = dunkl_apply(k, FuncRep(g));
      const cplx a = weighted_inner(k, tf, FuncRep(g), opt);
      const cplx b = weighted_inner(k, FuncRep(f), tg, opt);
      worst = std::max(worst, rel(std::abs(a + b), std::max(std::abs(a), std::abs(b))));
    }
    rep.defects["antisymmetry"] = worst;
  }

  // adjoint: <D_k f, g>_k = <f, D_k g>_k
  {
    double worst = 0.0;
    for (const auto& [f, g] : family.pairs) {
      const cplx a = inner_with_transform(k, f, g, opt);
      const cplx b = inner_with_transform(k, g, f, opt);
      worst = std::max(worst, rel(std::abs(a - b), std::max(std::abs(a), std::abs(b))));
    }
    rep.defects["adjoint"] = worst;
  }

  // intertwining: D_k(T_k f)(lambda) = i lambda D_k f(lambda)
  {
    double worst = 0.0;
    std::vector<double> ls;
    for (int i = 0; i <= 80; ++i) ls.push_back(-4.0 + 8.0 * i / 80);
    for (const auto& f : family.compact) {
      const FuncRep tf = dunkl_apply(k, FuncRep(f));
      const SpectralProfile a = dunkl_transform(k, tf, ls, opt);
      const SpectralProfile b = dunkl_transform(k, FuncRep(f), ls, opt);
      double num = 0.0, den = 0.0;
      for (std::size_t i = 0; i < ls.size(); ++i) {
        num = std::max(num, std::abs(a.values[i] - kI * ls[i] * b.values[i]));
        den = std::max(den, std::abs(ls[i] * b.values[i]));
      }
      worst = std::max(worst, rel(num, den));
    }
    rep.defects["intertwining"] = worst;
  }

  // Inversion round trip over the Schwartz members: their transforms decay
  // like Gaussians, so the full |lambda|^{2 Re k}-weighted inverse integral
  // converges on a short lambda-domain. (Compactly supported members have
  // transforms decaying only like e^{-c sqrt(lambda)}; their round trip is
  // exercised in the spectral-support experiments.)
  {
    double worst_inv = 0.0;
    const std::vector<FuncRep> roundtrip = {
        FuncRep(ClosedForm::gaussian(1.0)),
        FuncRep(ClosedForm::poly_gaussian({0.4, 0.8, -0.25}, 1.0)),
        FuncRep(ClosedForm::poly_gaussian({0.0, 1.0, 0.3}, 1.0))};
    for (const auto& f : roundtrip) {
      const QuadProfile qp = adaptive_quad_profile(
          k, f, 12.0, 1e-9, decay_radius(f, opt.envelope_cutoff), opt);
      const double r = decay_radius(f, 1e-10);
      std::vector<double> xs;
      for (int i = 0; i <= 100; ++i) xs.push_back(-r + 2.0 * r * i / 100);
      const auto back = inverse_transform(k, qp, xs);
      double num = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i)
        num = std::max(num, std::abs(back[i] - eval(f, xs[i])));
      worst_inv = std::max(worst_inv, rel(num, sup_norm(f)));
    }
    rep.defects["inversion"] = worst_inv;
  }

  // Plancherel (real multiplicities): the integrand is |D_k f|^2 w_k, so a
  // compact member stays affordable on a fixed lambda-domain
  if (k.is_real()) {
    double worst_pl = 0.0;
    std::vector<FuncRep> members = {FuncRep(ClosedForm::gaussian(1.0)),
                                    FuncRep(ClosedForm::poly_gaussian(
                                        {0.4, 0.8, -0.25}, 1.0))};
    if (!family.compact.empty()) members.emplace_back(family.compact.front());
    for (const auto& f : members) {
      const double lam = compactly_supported(f) ? 260.0 : 14.0;
      const QuadProfile qp = dunkl_transform_quad(
          k, f, lam, decay_radius(f, opt.envelope_cutoff), opt);
      double s = 0.0;
      const auto& nodes = qp.grid->nodes();
      for (std::size_t i = 0; i < nodes.size(); ++i)
        s += nodes[i].w_abs * std::norm(qp.values[i]);
      const double lhs = std::sqrt(s);
      const double rhs = lp_norm(k, f, 2.0, true, opt);
      worst_pl = std::max(worst_pl, rel(std::abs(lhs - rhs), rhs));
    }
    rep.defects["plancherel"] = worst_pl;
  } else {
    rep.skipped.insert("plancherel");
  }

  // Gaussian fixed point: D_k e^{-x^2/2} = e^{-lambda^2/2}
  {
    std::vector<double> ls;
    for (int i = 0; i <= 40; ++i) ls.push_back(-5.0 + 10.0 * i / 40);
    const SpectralProfile p =
        dunkl_transform(k, FuncRep(ClosedForm::gaussian(1.0)), ls, opt);
    double num = 0.0;
    for (std::size_t i = 0; i < ls.size(); ++i)
      num = std::max(num, std::abs(p.values[i] - std::exp(-0.5 * ls[i] * ls[i])));
    rep.defects["gaussian_fixed_point"] = num;
  }

  return rep;
}

}  // namespace dunkl
