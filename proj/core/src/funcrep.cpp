#include "dunkl/funcrep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dunkl/quadrature.hpp"

namespace dunkl {

cplx eval(const FuncRep& f, double x) {
  return std::visit([&](const auto& r) { return r.eval(x); }, f);
}

double decay_radius(const FuncRep& f, double rel_tol) {
  if (const auto* p = std::get_if<ChebPoly>(&f)) return p->halfwidth();
  if (const auto* c = std::get_if<ClosedForm>(&f)) return c->decay_radius(rel_tol);
  return std::get<BandLimited>(f).eval_radius();
}

bool compactly_supported(const FuncRep& f) {
  if (std::holds_alternative<ChebPoly>(f)) return true;
  if (const auto* c = std::get_if<ClosedForm>(&f)) return c->compact();
  return false;
}

double max_frequency(const FuncRep& f) {
  // proxies: the Chebyshev degree bounds the content frequency with a lot of
  // slack; quadrature convergence checks catch the rare underestimate
  if (const auto* p = std::get_if<ChebPoly>(&f))
    return 0.35 * p->degree() / std::max(p->halfwidth(), 1e-12);
  if (const auto* c = std::get_if<ClosedForm>(&f)) {
    switch (c->kind()) {
      case ClosedForm::Kind::Gaussian:
      case ClosedForm::Kind::PolyGaussian:
        return 2.0 / c->sigma();
      case ClosedForm::Kind::Bump:
        return 4.0 / (c->R() * (1.0 - c->rho()));
      case ClosedForm::Kind::Indicator:
        return 8.0 / c->R();
    }
  }
  return std::get<BandLimited>(f).R();
}

ChebPoly cheb_fit(const std::function<cplx(double)>& f, double L, int N,
                  double trim_tol) {
  return ChebPoly::fit(f, L, N, trim_tol);
}

ChebPoly differentiate(const ChebPoly& f) { return f.derivative(); }

ChebPoly reflect(const ChebPoly& f) { return f.reflected(); }

ChebPoly odd_div_x(const ChebPoly& f) { return f.odd_divided_by_x(); }

namespace {

ChebPoly apply_to_poly(const Multiplicity& k, const ChebPoly& f) {
  return f.derivative().plus(f.odd_divided_by_x().scaled(2.0 * k.value()));
}

}  // namespace

FuncRep dunkl_apply(const Multiplicity& k, const FuncRep& f, const PowerOptions& opt) {
  if (const auto* p = std::get_if<ChebPoly>(&f)) return apply_to_poly(k, *p);
  if (const auto* c = std::get_if<ClosedForm>(&f)) {
    switch (c->kind()) {
      case ClosedForm::Kind::Gaussian:
      case ClosedForm::Kind::PolyGaussian:
        return c->dunkl_applied(k);
      case ClosedForm::Kind::Bump: {
        const ChebPoly proxy = ChebPoly::fit(
            [c](double x) { return c->eval(x); }, c->R(), opt.bump_fit_degree);
        return apply_to_poly(k, proxy);
      }
      case ClosedForm::Kind::Indicator:
        throw std::invalid_argument("dunkl_apply: indicator input is not C^1");
    }
  }
  throw std::invalid_argument(
      "dunkl_apply: band-limited input; use the spectral route");
}

FuncRep dunkl_power(const Multiplicity& k, const FuncRep& f, int n,
                    const PowerOptions& opt) {
  if (n < 0) throw std::invalid_argument("dunkl_power: n must be >= 0");
  FuncRep g = f;
  for (int i = 0; i < n; ++i) {
    g = dunkl_apply(k, g, opt);
    if (auto* p = std::get_if<ChebPoly>(&g)) {
      ChebPoly t = p->trimmed(opt.trim_tol);
      if (t.trim_loss() > opt.trim_budget)
        throw InstabilityError("dunkl_power: trim loss beyond budget",
                               t.trim_loss(), i + 1);
      g = std::move(t);
    }
  }
  return g;
}

ChebPoly moment_average(const FuncRep& g, int m) {
  if (m < 0) throw std::invalid_argument("moment_average: m must be >= 0");
  double L;
  int N;
  if (const auto* p = std::get_if<ChebPoly>(&g)) {
    L = p->halfwidth();
    N = std::max(8, p->degree() + 2);
  } else {
    L = decay_radius(g, 1e-16);
    N = 160;
  }
  const int q = std::max(24, (N + m) / 2 + 4);
  const auto& rule = gauss_legendre(q);
  const auto avg = [&](double x) {
    cplx acc = 0.0;
    for (int i = 0; i < q; ++i)
      acc += rule.weights[i] * std::pow(rule.nodes[i], m) * eval(g, rule.nodes[i] * x);
    return acc;
  };
  return ChebPoly::fit(avg, L, N);
}

double sup_norm(const FuncRep& f, double radius) {
  double r = std::isfinite(radius) ? radius : decay_radius(f, 1e-16);
  r = std::min(r, decay_radius(f, 1e-16));
  if (!(r > 0.0)) r = 1.0;

  const int n = 4096;
  std::vector<double> mag(n + 1);
  double best = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = -r + 2.0 * r * i / n;
    mag[i] = std::abs(eval(f, x));
    best = std::max(best, mag[i]);
  }
  // local refinement around the top interior maxima
  std::vector<int> tops;
  for (int i = 1; i < n; ++i)
    if (mag[i] >= mag[i - 1] && mag[i] >= mag[i + 1]) tops.push_back(i);
  std::sort(tops.begin(), tops.end(), [&](int a, int b) { return mag[a] > mag[b]; });
  if (tops.size() > 8) tops.resize(8);
  const double gr = 0.6180339887498949;
  for (int i : tops) {
    double a = -r + 2.0 * r * (i - 1) / n;
    double b = -r + 2.0 * r * (i + 1) / n;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = std::abs(eval(f, x1)), f2 = std::abs(eval(f, x2));
    for (int it = 0; it < 60; ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b - a);
        f2 = std::abs(eval(f, x2));
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - gr * (b - a);
        f1 = std::abs(eval(f, x1));
      }
    }
    best = std::max({best, f1, f2});
  }
  return best;
}

}  // namespace dunkl
