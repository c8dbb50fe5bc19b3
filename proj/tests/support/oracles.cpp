#include "oracles.hpp"

#include <cmath>
#include <numbers>

#include "dunkl/quadrature.hpp"

namespace oracles {

namespace {
constexpr cplx kI{0.0, 1.0};
}

cplx fourier(const std::function<cplx(double)>& f, double lambda, double L) {
  // composite Gauss-Legendre, panel width tied to the oscillation
  const double w = std::min(0.5, 20.0 / std::max(std::abs(lambda), 1.0));
  const int order = 32;
  const auto& rule = dunkl::gauss_legendre(order);
  cplx acc = 0.0;
  double a = -L;
  while (a < L - 1e-14) {
    const double b = std::min(a + w, L);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < order; ++i) {
      const double x = mid + half * rule.nodes[i];
      acc += half * rule.weights[i] * f(x) * std::exp(-kI * lambda * x);
    }
    a = b;
  }
  return acc / std::sqrt(2.0 * std::numbers::pi);
}

std::vector<cplx> fourier(const std::function<cplx(double)>& f,
                          const std::vector<double>& lambdas, double L) {
  // shared panel nodes across the whole grid: f is sampled once per node
  double lmax = 1.0;
  for (double l : lambdas) lmax = std::max(lmax, std::abs(l));
  const double w = std::min(0.5, 20.0 / lmax);
  const int order = 32;
  const auto& rule = dunkl::gauss_legendre(order);
  std::vector<double> xs;
  std::vector<cplx> wf;
  double a = -L;
  while (a < L - 1e-14) {
    const double b = std::min(a + w, L);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < order; ++i) {
      const double x = mid + half * rule.nodes[i];
      xs.push_back(x);
      wf.push_back(half * rule.weights[i] * f(x));
    }
    a = b;
  }
  std::vector<cplx> out(lambdas.size());
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      acc += wf[i] * std::exp(-kI * lambdas[j] * xs[i]);
    out[j] = acc / std::sqrt(2.0 * std::numbers::pi);
  }
  return out;
}

double l2_norm(const std::function<cplx(double)>& f, double L) {
  // narrow panels: proxy inputs carry polynomial content whose local
  // frequency grows toward the interval ends
  const int order = 48;
  const auto& rule = dunkl::gauss_legendre(order);
  double acc = 0.0;
  double a = -L;
  while (a < L - 1e-14) {
    const double b = std::min(a + 0.25, L);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < order; ++i)
      acc += half * rule.weights[i] * std::norm(f(mid + half * rule.nodes[i]));
    a = b;
  }
  return std::sqrt(acc);
}

double half_multiplicity_even_series(double u) {
  double sum = 1.0, term = 1.0;
  for (int m = 1; m < 60; ++m) {
    term *= -(0.25 * u * u) / (static_cast<double>(m) * m);
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return sum;
}

cplx moment_integral_reference(const std::function<cplx(double)>& g, int m, double x) {
  // panel-halving trapezoid until two refinements agree
  const auto integrand = [&](double t) { return std::pow(t, m) * g(t * x); };
  int n = 64;
  cplx prev = 0.0;
  for (int round = 0; round < 14; ++round, n *= 2) {
    cplx acc = 0.5 * (integrand(-1.0) + integrand(1.0));
    for (int i = 1; i < n; ++i) acc += integrand(-1.0 + 2.0 * i / n);
    acc *= 2.0 / n;
    if (round > 2 && std::abs(acc - prev) < 1e-11 * (1.0 + std::abs(acc))) return acc;
    prev = acc;
  }
  return prev;
}

}  // namespace oracles
