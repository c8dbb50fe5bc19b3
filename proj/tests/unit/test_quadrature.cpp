#include <doctest.h>

#include <cmath>

#include "dunkl/gammafn.hpp"
#include "dunkl/quadrature.hpp"

using namespace dunkl;

TEST_CASE("gauss-legendre integrates its exactness class") {
  for (int n : {4, 16, 32, 48}) {
    const auto& r = gauss_legendre(n);
    for (int m = 0; m < 2 * n; m += 2) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], m);
      CHECK(std::abs(s - 2.0 / (m + 1)) < 2e-14 * (m + 1));
    }
  }
}

TEST_CASE("gauss-jacobi01 moments") {
  for (double alpha : {0.0, 1.0, 2.6, 5.2}) {
    for (int n : {6, 24, 48}) {
      const auto r = gauss_jacobi01(n, alpha);
      for (int m = 0; m < 2 * n; ++m) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], m);
        CHECK(std::abs(s * (m + alpha + 1) - 1.0) < 5e-13);
      }
    }
  }
}

TEST_CASE("weighted grid reproduces the weight integrals") {
  // int_{-1}^1 |x|^{2k} dx = 2/(2k+1)
  for (double kr : {0.0, 0.5, 1.3, 2.7}) {
    const WeightedGrid g = WeightedGrid::build(Multiplicity(kr), 1.0, {});
    const double v = g.integrate_abs([](double) { return 1.0; });
    CHECK(std::abs(v - 2.0 / (2.0 * kr + 1.0)) < 1e-13);
  }
}

TEST_CASE("gaussian weight integral matches the gamma closed form") {
  // int e^{-x^2/2} |x|^{2k} dx = 2^{k + 1/2} Gamma(k + 1/2), also complex k
  for (auto kv : {cplx(0.0, 0.0), cplx(0.5, 0.0), cplx(1.0, 0.0), cplx(1.0, 0.7),
                  cplx(2.2, -1.1)}) {
    const Multiplicity k(kv.real(), kv.imag());
    CheckedQuadrature q(k, 10.5, {}, 1e-12, 2);
    const cplx v = q.integrate([](double x) { return cplx(std::exp(-0.5 * x * x)); });
    const cplx closed =
        std::exp((k.value() + 0.5) * std::log(2.0)) * gamma_fn(k.value() + 0.5);
    CHECK(std::abs(v - closed) < 1e-10 * std::abs(closed));
  }
}

TEST_CASE("checked quadrature flags an unresolvable integrand") {
  // oscillation far beyond what the declared panels resolve
  GridOptions opt;
  opt.max_freq = 0.0;  // lie about the frequency on purpose
  CheckedQuadrature q(Multiplicity(0.0), 1.0, opt, 1e-12, 0);
  CHECK_THROWS_AS(
      (void)q.integrate([](double x) { return cplx(std::cos(4000.0 * x)); }),
      AccuracyError);
}
