#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/oracles.hpp"
#include "dunkl/kernel.hpp"

using namespace dunkl;

namespace {
constexpr cplx kI{0.0, 1.0};
}

TEST_CASE("gamma_seq") {
  CHECK(gamma_seq(Multiplicity(0.5), 1) == cplx(2.0, 0.0));
  CHECK(gamma_seq(Multiplicity(1.7, 0.3), 2) == cplx(2.0, 0.0));
  CHECK(gamma_seq(Multiplicity(1.0, 1.0), 3) == cplx(5.0, 2.0));
  CHECK_THROWS_AS((void)gamma_seq(Multiplicity(1.0), 0), std::invalid_argument);
}

TEST_CASE("multiplicity construction guards") {
  CHECK_THROWS_AS(Multiplicity(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(Multiplicity(std::nan("")), std::invalid_argument);
  CHECK_NOTHROW(Multiplicity(0.0, -3.0));
}

TEST_CASE("kernel series invariants") {
  const Multiplicity k(0.8, 0.4);
  const cplx lambda(1.3, -0.2);
  const KernelSeries s = KernelSeries::build(k, lambda, 2.0, 1e-12);
  const auto& c = s.coefficients();
  REQUIRE(c.size() >= 9);
  CHECK(c[0] == cplx(1.0, 0.0));
  for (long n = 1; n <= s.truncation_order(); ++n)
    CHECK(std::abs(gamma_seq(k, n) * c[n] - kI * lambda * c[n - 1]) <
          1e-15 * std::abs(c[n - 1]) + 1e-300);
  CHECK(s.tail_bound() <= 1e-12);

  // the tail bound really does dominate the truncation error on the disc
  const KernelSeries loose = KernelSeries::build(k, lambda, 2.0, 1e-4, 4096, 8);
  for (double z : {0.5, 1.0, 1.99}) {
    const auto fine = kernel_eval(k, lambda, z, 1e-13);
    CHECK(std::abs(loose.eval(z) - fine.value) <= loose.tail_bound() + 1e-12);
  }
}

TEST_CASE("kernel_eval trivial values") {
  CHECK(kernel_eval(Multiplicity(1.3), 2.0, 0.0).value == cplx(1.0, 0.0));
  CHECK(kernel_eval(Multiplicity(0.4, 1.1), 0.0, 5.0).value == cplx(1.0, 0.0));
  // k = 0 reduces to exp(i lambda z)
  const auto v = kernel_eval(Multiplicity(0.0), 1.0, M_PI);
  CHECK(std::abs(v.value - cplx(-1.0, 0.0)) < 1e-12);
}

TEST_CASE("k = 0 matches the exponential far beyond the naive series range") {
  const Multiplicity k0(0.0);
  const KernelEvaluator ev(k0);
  for (double u : {0.3, 7.7, 10.5, 25.0, 63.0, 120.0, -95.0}) {
    const auto p = ev.eval_u(cplx(u, 0.0));
    CHECK(std::abs(p.value() - std::exp(kI * u)) < 5e-12);
  }
  for (cplx u : {cplx(12.0, 3.0), cplx(-40.0, -6.0), cplx(2.0, 15.0)}) {
    const auto p = ev.eval_u(u);
    const cplx truth = std::exp(kI * u);
    CHECK(std::abs(p.value() - truth) < 5e-12 * std::exp(std::abs(u.imag())));
  }
}

TEST_CASE("half multiplicity collapses to the classical even series") {
  const Multiplicity kh(0.5);
  const KernelEvaluator ev(kh);
  for (double x : {-5.0, -1.0, 0.25, 1.0, 3.7, 5.0}) {
    const auto p = ev.eval_u(cplx(x, 0.0));
    CHECK(std::abs(p.value().real() - oracles::half_multiplicity_even_series(x)) <
          1e-11);
  }
}

TEST_CASE("series and marching agree across the handover") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int i = 0; i < 25; ++i) {
    const Multiplicity k(3.0 * U(rng), 2.0 * U(rng));
    KernelEvaluator wide(k);
    wide.series_cutoff = 40.0;  // force pure series
    KernelEvaluator narrow(k);
    narrow.series_cutoff = 4.0;  // force marching
    const double u = 5.0 + 8.0 * U(rng);
    const auto a = wide.eval_u(cplx(u, 0.0));
    const auto b = narrow.eval_u(cplx(u, 0.0));
    CHECK(std::abs(a.value() - b.value()) < 5e-11);
  }
}

TEST_CASE("derivative sums satisfy the defining system") {
  // dE = i O and dO = i E - 2k O/u, term-wise sums on both sides
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int i = 0; i < 30; ++i) {
    const Multiplicity k(1.5 + U(rng), 0.8 * U(rng));
    const cplx u(14.0 * U(rng), 2.0 * U(rng));
    const auto p = KernelEvaluator(k).eval_u(u);
    const double scale = std::exp(std::abs(u.imag())) + 1.0;
    CHECK(std::abs(p.deven - kI * p.odd) < 1e-10 * scale);
    CHECK(std::abs(p.dodd - (kI * p.even - 2.0 * k.value() * p.odd_over_u)) <
          1e-10 * scale);
  }
}

TEST_CASE("finite differences confirm the derivative") {
  const Multiplicity k(1.1, 0.5);
  const KernelEvaluator ev(k);
  for (double u : {0.7, 6.0, 18.0}) {
    const double h = 1e-6;
    const auto p = ev.eval_u(cplx(u, 0.0));
    const auto up = ev.eval_u(cplx(u + h, 0.0));
    const auto dn = ev.eval_u(cplx(u - h, 0.0));
    const cplx fd = (up.value() - dn.value()) / (2.0 * h);
    CHECK(std::abs(p.deriv_u() - fd) < 1e-8);
  }
}

TEST_CASE("normalization is exact") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> U(0.0, 3.0);
  for (int i = 0; i < 20; ++i) {
    const Multiplicity k(U(rng), U(rng));
    CHECK(kernel_eval(k, cplx(U(rng), U(rng)), 0.0).value == cplx(1.0, 0.0));
  }
}

TEST_CASE("real-argument bound for real multiplicities") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> Uk(0.0, 3.0), Ux(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const Multiplicity k(Uk(rng));
    const auto v = kernel_eval(k, Ux(rng), Ux(rng));
    CHECK(std::abs(v.value) <= 1.0 + 1e-11);
  }
}

TEST_CASE("complex multiplicities can exceed the real-multiplicity bound") {
  // |psi| <= 1 on real arguments is a real-k fact; at k = 1 + 0.7i the
  // first-order term already pushes |psi| above 1
  const auto v = kernel_eval(Multiplicity(1.0, 0.7), 1.0, 0.1);
  CHECK(std::abs(v.value) > 1.005);
}

TEST_CASE("strip bound for real multiplicities") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> Uk(0.0, 3.0), Ul(-4.0, 4.0);
  std::uniform_real_distribution<double> Us(-5.0, 5.0), Ut(-3.0, 3.0);
  for (int i = 0; i < 120; ++i) {
    const Multiplicity k(Uk(rng));
    const double lambda = Ul(rng);
    const cplx z(Us(rng), Ut(rng));
    const auto v = kernel_eval(k, lambda, z);
    CHECK(std::abs(v.value) <= std::exp(std::abs(lambda * z.imag())) * (1.0 + 1e-10));
  }
}

TEST_CASE("symmetry and scaling") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> U(-2.0, 2.0), Uk(0.0, 3.0);
  for (int i = 0; i < 60; ++i) {
    const Multiplicity k(Uk(rng), Uk(rng));
    const cplx lambda(U(rng), U(rng)), z(U(rng), U(rng)), s(U(rng), U(rng));
    const auto a = kernel_eval(k, lambda, z);
    const auto b = kernel_eval(k, z, lambda);
    CHECK(std::abs(a.value - b.value) <= 1e-11 * std::exp(std::abs((lambda * z).imag())));
    const auto c = kernel_eval(k, s * lambda, z);
    const auto d = kernel_eval(k, lambda, s * z);
    CHECK(std::abs(c.value - d.value) <=
          1e-10 * std::exp(std::abs((s * lambda * z).imag())));
  }
}

TEST_CASE("residual of the defining problem") {
  CHECK(kernel_residual(Multiplicity(0.7), 1.5, 0.3, 1e-12) <= 1e-10);
  CHECK(kernel_residual(Multiplicity(0.0), 3.0, 1.0) <= 1e-10);
  CHECK(kernel_residual(Multiplicity(2.0, 0.5), 1.0, -2.0) <= 1e-9);
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> Uk(0.0, 3.0), Ux(-8.0, 8.0);
  for (int i = 0; i < 50; ++i) {
    const Multiplicity k(Uk(rng), Uk(rng));
    CHECK(kernel_residual(k, Ux(rng), Ux(rng)) <= 1e-8);
  }
}

TEST_CASE("range guard and truncation failure") {
  CHECK_THROWS_AS((void)kernel_eval(Multiplicity(1.0), cplx(0.0, 800.0), 1.0),
                  RangeError);
  KernelEvaluator capped(Multiplicity(0.3), 1e-12);
  capped.series_cap = 16;
  capped.series_cutoff = 100.0;
  bool threw = false;
  try {
    (void)capped.eval_u(cplx(60.0, 0.0));
  } catch (const TruncationError& e) {
    threw = true;
    CHECK(e.achieved_bound() > 0.0);
    CHECK(e.terms() == 16);
  }
  CHECK(threw);
}

TEST_CASE("ray evaluation matches pointwise evaluation") {
  const Multiplicity k(1.9, 1.2);
  const KernelEvaluator ev(k);
  const cplx dir = std::polar(1.0, 0.7);
  const std::vector<double> radii = {0.0, 0.5, 3.0, 9.0, 9.5, 14.0, 30.0};
  const auto pts = ev.eval_ray(dir, radii);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const auto q = ev.eval_u(radii[i] * dir);
    const double scale = std::exp(std::abs((radii[i] * dir).imag())) + 1.0;
    CHECK(std::abs(pts[i].value() - q.value()) < 5e-11 * scale);
  }
}
