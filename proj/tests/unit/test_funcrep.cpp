#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/oracles.hpp"
#include "dunkl/analysis.hpp"
#include "dunkl/funcrep.hpp"

using namespace dunkl;

namespace {

ChebPoly fit_fn(const std::function<double(double)>& f, double L, int N) {
  return ChebPoly::fit([f](double x) { return cplx(f(x), 0.0); }, L, N);
}

ChebPoly random_smooth_compact(std::mt19937& rng, double R, int deg) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<double> c(deg + 1);
  for (auto& v : c) v = U(rng);
  const ClosedForm b = ClosedForm::bump(R, 0.6);
  return ChebPoly::fit(
      [c, b](double x) {
        double p = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * x + *it;
        return cplx(p, 0.0) * b.eval(x);
      },
      R, 140);
}

}  // namespace

TEST_CASE("dunkl_apply on monomials") {
  const ChebPoly lin = fit_fn([](double x) { return x; }, 2.0, 8);
  for (auto kv : {cplx(0.5, 0.0), cplx(1.3, 0.0), cplx(0.4, 1.2)}) {
    const Multiplicity k(kv.real(), kv.imag());
    const auto t = dunkl_apply(k, FuncRep(lin));
    const cplx expect = 1.0 + 2.0 * kv;
    for (double x : {-1.0, 0.3, 1.8})
      CHECK(std::abs(std::get<ChebPoly>(t).eval(x) - expect) < 1e-12);
  }
  // even input: the reflection term dies for every k
  const ChebPoly sq = fit_fn([](double x) { return x * x; }, 2.0, 8);
  for (double kr : {0.0, 0.9, 2.4}) {
    const auto t = dunkl_apply(Multiplicity(kr), FuncRep(sq));
    for (double x : {-1.2, 0.5})
      CHECK(std::abs(std::get<ChebPoly>(t).eval(x) - 2.0 * x) < 1e-12);
  }
  // k = 0 is the plain derivative
  const ChebPoly s = fit_fn([](double x) { return std::sin(x); }, 2.0, 48);
  const auto d = dunkl_apply(Multiplicity(0.0), FuncRep(s));
  for (double x : {-1.0, 0.0, 1.7})
    CHECK(std::abs(std::get<ChebPoly>(d).eval(x) - std::cos(x)) < 1e-11);
}

TEST_CASE("dunkl_apply guards") {
  CHECK_THROWS_AS(
      (void)dunkl_apply(Multiplicity(1.0), FuncRep(ClosedForm::indicator(1.0))),
      std::invalid_argument);
}

TEST_CASE("gaussian family is closed under the operator") {
  const Multiplicity k(1.3);
  FuncRep g = ClosedForm::gaussian(1.0);
  const auto t = dunkl_apply(k, g);
  const auto& pg = std::get<ClosedForm>(t);
  for (double x : {-2.0, 0.4, 1.1})
    CHECK(std::abs(pg.eval(x) - cplx(-x * std::exp(-0.5 * x * x))) < 1e-14);
}

TEST_CASE("dunkl_power") {
  const Multiplicity k1(1.0);
  const ChebPoly sq = fit_fn([](double x) { return x * x; }, 2.0, 8);
  CHECK(std::abs(std::get<ChebPoly>(dunkl_power(k1, FuncRep(sq), 0)).eval(0.7) -
                 0.49) < 1e-13);
  // T_1 x^2 = 2x, T_1 2x = 2(1 + 2k) = 6
  const auto t2 = dunkl_power(k1, FuncRep(sq), 2);
  for (double x : {-1.5, 0.0, 1.5})
    CHECK(std::abs(std::get<ChebPoly>(t2).eval(x) - 6.0) < 1e-12);

  // bump at k = 0: three powers equal three derivatives
  const ClosedForm b = ClosedForm::bump(1.0, 0.5);
  const ChebPoly f = ChebPoly::fit([&b](double x) { return b.eval(x); }, 1.0, 160);
  const auto p3 = dunkl_power(Multiplicity(0.0), FuncRep(f), 3);
  const ChebPoly d3 = f.derivative().derivative().derivative();
  double worst = 0.0, scale = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double x = -1.0 + 2.0 * i / 400;
    worst = std::max(worst, std::abs(std::get<ChebPoly>(p3).eval(x) - d3.eval(x)));
    scale = std::max(scale, std::abs(d3.eval(x)));
  }
  CHECK(worst <= 1e-8 * scale);
}

TEST_CASE("moment averages") {
  const ChebPoly one = fit_fn([](double) { return 1.0; }, 1.0, 8);
  CHECK(std::abs(moment_average(FuncRep(one), 0).eval(0.4) - 2.0) < 1e-13);
  const ChebPoly lin = fit_fn([](double x) { return x; }, 1.5, 8);
  CHECK(std::abs(moment_average(FuncRep(lin), 0).eval(0.9)) < 1e-13);
  for (double x : {-1.2, 0.3, 1.4})
    CHECK(std::abs(moment_average(FuncRep(lin), 1).eval(x) - 2.0 / 3.0 * x) < 1e-13);
  CHECK_THROWS_AS((void)moment_average(FuncRep(lin), -1), std::invalid_argument);
}

TEST_CASE("iterated-derivative induction identity") {
  // T^n f = T^{n-1}(f') + k I_{T^{n-1}(f'), n-1}
  std::mt19937 rng(101);
  for (auto kv : {cplx(0.7, 0.0), cplx(1.3, 0.0), cplx(0.9, 0.8)}) {
    const Multiplicity k(kv.real(), kv.imag());
    const ChebPoly f = random_smooth_compact(rng, 2.0, 5);
    for (int n = 1; n <= 5; ++n) {
      const FuncRep lhs = dunkl_power(k, FuncRep(f), n);
      const FuncRep der = FuncRep(f.derivative());
      const FuncRep t1 = dunkl_power(k, der, n - 1);
      const ChebPoly t2 = moment_average(t1, n - 1);
      const ChebPoly rhs = std::get<ChebPoly>(t1).plus(t2.scaled(kv));
      double worst = 0.0, scale = 0.0;
      for (int i = 0; i <= 160; ++i) {
        const double x = -2.0 + 4.0 * i / 160;
        worst = std::max(worst,
                         std::abs(std::get<ChebPoly>(lhs).eval(x) - rhs.eval(x)));
        scale = std::max(scale, std::abs(std::get<ChebPoly>(lhs).eval(x)));
      }
      CHECK(worst <= 1e-6 * scale);
    }
  }
}

TEST_CASE("operator commutes with the moment average as in its proof") {
  // T_k I_{g,m} = I_{T_k g, m+1}
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  const Multiplicity k(1.1, 0.4);
  for (int m = 0; m <= 4; ++m) {
    std::vector<double> c(6);
    for (auto& v : c) v = U(rng);
    const ChebPoly g = fit_fn(
        [&c](double x) {
          double p = 0.0;
          for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * x + *it;
          return p;
        },
        1.5, 16);
    const ChebPoly lhs =
        std::get<ChebPoly>(dunkl_apply(k, FuncRep(moment_average(FuncRep(g), m))));
    const ChebPoly rhs = moment_average(dunkl_apply(k, FuncRep(g)), m + 1);
    for (int i = 0; i <= 60; ++i) {
      const double x = -1.5 + 3.0 * i / 60;
      CHECK(std::abs(lhs.eval(x) - rhs.eval(x)) < 1e-8);
    }
  }
}

TEST_CASE("moment average against an independent trapezoid reference") {
  std::mt19937 rng(13);
  const ChebPoly g = random_smooth_compact(rng, 1.5, 4);
  const ChebPoly avg = moment_average(FuncRep(g), 2);
  for (double x : {-1.2, 0.35, 1.0}) {
    const cplx ref = oracles::moment_integral_reference(
        [&g](double t) { return g.eval(t); }, 2, x);
    CHECK(std::abs(avg.eval(x) - ref) < 1e-9);
  }
}

TEST_CASE("iterated-derivative factor bounds the operator powers") {
  // |T^n f(x)| <= Gamma(n+1+2|k|) / (n! Gamma(1+2|k|)) max_{|y|<=|x|} |f^(n)(y)|
  const ClosedForm b = ClosedForm::bump(1.0, 0.5);
  const ChebPoly f = ChebPoly::fit([&b](double x) { return b.eval(x); }, 1.0, 128);
  for (auto kv : {cplx(0.0, 0.0), cplx(0.5, 0.0), cplx(1.3, 0.0), cplx(1.0, 0.7)}) {
    const Multiplicity k(kv.real(), kv.imag());
    FuncRep tn = FuncRep(f);
    ChebPoly dn = f;
    for (int n = 1; n <= 10; ++n) {
      tn = dunkl_apply(k, tn);
      dn = dn.derivative();
      const double factor = gamma_ratio_factor(k, n);
      // scan |x| grid; the y-sup grid contains every scanned x
      std::vector<double> xs;
      for (int i = 0; i <= 40; ++i) xs.push_back(-1.0 + 2.0 * i / 40);
      for (double x : xs) {
        double sup_dn = 0.0;
        for (double y : xs)
          if (std::abs(y) <= std::abs(x) + 1e-15)
            sup_dn = std::max(sup_dn, std::abs(dn.eval(y)));
        CHECK(std::abs(std::get<ChebPoly>(tn).eval(x)) <=
              factor * sup_dn + 1e-8 * (1.0 + sup_dn));
      }
    }
  }
}

TEST_CASE("parity bookkeeping of the operator") {
  std::mt19937 rng(19);
  const ChebPoly f = random_smooth_compact(rng, 2.0, 6);
  const ChebPoly even = f.even_part();
  const auto t = std::get<ChebPoly>(dunkl_apply(Multiplicity(0.8), FuncRep(even)));
  for (const auto& c : t.even_coeffs()) CHECK(std::abs(c) < 1e-13 * (1.0 + f.max_coeff()));
}

TEST_CASE("sup norms") {
  CHECK(sup_norm(FuncRep(ClosedForm::gaussian(1.0))) == doctest::Approx(1.0).epsilon(1e-10));
  const ChebPoly lin = fit_fn([](double x) { return x; }, 2.0, 8);
  CHECK(sup_norm(FuncRep(lin), 2.0) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(sup_norm(FuncRep(ClosedForm::bump(1.0, 0.5))) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("instability abort carries the step count") {
  // with an aggressive trim threshold the recorded loss blows the budget
  // immediately and the iteration must abort rather than return junk
  const ClosedForm b = ClosedForm::bump(1.0, 0.5);
  const ChebPoly f = ChebPoly::fit([&b](double x) { return b.eval(x); }, 1.0, 128);
  bool aborted = false;
  try {
    PowerOptions opt;
    opt.trim_tol = 1e-3;
    opt.trim_budget = 1e-9;
    (void)dunkl_power(Multiplicity(0.0), FuncRep(f), 4, opt);
  } catch (const InstabilityError& e) {
    aborted = true;
    CHECK(e.steps_done() >= 1);
    CHECK(e.trim_loss() > 1e-9);
  }
  CHECK(aborted);
}
