#include <doctest.h>

#include <cmath>

#include "dunkl/analysis.hpp"

using namespace dunkl;

TEST_CASE("upper bound curve values") {
  // C e^n Gamma(n+1+2|k|) / (n^n Gamma(1+2|k|)) R^n
  CHECK(upper_bound_curve(1.0, 2.0, Multiplicity(0.0), 1) ==
        doctest::Approx(std::exp(1.0) * 2.0).epsilon(1e-12));
  // n = 2, |k| = 1: Gamma(5)/(2^2 Gamma(3)) = 24/8 = 3
  CHECK(upper_bound_curve(1.0, 1.0, Multiplicity(1.0), 2) ==
        doctest::Approx(3.0 * std::exp(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS((void)upper_bound_curve(0.0, 1.0, Multiplicity(0.0), 1),
                  std::invalid_argument);

  // bound^{1/n} approaches R from above once Stirling kicks in
  const Multiplicity k(1.3);
  double prev = 1e300;
  for (int n = 8; n <= 512; n *= 2) {
    const double root = std::pow(upper_bound_curve(2.0, 1.5, k, n), 1.0 / n);
    CHECK(root < prev);
    prev = root;
  }
  CHECK(prev < 1.5 * 1.1);
}

TEST_CASE("gamma ratio factor") {
  for (int n : {0, 1, 5, 11}) CHECK(gamma_ratio_factor(Multiplicity(0.0), n) ==
                                     doctest::Approx(1.0).epsilon(1e-12));
  const Multiplicity kc(0.6, 0.8);  // |k| = 1
  CHECK(gamma_ratio_factor(kc, 1) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(gamma_ratio_factor(kc, 2) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(gamma_ratio_factor(Multiplicity(0.5), 1) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("bang sequences on a band-limited source") {
  const Multiplicity k(0.5);
  const BandLimited bl = band_limited_synthesize(k, 1.0, 0.9, 320.0);
  const SpectralSource src = make_source(bl);
  const BangSequence seq =
      bang_sequence(k, src, std::numeric_limits<double>::infinity(), 32,
                    BangMethod::spectral);
  REQUIRE(seq.entries.size() == 32);
  CHECK(seq.entries[15].root < seq.entries[31].root);
  CHECK(seq.entries[31].root > 0.8);
  CHECK(seq.entries[31].root < 1.02);
  CHECK(seq.method == "spectral");
  CHECK(seq.R_true == doctest::Approx(1.0));

  // direct route agrees on a matched window at small n
  BangOptions opt;
  opt.window = 10.0;
  const BangSequence dir =
      bang_sequence(k, src, 2.0, 4, BangMethod::direct, opt);
  const BangSequence spc =
      bang_sequence(k, src, 2.0, 4, BangMethod::spectral, opt);
  for (int n = 1; n <= 4; ++n)
    CHECK(std::abs(dir.entries[n - 1].norm / spc.entries[n - 1].norm - 1.0) < 1e-2);

  CHECK_THROWS_AS((void)bang_sequence(k, src, 2.0, 20, BangMethod::direct),
                  std::invalid_argument);
}

TEST_CASE("gaussian source diverges") {
  const Multiplicity k(0.0);
  const SpectralSource src = make_gaussian_source(k, 24);
  const BangSequence seq = bang_sequence(
      k, src, std::numeric_limits<double>::infinity(), 24, BangMethod::spectral);
  CHECK(seq.entries[23].root > seq.entries[7].root);
  CHECK(seq.entries[23].root > 2.0);
  CHECK(std::isnan(seq.R_true));
}

TEST_CASE("support radius of a band-limited function") {
  const Multiplicity k(0.5);
  const BandLimited bl = band_limited_synthesize(k, 1.0, 0.5, 700.0);
  const SupportEstimate est = support_radius(k, FuncRep(bl), 1e-8, 2.0);
  CHECK(!est.infinite);
  CHECK(est.radius > 0.95);
  CHECK(est.radius < 1.02);
}

TEST_CASE("support radius of the gaussian is threshold-dependent and finite") {
  const SupportEstimate est = support_radius(
      Multiplicity(0.0), FuncRep(ClosedForm::gaussian(1.0)), 1e-8, 12.0);
  // e^{-lambda^2/2} = 1e-8 at lambda = sqrt(16 ln 10)
  CHECK(std::abs(est.radius - std::sqrt(16.0 * std::log(10.0))) < 0.02);
  CHECK(!est.infinite);
}

TEST_CASE("support radius sentinel when mass persists at the boundary") {
  const SupportEstimate est = support_radius(
      Multiplicity(0.0), FuncRep(ClosedForm::gaussian(1.0)), 1e-8, 3.0);
  CHECK(est.infinite);
}

TEST_CASE("support radius of zero is zero") {
  const SupportEstimate est = support_radius(
      Multiplicity(0.5), FuncRep(ClosedForm::poly_gaussian({0.0}, 1.0)), 1e-8, 4.0);
  CHECK(est.radius == 0.0);
  CHECK(!est.infinite);
}

TEST_CASE("profile-based estimate is exactly scale invariant") {
  const Multiplicity k(0.3);
  SpectralProfile p;
  p.k = k;
  for (int i = 0; i <= 200; ++i) {
    const double l = -2.0 + 4.0 * i / 200;
    p.grid.push_back(l);
    p.values.push_back(ClosedForm::bump(1.0, 0.5).eval(l));
  }
  const SupportEstimate a = support_radius(p, 1e-8);
  SpectralProfile scaled = p;
  for (auto& v : scaled.values) v *= 1024.0;  // exact in floating point
  const SupportEstimate b = support_radius(scaled, 1e-8);
  CHECK(a.radius == b.radius);
  CHECK(a.infinite == b.infinite);
  SpectralProfile empty;
  CHECK_THROWS_AS((void)support_radius(empty, 1e-8), std::invalid_argument);
}

TEST_CASE("growth certificates") {
  const Multiplicity k(0.5);
  const ClosedForm b = ClosedForm::bump(1.0, 0.5);
  const ChebPoly f = ChebPoly::fit([&b](double x) { return b.eval(x); }, 1.0, 140);

  GridSpec grid;
  grid.sigma_max = 20.0;
  grid.n_sigma = 81;
  grid.n_tau = 7;
  const GrowthCertificate c0 = growth_certify(k, f, 0, 3.0, grid);
  CHECK(std::isfinite(c0.C_n));
  CHECK(c0.stability <= 0.01);
  CHECK(c0.R == doctest::Approx(1.0));

  // tau_max = 0 is the real-axis sup
  const GrowthCertificate real_axis = growth_certify(k, f, 0, 0.0, grid);
  std::vector<double> ls;
  for (int i = 0; i <= 400; ++i) ls.push_back(-20.0 + 40.0 * i / 400);
  const auto p = dunkl_transform(k, FuncRep(f), ls);
  double sup = 0.0;
  for (const auto& v : p.values) sup = std::max(sup, std::abs(v));
  CHECK(real_axis.C_n == doctest::Approx(sup).epsilon(1e-2));

  // claiming a type below the true one: the ratios eventually grow without
  // bound; the flat edge delays the growth to moderately large tau
  const auto far = axis_growth_ratios(k, f, 0.6, {8.0, 16.0, 24.0});
  CHECK(far[0] < far[1]);
  CHECK(far[1] < far[2]);
  const auto true_claim = axis_growth_ratios(k, f, 1.0, {8.0, 16.0, 24.0});
  CHECK(true_claim[2] < true_claim[0]);
}

TEST_CASE("identity suite") {
  const IdentityFamily family = IdentityFamily::standard(7);
  const IdentityReport rep = identity_suite(Multiplicity(0.0), family);
  CHECK(rep.worst() <= 1e-6);
  CHECK(rep.defects.count("plancherel") == 1);

  const IdentityReport repc = identity_suite(Multiplicity(1.0, 0.7), family);
  CHECK(repc.skipped.count("plancherel") == 1);
  CHECK(repc.defects.count("antisymmetry") == 1);
  CHECK(repc.worst() <= 1e-6);
}

TEST_CASE("finite-n upper bound from a growth certificate") {
  // spectral norms sit below the certificate curve with a small slack on R
  const Multiplicity k(0.5);
  const double R = 1.0;
  const BandLimited bl = band_limited_synthesize(k, R, 0.9, 320.0);
  const ClosedForm g = bl.bump();
  const ChebPoly gfit = ChebPoly::fit([&g](double x) { return g.eval(x); }, R, 140);
  GridSpec grid;
  grid.n_sigma = 81;
  grid.n_tau = 7;
  const GrowthCertificate cert = growth_certify(k, gfit, 0, 3.0, grid);

  const SpectralSource src = make_source(bl);
  const PowerNormGrids grids = make_power_norm_grids(src, 32);
  const auto norms =
      power_norms(grids, {1, 2, 4, 8, 16, 32}, std::numeric_limits<double>::infinity());
  const int ns[] = {1, 2, 4, 8, 16, 32};
  for (int a = 0; a < 6; ++a)
    CHECK(norms[a].value <= upper_bound_curve(cert.C_n, R + 0.02, k, ns[a]));
}

TEST_CASE("pairing inequality at finite n") {
  // ||T^{2n} f||_{k,2} ||D_k g||_{k,2} >= (r - eps)^{2n} * tail mass of |g|^2
  const Multiplicity k(0.5);
  const BandLimited bl = band_limited_synthesize(k, 1.0, 0.9, 320.0);
  const SpectralSource src = make_source(bl);
  const PowerNormGrids grids = make_power_norm_grids(src, 16);
  const auto norms = power_norms(grids, {4, 8, 16}, 2.0);

  const auto& grid = *src.lambda_grid;
  const double r = 0.9949;  // threshold crossing of the rho = 0.9 bump
  const double eps = 0.05;
  const double tail = grid.integrate_abs([&](double l) {
    return std::abs(l) >= r - eps ? bl.g(l) * bl.g(l) : 0.0;
  });
  // ||D_k f||_{k,2} = ||g||_{k,2} appears on the left via Plancherel
  const double g_norm = std::sqrt(grid.integrate_abs(
      [&](double l) { return bl.g(l) * bl.g(l); }));
  const int ns[] = {4, 8, 16};
  for (int a = 0; a < 3; ++a)
    CHECK(norms[a].value * g_norm >=
          std::pow(r - eps, ns[a]) * tail * (1.0 - 1e-6));
}
