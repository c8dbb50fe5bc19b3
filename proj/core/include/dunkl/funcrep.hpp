#ifndef DUNKL_FUNCREP_HPP
#define DUNKL_FUNCREP_HPP

#include <functional>
#include <variant>

#include "dunkl/bandlimited.hpp"
#include "dunkl/chebyshev.hpp"
#include "dunkl/closedform.hpp"
#include "dunkl/multiplicity.hpp"

namespace dunkl {

/// Uniform function representation: a spectral polynomial proxy, a closed
/// form, or a band-limited synthesis. Evaluation is defined on all of R
/// (the proxy evaluates to 0 outside its interval and is a compactly
/// supported surrogate).
using FuncRep = std::variant<ChebPoly, ClosedForm, BandLimited>;

cplx eval(const FuncRep& f, double x);
/// radius beyond which |f| <= rel_tol * sup |f| (halfwidth for proxies,
/// eval_radius for band-limited syntheses).
double decay_radius(const FuncRep& f, double rel_tol);
bool compactly_supported(const FuncRep& f);
/// rough largest oscillation frequency, used to size quadrature panels
double max_frequency(const FuncRep& f);

/// Degree-N spectral interpolant of f at the Chebyshev extrema nodes of
/// [-L, L], with the parity split computed from the full coefficients.
ChebPoly cheb_fit(const std::function<cplx(double)>& f, double L, int N,
                  double trim_tol = 1e-14);

/// Exact derivative of the interpolant (parity flips).
ChebPoly differentiate(const ChebPoly& f);

/// x -> f(-x).
ChebPoly reflect(const ChebPoly& f);

/// h with x h(x) = odd part of f.
ChebPoly odd_div_x(const ChebPoly& f);

struct PowerOptions {
  double trim_tol = 1e-14;
  double trim_budget = 1e-6;  // accumulated relative trim loss before aborting
  int bump_fit_degree = 160;  // proxy degree when a bump enters the operator
};

/// T_k f = f' + 2k * (odd part of f) / x. Accepts proxies and closed forms
/// with a registered derivative; indicators (not C^1) and band-limited
/// syntheses (use the spectral route) are rejected.
FuncRep dunkl_apply(const Multiplicity& k, const FuncRep& f,
                    const PowerOptions& opt = {});

/// n-fold T_k with re-trimming after each step. Throws InstabilityError when
/// the accumulated trim loss exceeds the budget; the caller should switch to
/// the spectral route.
FuncRep dunkl_power(const Multiplicity& k, const FuncRep& f, int n,
                    const PowerOptions& opt = {});

/// I_{g,m}(x) = int_{-1}^1 t^m g(t x) dt by fixed-order Gauss-Legendre in t
/// at each node, refit as a proxy.
ChebPoly moment_average(const FuncRep& g, int m);

/// max |f| over a dense grid with local refinement around the top maxima.
/// For infinite radius the scan is cut at the representation's decay radius.
double sup_norm(const FuncRep& f, double radius = std::numeric_limits<double>::infinity());

}  // namespace dunkl

#endif
