#ifndef DUNKL_TRANSFORM_HPP
#define DUNKL_TRANSFORM_HPP

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "dunkl/funcrep.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/multiplicity.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {

struct TransformOptions {
  double quad_tol = 1e-9;          // convergence control, relative to profile scale
  double kernel_tol = 1e-12;
  GridOptions grid;                // origin panel and order defaults
  double envelope_cutoff = 1e-16;  // infinite-domain truncation policy
  double domain_cap = 2500.0;      // hard cap on the truncation radius
  int max_refinements = 2;
  double scale_floor = 0.0;  // convergence scale floor (profiles sampling only
                             // a far tail would otherwise demand relative
                             // accuracy below the roundoff floor)
};

/// Sampled transform D_k f on a lambda-grid.
struct SpectralProfile {
  Multiplicity k{0.0};
  std::vector<double> grid;
  std::vector<cplx> values;
  std::string provenance;  // "computed-from-f" or "synthetic-g"
  double truncation_radius = 0.0;
  double defect = 0.0;  // worst coarse/fine disagreement, relative
};

/// Transform sampled at the nodes of a weighted lambda-quadrature, so the
/// inverse integral can be evaluated without interpolation.
struct QuadProfile {
  Multiplicity k{0.0};
  std::shared_ptr<const WeightedGrid> grid;
  std::vector<cplx> values;  // aligned with grid->nodes()
  double truncation_radius = 0.0;
  double defect = 0.0;
};

/// c_k = int e^{-|x|^2/2} w_k(x) dx, by quadrature with the Gaussian tail
/// below 1e-16. Nonzero for every Re k >= 0.
cplx weight_constant(const Multiplicity& k);

/// D_k f(lambda) = (1/c_k) int f(x) psi^k_{-lambda}(x) w_k(x) dx on the given
/// real grid. For real multiplicities the computed values are checked
/// against the L^1 bound |D_k f| <= (1/|c_k|) int |f| |w_k|.
SpectralProfile dunkl_transform(const Multiplicity& k, const FuncRep& f,
                                std::vector<double> lambdas,
                                const TransformOptions& opt = {});

/// D_k f at complex arguments; requires a compactly supported representation.
std::vector<cplx> dunkl_transform_complex(const Multiplicity& k, const FuncRep& f,
                                          const std::vector<cplx>& zs,
                                          const TransformOptions& opt = {});

/// Transform sampled at quadrature nodes over [-lambda_max, lambda_max].
/// inverse_domain sizes the node density so the inverse integral stays
/// accurate for |x| up to that radius.
QuadProfile dunkl_transform_quad(const Multiplicity& k, const FuncRep& f,
                                 double lambda_max, double inverse_domain,
                                 const TransformOptions& opt = {});

/// D_k^{-1} g(x) = (1/c_k) int g(lambda) psi^k_lambda(x) w_k(lambda) dlambda,
/// which equals D_k g(-x).
std::vector<cplx> inverse_transform(const Multiplicity& k, const QuadProfile& g,
                                    const std::vector<double>& xs);
std::vector<cplx> inverse_transform(const Multiplicity& k, const FuncRep& g,
                                    double lambda_max, const std::vector<double>& xs,
                                    const TransformOptions& opt = {});

/// Bilinear pairing <f, g>_k = int f g w_k dx (no conjugation).
cplx weighted_inner(const Multiplicity& k, const FuncRep& f, const FuncRep& g,
                    const TransformOptions& opt = {});

/// (int |f|^p |x|^{2 Re k} dx)^{1/p} for finite p; sup norm for p = inf
/// (the weight plays no role there). use_abs selects |w_k|; for real k the
/// two weights coincide.
double lp_norm(const Multiplicity& k, const FuncRep& f, double p,
               bool use_abs = true, const TransformOptions& opt = {});

/// f = D_k^{-1} g with g = Bump(R, rho): the canonical test function whose
/// spectral support radius is exactly R. The cached lambda-grid resolves
/// evaluation for |x| <= eval_radius.
BandLimited band_limited_synthesize(const Multiplicity& k, double R, double rho,
                                    double eval_radius = 400.0,
                                    const TransformOptions& opt = {});

/// Synthetic g samples of a band-limited function, for reports.
SpectralProfile band_profile(const BandLimited& bl, int samples);

/// Spectral-side source for the iterated-operator experiments: T_k^n f is
/// evaluated as the inverse transform of (i lambda)^n g without iterating
/// the operator. g must be even (every member of the test families is).
struct SpectralSource {
  Multiplicity k{0.0};
  std::shared_ptr<const WeightedGrid> lambda_grid;
  std::vector<cplx> wg_pos;  // w_k * g over positive nodes
  double lambda_sup = 0.0;   // spectrum radius (compact) or envelope radius
  bool compact_spectrum = false;
  double R_true = std::numeric_limits<double>::quiet_NaN();
  cplx c_k{};
  std::function<double(double)> g_eval;  // spectral profile (even, real)
  std::function<cplx(double)> f_eval;    // time-domain signal, for direct fits
  double x_budget = 0.0;  // largest |x| the lambda-grid resolves
  std::string tag;
};

SpectralSource make_source(const BandLimited& bl);
/// Gaussian(1) as a source: its transform is again e^{-lambda^2/2}, with
/// unbounded spectral support. The grid covers lambda^n g up to n_max.
SpectralSource make_gaussian_source(const Multiplicity& k, int n_max,
                                    const TransformOptions& opt = {});

/// Streaming evaluator for T_k^n f over x-grids: one kernel march per grid
/// point serves every requested power (the march dominates the cost; the
/// per-n reduction over spectral nodes is a cheap fold).
class PowerEvaluator {
 public:
  PowerEvaluator(SpectralSource src, double kernel_tol = 1e-12);
  /// result[a][i] = T_k^{ns[a]} f (xs[i]), xs[i] >= 0. |T^n f| is even, so
  /// the positive axis determines every norm.
  std::vector<std::vector<cplx>> values(const std::vector<double>& xs,
                                        const std::vector<int>& ns) const;
  const SpectralSource& source() const { return src_; }

 private:
  SpectralSource src_;
  std::vector<double> lpos_;
  KernelEvaluator ev_;
};

/// Rebuilds the source's lambda-grid with different panel options (used for
/// coarse/fine convergence pairs and to match the grid to the x extent).
SpectralSource resample_source(const SpectralSource& src, const GridOptions& grid_opt);

/// Precomputed norm grids: coarse/fine weighted x-grids for the p < inf
/// integrals plus a dense uniform grid for the sup norm.
struct PowerNormGrids {
  PowerEvaluator coarse;
  PowerEvaluator fine;
  std::vector<double> xs_coarse, w_coarse;  // positive nodes, |w_k| weights
  std::vector<double> xs_fine, w_fine;
  std::vector<double> xs_sup;
  double domain = 0.0;
  double sup_domain = 0.0;
};
PowerNormGrids make_power_norm_grids(const SpectralSource& src, int n_max,
                                     const TransformOptions& opt = {},
                                     double domain_override = 0.0);

struct PowerNorm {
  double value;
  double defect;  // coarse/fine disagreement, relative
};

/// T^n f evaluated once over all three norm grids; the expensive kernel
/// fills are shared by every norm exponent afterwards.
struct PowerValues {
  std::vector<int> ns;
  std::vector<std::vector<cplx>> coarse, fine, sup;  // [a][i]
};
PowerValues compute_power_values(const PowerNormGrids& grids,
                                 const std::vector<int>& ns);
std::vector<PowerNorm> power_norms(const PowerNormGrids& grids,
                                   const PowerValues& vals, double p);
/// || T_k^n f ||_{Re k, p} for every n in ns (single-exponent convenience).
std::vector<PowerNorm> power_norms(const PowerNormGrids& grids,
                                   const std::vector<int>& ns, double p);

/// || T_k^n f ||_{Re k, p} by the spectral route (inverse transform of
/// (i lambda)^n g), the stable path for large n.
double spectral_power_norm(const Multiplicity& k, const BandLimited& bl, int n,
                           double p, const TransformOptions& opt = {});

}  // namespace dunkl

#endif
