#ifndef DUNKL_ANALYSIS_HPP
#define DUNKL_ANALYSIS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dunkl/multiplicity.hpp"
#include "dunkl/transform.hpp"

namespace dunkl {

// Experiments quantifying the growth-versus-spectral-support identities:
// the n-th root of || T_k^n f ||_{Re k, p} converges to the spectral support
// radius of f, and transforms of compactly supported functions are entire
// of the corresponding exponential type.

struct BangEntry {
  int n;
  double norm;    // || T_k^n f ||_{Re k, p}
  double root;    // norm^{1/n} (0 when the norm vanishes)
  double defect;  // quadrature coarse/fine disagreement, relative
};

struct BangSequence {
  Multiplicity k{0.0};
  double p = 2.0;
  std::string method;  // "direct" or "spectral"
  double R_true = std::numeric_limits<double>::quiet_NaN();
  std::vector<BangEntry> entries;
  std::string source_tag;
  double norm_domain = 0.0;  // truncation radius of the norm integrals
  std::string note;          // e.g. instability abort with partial results
};

enum class BangMethod { direct, spectral };

struct BangOptions {
  double window = 0.0;   // norm-domain override; 0 = envelope policy
  int direct_cap = 8;    // largest n the direct route accepts
  int direct_degree = 34;
  double direct_halfwidth = 0.0;  // 0 = policy from R_true
  TransformOptions transform;
};

/// Norm sequence || T_k^n f ||^{1/n} for n = 1..n_max. The spectral route
/// folds (i lambda)^n into the source profile; the direct route iterates the
/// operator on a proxy fit (extended-precision coefficients, windowed norms)
/// and is capped at small n. An instability abort returns partial entries
/// with a note.
BangSequence bang_sequence(const Multiplicity& k, const SpectralSource& src,
                           double p, int n_max, BangMethod method,
                           const BangOptions& opt = {});

/// Shared spectral workspace: the kernel fills are the dominant cost and do
/// not depend on the norm exponent, so one workspace serves all p.
struct BangWorkspace {
  PowerNormGrids grids;
  PowerValues values;
};
BangWorkspace make_bang_workspace(const SpectralSource& src, int n_max,
                                  const BangOptions& opt = {});
BangSequence bang_from_workspace(const Multiplicity& k, const SpectralSource& src,
                                 const BangWorkspace& ws, double p);

struct SupportEstimate {
  double radius = 0.0;
  bool infinite = false;  // mass persisted at the scan boundary
  double epsilon = 0.0;
  double lambda_max = 0.0;
};

struct SupportOptions {
  int scan_points = 512;  // per sign
  TransformOptions transform;
};

/// Largest |lambda| with |D_k f(lambda)| above eps * max |D_k f|, refined by
/// shrinking brackets of fresh transform evaluations; the infinite flag is
/// set when the threshold is still exceeded at the scan boundary. The
/// threshold is relative, so rescaling f leaves the estimate unchanged; for
/// transforms with analytic decay the estimate is threshold-dependent by
/// nature. An identically zero profile reports radius 0.
SupportEstimate support_radius(const Multiplicity& k, const FuncRep& f,
                               double eps = 1e-8, double lambda_max = 12.0,
                               const SupportOptions& opt = {},
                               SpectralProfile* scan_out = nullptr);
/// Grid-resolution variant working on an existing profile (crossing point
/// interpolated between samples).
SupportEstimate support_radius(const SpectralProfile& profile, double eps = 1e-8);

struct GridSpec {
  double sigma_max = 20.0;
  int n_sigma = 161;
  int n_tau = 13;
};

struct GrowthCertificate {
  double R = 0.0;  // claimed support radius (the proxy halfwidth)
  int n = 0;
  double tau_max = 0.0;
  double C_n = 0.0;  // sup |D_k f(z)| (1+|z|)^n e^{-R |Im z|} over the grid
  double stability = 0.0;  // relative drift under one grid doubling
  GridSpec grid;
};

/// Certifies the exponential-type growth of D_k f on the strip
/// |Im z| <= tau_max for compactly supported f. Aborts (AccuracyError) if the
/// quadrature cancellation ratio exceeds 1e12.
GrowthCertificate growth_certify(const Multiplicity& k, const ChebPoly& f, int n,
                                 double tau_max, GridSpec grid = {},
                                 const TransformOptions& opt = {});

/// |D_k f(i tau)| e^{-R_claim tau} at the given tau values: strictly
/// increasing ratios expose a claimed type below the true one.
std::vector<double> axis_growth_ratios(const Multiplicity& k, const ChebPoly& f,
                                       double R_claim, const std::vector<double>& taus,
                                       const TransformOptions& opt = {});

/// C e^n Gamma(n+1+2|k|) / (n^n Gamma(1+2|k|)) R^n, the finite-n bound on
/// || T_k^n f ||_inf for f of exponential type R, computed with log-Gamma.
double upper_bound_curve(double C, double R, const Multiplicity& k, int n);

/// Gamma(n+1+2|k|) / (n! Gamma(1+2|k|)), the iterated-derivative factor.
double gamma_ratio_factor(const Multiplicity& k, int n);

struct IdentityFamily {
  std::vector<ChebPoly> compact;                      // smooth, compactly supported
  std::vector<std::pair<ChebPoly, ChebPoly>> pairs;   // for the bilinear identities
  static IdentityFamily standard(unsigned seed);
};

struct IdentityReport {
  std::map<std::string, double> defects;  // keyed by identity name
  std::set<std::string> skipped;
  double worst() const {
    double w = 0.0;
    for (const auto& [name, d] : defects) w = std::max(w, d);
    return w;
  }
};

/// Runs the structural identity checks over the family and returns the max
/// relative defect per identity: anti-symmetry of T_k, the transform adjoint
/// relation, intertwining, Plancherel (real k only; skipped otherwise),
/// inversion round trip and the Gaussian fixed point. Failures are data, not
/// errors.
IdentityReport identity_suite(const Multiplicity& k, const IdentityFamily& family,
                              const TransformOptions& opt = {});

}  // namespace dunkl

#endif
