#ifndef DUNKL_KERNEL_HPP
#define DUNKL_KERNEL_HPP

#include <complex>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/multiplicity.hpp"

namespace dunkl {

// The kernel psi_lambda^k is the unique holomorphic solution of
//
//     T_k f = i lambda f,   f(0) = 1,
//
// and generalizes exp(i lambda z) (to which it reduces at k = 0). Writing
// psi = sum c_n z^n and using T_k z^n = gamma_n z^{n-1} with gamma_n = n for
// even n and gamma_n = n + 2k for odd n, matching coefficients gives
//
//     gamma_n c_n = i lambda c_{n-1},   c_0 = 1,
//
// so c_n = (i lambda)^n / (gamma_1 ... gamma_n). The terms depend on lambda
// and z only through u = lambda z, which is why the symmetry
// psi_lambda(z) = psi_z(lambda) and scaling psi_{s lambda}(z) = psi_lambda(sz)
// hold. kernel_residual validates the construction against the integral form
// of the operator, T_k f(x) = f'(x) + k int_{-1}^1 f'(tx) dt.
//
// Evaluation strategy. The origin series has terms growing to ~e^{|u|}
// before decaying, so direct summation loses ~|u|/ln(10) digits to
// cancellation; it is only used for |u| <= series_cutoff. Beyond that the
// defining problem is advanced along the ray from the origin to u by
// recentered Taylor steps: splitting psi(u) = E(u) + O(u) into even and odd
// parts turns T_k psi = i lambda psi into the first-order system
//
//     E' = i O,      u O' + 2k O = i u E,
//
// whose local Taylor coefficients at a center a != 0 obey
//
//     e_{m+1} = i o_m / (m+1),
//     o_{m+1} = (i a e_m + i e_{m-1} - (m + 2k) o_m) / (a (m+1)).
//
// Each step evaluates a short series with bounded argument, so partial sums
// stay of the order of the solution and no cancellation blow-up occurs. The
// reported tail bound sums the certified truncation bounds of the origin leg
// and of every step (double-precision roundoff, of order steps * eps * |psi|,
// is not part of the certificate).

/// Truncated origin power series sum_{n<=N} c_n z^n with a tail bound that
/// is valid on the declared evaluation disc |z| <= disc_radius.
class KernelSeries {
 public:
  /// Builds the series adaptively: stops at the first N >= n_min with
  /// 2 |c_N| r^N <= tol and |i lambda| r / |gamma_{N+1}| <= 1/2, so the tail
  /// is majorized by a geometric series. Throws TruncationError (carrying
  /// the achieved bound) if the cap is hit first.
  static KernelSeries build(const Multiplicity& k, cplx lambda, double disc_radius,
                            double tol = 1e-12, long cap = 4096, long n_min = 8);

  const Multiplicity& k() const { return k_; }
  cplx lambda() const { return lambda_; }
  const std::vector<cplx>& coefficients() const { return c_; }
  long truncation_order() const { return static_cast<long>(c_.size()) - 1; }
  double tail_bound() const { return tail_bound_; }
  double disc_radius() const { return disc_radius_; }

  cplx eval(cplx z) const;

 private:
  Multiplicity k_{0.0};
  cplx lambda_{};
  std::vector<cplx> c_;
  double tail_bound_ = 0.0;
  double disc_radius_ = 0.0;
};

/// Evaluator for psi as a function of u = lambda z, exposing the even/odd
/// split and term-wise derivatives. Pure value type; safe for concurrent use.
class KernelEvaluator {
 public:
  struct Point {
    cplx even{};        // E(u)
    cplx odd{};         // O(u)
    cplx odd_over_u{};  // O(u)/u, finite at u = 0
    cplx deven{};       // dE/du (term-wise)
    cplx dodd{};        // dO/du (term-wise)
    double tail_bound = 0.0;
    int terms = 0;

    cplx value() const { return even + odd; }
    /// psi at the reflected argument -u (parity of the series).
    cplx value_reflected() const { return even - odd; }
    cplx deriv_u() const { return deven + dodd; }
  };

  explicit KernelEvaluator(const Multiplicity& k, double tol = 1e-12)
      : k_(k), tol_(tol) {}

  /// psi and derivative data at u; dispatches between the origin series and
  /// ray marching. Throws RangeError when e^{|Im u|} would overflow and
  /// TruncationError when the requested tolerance cannot be certified.
  Point eval_u(cplx u) const;

  /// Points at dir * r for every r in radii (ascending, >= 0, |dir| = 1),
  /// sharing one march along the ray. Far cheaper than repeated eval_u for
  /// many collinear arguments.
  std::vector<Point> eval_ray(cplx dir, const std::vector<double>& radii) const;

  const Multiplicity& multiplicity() const { return k_; }
  double tol() const { return tol_; }

  double series_cutoff = 10.0;  // origin series used for |u| below this
  double step = 2.0;            // marching step along the ray
  int local_order_cap = 96;     // local Taylor order cap per step
  long series_cap = 4096;       // origin series term cap
  double im_guard = 705.0;      // |Im u| beyond which e^{|Im u|} overflows

 private:
  Point origin_series(cplx u, double tol_abs) const;
  Multiplicity k_;
  double tol_;
};

struct KernelValue {
  cplx value;
  double tail_bound;
  int terms;
};

/// psi_lambda^k(z) with certified truncation error <= tol * e^{|Im(lambda z)|}.
KernelValue kernel_eval(const Multiplicity& k, cplx lambda, cplx z, double tol = 1e-12);

/// |T_k psi_lambda^k(x) - i lambda psi_lambda^k(x)| with the operator applied
/// through its integral form: the derivative is evaluated term-wise from the
/// series representation and the reflection part through Gauss-Legendre
/// quadrature of f'(tx) over t in [-1, 1]. Checks the construction; the
/// result is truncation plus quadrature noise.
double kernel_residual(const Multiplicity& k, cplx lambda, double x, double tol = 1e-12);

}  // namespace dunkl

#endif
