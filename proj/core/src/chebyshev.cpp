#include "dunkl/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dunkl {

using xreal = ChebPoly::xreal;
using xcplx = ChebPoly::xcplx;

namespace {
constexpr long double kPiL = 3.14159265358979323846264338327950288L;
}

ChebPoly ChebPoly::fit(const std::function<cplx(double)>& f, double L, int N,
                       double trim_tol) {
  if (!(L > 0.0)) throw std::invalid_argument("ChebPoly::fit: L must be > 0");
  if (N < 2) throw std::invalid_argument("ChebPoly::fit: N must be >= 2");

  std::vector<xcplx> v(N + 1);
  for (int j = 0; j <= N; ++j) {
    const long double theta = kPiL * j / N;
    const double x = static_cast<double>(L * std::cos(theta));
    const cplx fx = f(x);
    if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag()))
      throw std::invalid_argument("ChebPoly::fit: non-finite sample");
    v[j] = xcplx(fx.real(), fx.imag());
  }

  // DCT-I, direct O(N^2) sums (grids here are a few hundred points)
  std::vector<xcplx> a(N + 1);
  for (int m = 0; m <= N; ++m) {
    xcplx acc = 0.5L * (v[0] + (m % 2 == 0 ? v[N] : -v[N]));
    for (int j = 1; j < N; ++j)
      acc += v[j] * std::cos(kPiL * j * m / N);
    a[m] = acc * (2.0L / N);
  }
  a[0] *= 0.5L;
  a[N] *= 0.5L;

  ChebPoly p = from_merged(std::move(a), L, 0.0);
  return p.trimmed(trim_tol);
}

ChebPoly ChebPoly::from_coefficients(const std::vector<cplx>& full, double L) {
  if (!(L > 0.0)) throw std::invalid_argument("ChebPoly: L must be > 0");
  std::vector<xcplx> a(full.size());
  for (std::size_t i = 0; i < full.size(); ++i) a[i] = xcplx(full[i].real(), full[i].imag());
  return from_merged(std::move(a), L, 0.0);
}

ChebPoly ChebPoly::from_merged(std::vector<xcplx> full, double L, double carried_loss) {
  ChebPoly p;
  p.L_ = L;
  p.trim_loss_ = carried_loss;
  for (std::size_t m = 0; m < full.size(); ++m) {
    if (m % 2 == 0)
      p.even_.push_back(full[m]);
    else
      p.odd_.push_back(full[m]);
  }
  return p;
}

std::vector<xcplx> ChebPoly::merged() const {
  const std::size_t n_even = even_.empty() ? 0 : 2 * even_.size() - 1;
  const std::size_t n_odd = odd_.empty() ? 0 : 2 * odd_.size();
  const std::size_t n = std::max(n_even, n_odd);
  std::vector<xcplx> full(n, xcplx(0.0L));
  for (std::size_t i = 0; i < even_.size(); ++i) full[2 * i] = even_[i];
  for (std::size_t i = 0; i < odd_.size(); ++i) full[2 * i + 1] = odd_[i];
  return full;
}

int ChebPoly::degree() const {
  const auto full = merged();
  return full.empty() ? 0 : static_cast<int>(full.size()) - 1;
}

std::vector<cplx> ChebPoly::even_coeffs() const {
  std::vector<cplx> out(even_.size());
  for (std::size_t i = 0; i < even_.size(); ++i)
    out[i] = cplx(static_cast<double>(even_[i].real()), static_cast<double>(even_[i].imag()));
  return out;
}

std::vector<cplx> ChebPoly::odd_coeffs() const {
  std::vector<cplx> out(odd_.size());
  for (std::size_t i = 0; i < odd_.size(); ++i)
    out[i] = cplx(static_cast<double>(odd_[i].real()), static_cast<double>(odd_[i].imag()));
  return out;
}

std::vector<cplx> ChebPoly::full_coeffs() const {
  const auto full = merged();
  std::vector<cplx> out(full.size());
  for (std::size_t i = 0; i < full.size(); ++i)
    out[i] = cplx(static_cast<double>(full[i].real()), static_cast<double>(full[i].imag()));
  return out;
}

cplx ChebPoly::eval(double x) const {
  if (std::abs(x) > L_) return 0.0;
  const auto full = merged();
  if (full.empty()) return 0.0;
  const xreal t = static_cast<xreal>(x) / static_cast<xreal>(L_);
  // Clenshaw
  xcplx b1 = 0.0L, b2 = 0.0L;
  const xreal two_t = 2.0L * t;
  for (std::size_t m = full.size(); m-- > 1;) {
    const xcplx b0 = two_t * b1 - b2 + full[m];
    b2 = b1;
    b1 = b0;
  }
  const xcplx r = t * b1 - b2 + full[0];
  return cplx(static_cast<double>(r.real()), static_cast<double>(r.imag()));
}

ChebPoly ChebPoly::derivative() const {
  const auto a = merged();
  const std::size_t n = a.size();
  if (n <= 1) return from_merged({xcplx(0.0L)}, L_, trim_loss_);
  std::vector<xcplx> c(n, xcplx(0.0L));  // c has degree n-2; keep size then shrink
  // recurrence c_{m} = c_{m+2} + 2 (m+1) a_{m+1}, c_0 gets half weight
  for (std::size_t m = n - 1; m-- > 0;) {
    const xcplx up = (m + 2 < n) ? c[m + 2] : xcplx(0.0L);
    c[m] = up + 2.0L * static_cast<xreal>(m + 1) * a[m + 1];
  }
  c[0] *= 0.5L;
  c.resize(n - 1);
  const xreal inv_l = 1.0L / static_cast<xreal>(L_);
  for (auto& cm : c) cm *= inv_l;
  return from_merged(std::move(c), L_, trim_loss_);
}

ChebPoly ChebPoly::reflected() const {
  ChebPoly p = *this;
  for (auto& c : p.odd_) c = -c;
  return p;
}

ChebPoly ChebPoly::even_part() const {
  ChebPoly p;
  p.L_ = L_;
  p.even_ = even_;
  p.trim_loss_ = trim_loss_;
  return p;
}

ChebPoly ChebPoly::odd_part() const {
  ChebPoly p;
  p.L_ = L_;
  p.odd_ = odd_;
  p.trim_loss_ = trim_loss_;
  return p;
}

ChebPoly ChebPoly::odd_divided_by_x(double residual_tol) const {
  // x T_m = (T_{m+1} + T_{m-1})/2 (m >= 1), x T_0 = T_1. With the odd part
  // p = sum b_j T_j (j odd) and h = sum c_j T_j (j even), x h = p gives
  //   b_{top} = c_{top-1}/2,  b_j = (c_{j-1} + c_{j+1})/2,  b_1 = c_0 + c_2/2,
  // solved top-down. Works in the scaled variable u = x/L, then h /= L.
  if (odd_.empty()) {
    ChebPoly zero;
    zero.L_ = L_;
    zero.even_.push_back(xcplx(0.0L));
    zero.trim_loss_ = trim_loss_;
    return zero;
  }
  const std::size_t m = odd_.size();  // coefficients b_1, b_3, ..., b_{2m-1}
  std::vector<xcplx> c(m, xcplx(0.0L));  // c_0, c_2, ..., c_{2m-2}
  c[m - 1] = 2.0L * odd_[m - 1];
  for (std::size_t i = m - 1; i-- > 1;) c[i] = 2.0L * odd_[i] - c[i + 1];
  if (m >= 2)
    c[0] = odd_[0] - 0.5L * c[1];
  else
    c[0] = odd_[0];

  const xreal inv_l = 1.0L / static_cast<xreal>(L_);
  std::vector<xcplx> full(2 * m - 1, xcplx(0.0L));
  for (std::size_t i = 0; i < m; ++i) full[2 * i] = c[i] * inv_l;
  ChebPoly h = from_merged(std::move(full), L_, trim_loss_);

  // verification: x h(x) must reproduce the odd part on the extrema nodes
  const ChebPoly podd = odd_part();
  const int nn = std::max(2 * static_cast<int>(m), 8);
  xreal scale = 0.0L, worst = 0.0L;
  for (int j = 0; j <= nn; ++j) {
    const double x = L_ * std::cos(std::numbers::pi * j / nn);
    const cplx lhs = x * h.eval(x);
    const cplx rhs = podd.eval(x);
    worst = std::max<xreal>(worst, std::abs(lhs - rhs));
    scale = std::max<xreal>(scale, std::abs(rhs));
  }
  if (scale > 0.0L && static_cast<double>(worst / scale) > residual_tol)
    throw AccuracyError("odd_divided_by_x: ill-conditioned solve",
                        static_cast<double>(worst / scale));
  return h;
}

ChebPoly ChebPoly::trimmed(double rel_tol) const {
  auto full = merged();
  xreal mx = 0.0L;
  for (const auto& c : full) mx = std::max<xreal>(mx, std::abs(c));
  if (mx == 0.0L) {
    ChebPoly z;
    z.L_ = L_;
    z.even_.push_back(xcplx(0.0L));
    z.trim_loss_ = trim_loss_;
    return z;
  }
  const xreal cut = mx * static_cast<xreal>(rel_tol);
  std::size_t keep = full.size();
  xreal dropped = 0.0L;
  while (keep > 1 && std::abs(full[keep - 1]) < cut) {
    dropped += std::abs(full[keep - 1]);
    --keep;
  }
  full.resize(keep);
  return from_merged(std::move(full), L_,
                     trim_loss_ + static_cast<double>(dropped / mx));
}

ChebPoly ChebPoly::scaled(cplx factor) const {
  ChebPoly p = *this;
  const xcplx f(factor.real(), factor.imag());
  for (auto& c : p.even_) c *= f;
  for (auto& c : p.odd_) c *= f;
  return p;
}

ChebPoly ChebPoly::plus(const ChebPoly& other) const {
  if (std::abs(L_ - other.L_) > 1e-14 * std::max(L_, other.L_))
    throw std::invalid_argument("ChebPoly::plus: halfwidth mismatch");
  ChebPoly p;
  p.L_ = L_;
  p.trim_loss_ = trim_loss_ + other.trim_loss_;
  p.even_.resize(std::max(even_.size(), other.even_.size()), xcplx(0.0L));
  p.odd_.resize(std::max(odd_.size(), other.odd_.size()), xcplx(0.0L));
  for (std::size_t i = 0; i < even_.size(); ++i) p.even_[i] += even_[i];
  for (std::size_t i = 0; i < other.even_.size(); ++i) p.even_[i] += other.even_[i];
  for (std::size_t i = 0; i < odd_.size(); ++i) p.odd_[i] += odd_[i];
  for (std::size_t i = 0; i < other.odd_.size(); ++i) p.odd_[i] += other.odd_[i];
  return p;
}

double ChebPoly::max_coeff() const {
  xreal mx = 0.0L;
  for (const auto& c : even_) mx = std::max<xreal>(mx, std::abs(c));
  for (const auto& c : odd_) mx = std::max<xreal>(mx, std::abs(c));
  return static_cast<double>(mx);
}

}  // namespace dunkl
