#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace dunkl {

namespace {

QuadratureRule make_gauss_legendre(int n) {
  QuadratureRule r;
  r.nodes.assign(n, 0.0);
  r.weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // initial guess for the i-th root (descending), then Newton
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one clean-up step
        p0 = 1.0;
        p1 = x;
        for (int j = 2; j <= n; ++j) {
          const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        break;
      }
    }
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

// P_n^{(0,alpha)}(x) and derivative by the three-term recurrence.
double jacobi_p(int n, double alpha, double x) {
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = 0.5 * (-alpha + (alpha + 2.0) * x);
  for (int j = 2; j <= n; ++j) {
    const double s = 2.0 * j + alpha;  // a + b + 2j with a=0, b=alpha
    const double A = 2.0 * j * (j + alpha) * (s - 2.0);
    const double B = (s - 1.0) * (-alpha * alpha);
    const double C = (s - 2.0) * (s - 1.0) * s;
    const double D = 2.0 * (j - 1.0) * (j + alpha - 1.0) * s;
    const double p2 = ((B + C * x) * p1 - D * p0) / A;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double jacobi_dp(int n, double alpha, double x) {
  if (n == 0) return 0.0;
  const double pn = jacobi_p(n, alpha, x);
  const double pm = jacobi_p(n - 1, alpha, x);
  const double s = 2.0 * n + alpha;
  // (2n+a+b)(1-x^2) P_n' = n[(a-b) - (2n+a+b)x] P_n + 2(n+a)(n+b) P_{n-1}
  return (n * (-alpha - s * x) * pn + 2.0 * n * (n + alpha) * pm) / (s * (1.0 - x * x));
}

}  // namespace

const QuadratureRule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  static std::mutex mu;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
  return it->second;
}

QuadratureRule gauss_jacobi01(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi01: order must be >= 1");
  if (alpha < 0.0) throw std::invalid_argument("gauss_jacobi01: alpha must be >= 0");

  // the interlacing root search costs O(n^3); rules are reused heavily
  // across grid builds for the same multiplicity
  static std::mutex cache_mu;
  static std::map<std::pair<int, double>, QuadratureRule> cache;
  {
    std::lock_guard<std::mutex> lk(cache_mu);
    const auto it = cache.find({n, alpha});
    if (it != cache.end()) return it->second;
  }

  // Roots level by level: the roots of P_{j+1} interlace those of P_j, so
  // bisection inside the interlacing brackets always finds a sign change.
  std::vector<double> roots;
  roots.reserve(n);
  roots.push_back(alpha / (alpha + 2.0));  // root of P_1
  for (int j = 2; j <= n; ++j) {
    std::vector<double> next;
    next.reserve(j);
    std::vector<double> brackets;
    brackets.push_back(-1.0);
    brackets.insert(brackets.end(), roots.begin(), roots.end());
    brackets.push_back(1.0);
    for (int i = 0; i + 1 < static_cast<int>(brackets.size()); ++i) {
      double lo = brackets[i], hi = brackets[i + 1];
      double flo = jacobi_p(j, alpha, lo);
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = jacobi_p(j, alpha, mid);
        if ((flo <= 0.0) == (fm <= 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      double x = 0.5 * (lo + hi);
      for (int it = 0; it < 4; ++it) {  // Newton polish
        const double dx = jacobi_p(j, alpha, x) / jacobi_dp(j, alpha, x);
        if (std::isfinite(dx)) x -= dx;
      }
      next.push_back(x);
    }
    roots = std::move(next);
  }

  // Map [-1,1] with weight (1+u)^alpha to [0,1] with weight s^alpha. The
  // normalization constants cancel: the mapped weight is
  // 1 / ((1-u^2) P_n'(u)^2).
  QuadratureRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double u = roots[i];
    const double dp = jacobi_dp(n, alpha, u);
    r.nodes[i] = 0.5 * (1.0 + u);
    r.weights[i] = 1.0 / ((1.0 - u * u) * dp * dp);
  }
  std::lock_guard<std::mutex> lk(cache_mu);
  cache.emplace(std::make_pair(n, alpha), r);
  return r;
}

WeightedGrid WeightedGrid::build(const Multiplicity& k, double xmax, GridOptions opt) {
  if (!(xmax > 0.0)) throw std::invalid_argument("WeightedGrid: xmax must be > 0");
  WeightedGrid g;
  g.k_ = k;
  g.xmax_ = xmax;
  g.opt_ = opt;

  const double alpha = 2.0 * k.re();
  const double omega = 2.0 * k.im();
  const double delta = std::min(opt.delta, 0.25 * xmax);
  double wlin = opt.max_panel_width;
  if (opt.max_freq > 0.0) wlin = std::min(wlin, 25.0 / opt.max_freq);

  // positive-side nodes, ascending
  std::vector<WeightedNode> pos;
  const auto push_node = [&](double x, double base_w) {
    WeightedNode nd;
    nd.x = x;
    nd.w_abs = base_w;
    nd.w_k = (omega == 0.0)
                 ? cplx(base_w, 0.0)
                 : base_w * std::exp(cplx(0.0, omega * std::log(x)));
    pos.push_back(nd);
  };

  {
    const QuadratureRule jr = gauss_jacobi01(opt.jacobi_order, alpha);
    const double scale = std::pow(delta, alpha + 1.0);
    for (int i = 0; i < opt.jacobi_order; ++i)
      push_node(delta * jr.nodes[i], scale * jr.weights[i]);
  }

  const QuadratureRule& gl = gauss_legendre(opt.gl_order);
  double a = delta;
  while (a < xmax * (1.0 - 1e-14)) {
    double b = std::min({a * 2.0, a + wlin, xmax});
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < opt.gl_order; ++i) {
      const double x = mid + half * gl.nodes[i];
      push_node(x, half * gl.weights[i] * std::pow(x, alpha));
    }
    a = b;
  }

  std::sort(pos.begin(), pos.end(),
            [](const WeightedNode& u, const WeightedNode& v) { return u.x < v.x; });

  g.nodes_.reserve(2 * pos.size());
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
    WeightedNode nd = *it;
    nd.x = -nd.x;
    g.nodes_.push_back(nd);
  }
  g.nodes_.insert(g.nodes_.end(), pos.begin(), pos.end());
  g.pos_nodes_ = std::move(pos);
  return g;
}

}  // namespace dunkl
