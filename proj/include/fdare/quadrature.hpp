#pragma once

// Quadrature engines for weakly singular integrands.
//
// Integrands are passed the node together with its distances to both ends
// of the integration interval; callers use those distances instead of
// t - lo / hi - t so that factors like (t - a)^e stay accurate right next to
// an endpoint.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "fdare/error.hpp"
#include "fdare/specfun.hpp"

namespace fdare {

struct QuadRule {
  std::vector<double> x; // nodes in (-1, 1)
  std::vector<double> w;
  std::vector<double> xp; // 1 + x
  std::vector<double> xm; // 1 - x
};

namespace detail {

inline QuadRule build_gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1)
    throw domain_error("gauss_jacobi: need at least one node");
  if (alpha <= -1.0 || beta <= -1.0)
    throw domain_error("gauss_jacobi: exponents must exceed -1");
  // Golub-Welsch on the symmetric Jacobi matrix
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  const double ab = alpha + beta;
  for (int k = 0; k < n; ++k) {
    double diag;
    if (k == 0)
      diag = (beta - alpha) / (ab + 2.0);
    else
      diag = (beta * beta - alpha * alpha) /
             ((2.0 * k + ab) * (2.0 * k + ab + 2.0));
    J(k, k) = diag;
    if (k + 1 < n) {
      double m = k + 1.0;
      double bk;
      if (k == 0)
        bk = 4.0 * (1.0 + alpha) * (1.0 + beta) /
             ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
      else
        bk = 4.0 * m * (m + alpha) * (m + beta) * (m + ab) /
             ((2.0 * m + ab) * (2.0 * m + ab) * (2.0 * m + ab + 1.0) *
              (2.0 * m + ab - 1.0));
      J(k, k + 1) = J(k + 1, k) = std::sqrt(bk);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success)
    throw numeric_error("gauss_jacobi: eigenvalue solve failed");
  const double mu0 = std::pow(2.0, ab + 1.0) * gamma_fn(alpha + 1.0) *
                     gamma_fn(beta + 1.0) * rgamma(ab + 2.0);
  QuadRule r;
  r.x.resize(n);
  r.w.resize(n);
  r.xp.resize(n);
  r.xm.resize(n);
  for (int k = 0; k < n; ++k) {
    double v = es.eigenvectors()(0, k);
    r.x[k] = es.eigenvalues()(k);
    r.w[k] = mu0 * v * v;
  }
  for (int k = 0; k < n; ++k) {
    r.xp[k] = 1.0 + r.x[k];
    r.xm[k] = 1.0 - r.x[k];
  }
  return r;
}

} // namespace detail

/// Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on [-1,1].
inline const QuadRule& gauss_jacobi(int n, double alpha, double beta) {
  static std::mutex mtx;
  static std::map<std::tuple<int, double, double>, QuadRule> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_tuple(n, alpha, beta);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, detail::build_gauss_jacobi(n, alpha, beta)).first;
  return it->second;
}

inline const QuadRule& gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

/// Known algebraic behaviour at one end of the integration interval.
struct EndSpec {
  double exponent = 0.0; // integrand ~ (distance)^exponent
  /// size of the innermost panel; a singular point just outside the interval
  /// at distance d calls for grade_to ~ d.  Infinity: no grading.
  double grade_to = std::numeric_limits<double>::infinity();
};

struct GradedOptions {
  int nodes = 20;
  double max_panel = std::numeric_limits<double>::infinity(); // absolute
};

/// Visits every node of a graded composite Gauss rule on [lo, hi].
/// visit(t, dlo, dhi, w) receives weights that already include
/// dlo^left.exponent * dhi^right.exponent.
template <class Visit>
void graded_nodes(double lo, double hi, EndSpec left, EndSpec right,
                  const GradedOptions& opt, Visit&& visit) {
  const double L = hi - lo;
  if (!(L > 0.0))
    return;
  const double half = 0.5 * L;
  const double floor = 1e-30 * L;
  const QuadRule& gl = gauss_legendre(opt.nodes);

  auto one_side = [&](const EndSpec& near, const EndSpec& far, bool from_lo) {
    const double e = near.exponent;
    const double ef = far.exponent;
    double delta = std::min(half, std::max(near.grade_to, floor));
    delta = std::min(delta, opt.max_panel);
    auto emit = [&](double dd, double w) {
      double other = L - dd;
      if (from_lo)
        visit(lo + dd, dd, other, w);
      else
        visit(hi - dd, other, dd, w);
    };
    // innermost panel carries the endpoint exponent in its weight
    {
      const QuadRule& gj = gauss_jacobi(opt.nodes, 0.0, e);
      double scale = std::pow(0.5 * delta, 1.0 + e);
      for (std::size_t k = 0; k < gj.x.size(); ++k) {
        double dd = 0.5 * delta * gj.xp[k];
        emit(dd, scale * gj.w[k] * std::pow(L - dd, ef));
      }
    }
    double d = delta;
    while (d < half * (1.0 - 1e-15)) {
      double next = std::min({4.0 * d, half, d + opt.max_panel});
      if (half - next < 0.25 * (next - d))
        next = std::min(half, d + opt.max_panel);
      double hw = 0.5 * (next - d);
      for (std::size_t k = 0; k < gl.x.size(); ++k) {
        double dd = d + hw * gl.xp[k];
        emit(dd, hw * gl.w[k] * std::pow(dd, e) * std::pow(L - dd, ef));
      }
      d = next;
    }
  };
  one_side(left, right, true);
  one_side(right, left, false);
}

/// Integral of f(t, dlo, dhi) * dlo^left.exponent * dhi^right.exponent.
template <class F>
double graded_integrate(double lo, double hi, EndSpec left, EndSpec right,
                        const GradedOptions& opt, F&& f) {
  double sum = 0.0;
  graded_nodes(lo, hi, left, right, opt,
               [&](double t, double dlo, double dhi, double w) {
                 sum += w * f(t, dlo, dhi);
               });
  return sum;
}

struct QuadEstimate {
  double value;
  double error;
};

/// Doubles the per-panel node count from 32 until two estimates agree.
template <class F>
QuadEstimate graded_integrate_adaptive(double lo, double hi, EndSpec left,
                                       EndSpec right, double tol, F&& f,
                                       double max_panel =
                                           std::numeric_limits<double>::infinity()) {
  GradedOptions opt;
  opt.max_panel = max_panel;
  opt.nodes = 16;
  double prev = graded_integrate(lo, hi, left, right, opt, f);
  double err = std::numeric_limits<double>::infinity();
  for (int n = 32; n <= 128; n *= 2) {
    opt.nodes = n;
    double cur = graded_integrate(lo, hi, left, right, opt, f);
    err = std::fabs(cur - prev);
    if (err <= tol * std::max(1.0, std::fabs(cur)))
      return {cur, err};
    prev = cur;
  }
  throw numeric_error("graded quadrature did not converge", err);
}

/// Tanh-sinh rule on [lo, hi] for integrands with unknown endpoint
/// behaviour; f(t, dlo, dhi).
template <class F>
QuadEstimate tanh_sinh(double lo, double hi, F&& f, double tol = 1e-12,
                       int max_level = 9) {
  const double L = hi - lo;
  if (!(L > 0.0))
    return {0.0, 0.0};
  const double hpi = 0.5 * pi;
  auto node = [&](double u, double& sum) {
    double s = hpi * std::sinh(u);
    double e2 = std::exp(2.0 * std::fabs(s));
    if (!std::isfinite(e2))
      return false;
    double dfar = L / (e2 + 1.0); // distance to the nearer end
    if (dfar <= 0.0)
      return false;
    double ch = std::cosh(s);
    double w = 0.5 * L * hpi * std::cosh(u) / (ch * ch);
    double dlo = s < 0 ? dfar : L - dfar;
    double dhi = s < 0 ? L - dfar : dfar;
    double t = s < 0 ? lo + dlo : hi - dhi;
    double v = f(t, dlo, dhi);
    if (std::isfinite(v))
      sum += w * v;
    return w * std::fabs(v) > 1e-300 || u < 1.0;
  };
  const double umax = 6.5;
  double h = 0.5;
  double sum = 0.0;
  node(0.0, sum);
  for (double u = h; u <= umax; u += h) {
    bool a = node(u, sum);
    bool b = node(-u, sum);
    if (!a && !b && u > 3.0)
      break;
  }
  double est = h * sum;
  double err = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    for (double u = h; u <= umax; u += 2.0 * h) {
      bool a = node(u, sum);
      bool b = node(-u, sum);
      if (!a && !b && u > 3.0)
        break;
    }
    double next = h * sum;
    err = std::fabs(next - est);
    est = next;
    if (level >= 3 && err <= tol * std::max(1.0, std::fabs(est)))
      return {est, err};
  }
  return {est, err};
}

} // namespace fdare
