#pragma once

// Endpoint-exponent fitting and the regularity, sharpness and boundary
// checks built on it.

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "fdare/abel.hpp"
#include "fdare/error.hpp"
#include "fdare/fraccalc.hpp"
#include "fdare/quadrature.hpp"
#include "fdare/solver.hpp"
#include "fdare/specfun.hpp"

namespace fdare {

struct ExponentFit {
  Side endpoint = Side::left;
  double estimate = 0.0;
  double stderr_ = 0.0;
  double window_lo = 0.0; // distances from the endpoint
  double window_hi = 0.0;
  int points = 0;
};

enum class ValueClass { vanishes, finite_nonzero, blows_up };

inline const char* to_string(ValueClass v) {
  switch (v) {
  case ValueClass::vanishes: return "vanishes";
  case ValueClass::finite_nonzero: return "finite-nonzero";
  default: return "blows-up";
  }
}

struct EndpointBehavior {
  ValueClass value_class = ValueClass::finite_nonzero;
  double fitted_exponent = 0.0;
  double stderr_ = 0.0;
};

struct FitOptions {
  int points = 24;
  double lo = 1e-6; // fractions of b - a
  double hi = 1e-2;
};

/// Least-squares slope of log|u| against log(distance).  u_d receives the
/// distances of the sample point to a and to b.
inline ExponentFit fit_boundary_exponent(const std::function<double(double, double)>& u_d,
                                         Side end, const Interval& iv,
                                         const FitOptions& opt = {}) {
  if (opt.points < 3 || !(opt.lo > 0.0) || !(opt.hi > opt.lo) || !(opt.hi < 0.25))
    throw domain_error("fit_boundary_exponent: bad window");
  const double L = iv.length();
  std::vector<double> lx, ly;
  for (int i = 0; i < opt.points; ++i) {
    double frac = opt.lo * std::pow(opt.hi / opt.lo, i / (opt.points - 1.0));
    double d = frac * L;
    double v = end == Side::left ? u_d(d, L - d) : u_d(L - d, d);
    if (!std::isfinite(v))
      throw numeric_error("fit_boundary_exponent: non-finite sample");
    if (v == 0.0)
      continue;
    lx.push_back(std::log(d));
    ly.push_back(std::log(std::fabs(v)));
  }
  const int n = static_cast<int>(lx.size());
  if (n < 3)
    throw numeric_error("fit_boundary_exponent: function vanishes on the window");
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  double slope = sxy / sxx;
  double ssr = 0.0;
  for (int i = 0; i < n; ++i) {
    double r = ly[i] - my - slope * (lx[i] - mx);
    ssr += r * r;
  }
  ExponentFit f;
  f.endpoint = end;
  f.estimate = slope;
  f.stderr_ = std::sqrt(ssr / (n - 2) / sxx);
  f.window_lo = opt.lo * L;
  f.window_hi = opt.hi * L;
  f.points = n;
  return f;
}

inline ExponentFit fit_boundary_exponent(const std::function<double(double)>& u, Side end,
                                         const Interval& iv, const FitOptions& opt = {}) {
  return fit_boundary_exponent(
      [&](double da, double db) { return u(da <= db ? iv.a + da : iv.b - db); }, end, iv,
      opt);
}

/// Exponents within max(3 stderr, 1e-9) of zero count as finite.
inline EndpointBehavior classify(double exponent, double stderr_ = 0.0) {
  EndpointBehavior b;
  b.fitted_exponent = exponent;
  b.stderr_ = stderr_;
  double band = std::max(3.0 * stderr_, 1e-9);
  if (std::fabs(exponent) <= band)
    b.value_class = ValueClass::finite_nonzero;
  else
    b.value_class = exponent > 0.0 ? ValueClass::vanishes : ValueClass::blows_up;
  return b;
}

inline EndpointBehavior classify(const ExponentFit& f) { return classify(f.estimate, f.stderr_); }

// ---------------------------------------------------------------------------

struct RepresentationReport {
  double t = 0.0;
  double exp_a = 0.0; // endpoint exponents of J_t = aD^t u
  double exp_b = 0.0;
  bool exact = false; // closed-form exponents rather than fitted
  bool in_Hstar = false;
};

inline void check_representation_order(double mu, double t) {
  if (!(t >= 0.0 && t < 2.0))
    throw domain_error("verify_representation: t must lie in [0, 2)");
  if (std::fabs(t - (1.0 + mu)) < 1e-6)
    throw domain_error("verify_representation: t too close to 1 + mu");
}

/// Exact endpoint exponents of aD^t applied to a power-weighted function.
inline std::array<double, 2> left_derivative_exponents(const PowerWeightedFunction& u, double t) {
  int j0 = 0;
  while (j0 <= u.degree() && u.coeffs()[j0] == 0.0)
    ++j0;
  if (j0 > u.degree())
    throw domain_error("left_derivative_exponents: zero function");
  double e = u.exp_a() + j0;
  // leading coefficient carries 1/Gamma(e+1-t)
  while (rgamma(e + 1.0 - t) == 0.0)
    e += 1.0;
  const double f = u.exp_b();
  double eb = std::numeric_limits<double>::infinity();
  if (rgamma(-t) != 0.0)
    eb = 0.0; // regular part of the hypergeometric factor at z = 1
  if (rgamma(-f) != 0.0)
    eb = std::min(eb, f - t);
  if (!std::isfinite(eb))
    eb = 0.0;
  return {e - t, eb};
}

/// u = aD^-t J_t with J_t of the closed-form solution u
inline RepresentationReport verify_representation(const PowerWeightedFunction& u, double mu,
                                                  double t) {
  check_representation_order(mu, t);
  auto e = left_derivative_exponents(u, t);
  RepresentationReport r;
  r.t = t;
  r.exp_a = e[0];
  r.exp_b = e[1];
  r.exact = true;
  r.in_Hstar = e[0] > -1.0 && e[1] > -1.0;
  return r;
}

/// same for a Galerkin solution, exponents fitted from J_t
inline RepresentationReport verify_representation(const GalerkinSolution& u, double t,
                                                  const FitOptions& opt = {}) {
  check_representation_order(u.problem().mu, t);
  const Interval& iv = u.problem().interval;
  auto J = [&](double da, double db) { return u.left_derivative_d(t, da, db); };
  auto fa = fit_boundary_exponent(J, Side::left, iv, opt);
  auto fb = fit_boundary_exponent(J, Side::right, iv, opt);
  RepresentationReport r;
  r.t = t;
  r.exp_a = fa.estimate;
  r.exp_b = fb.estimate;
  r.in_Hstar = r.exp_a > -1.0 && r.exp_b > -1.0;
  return r;
}

// ---------------------------------------------------------------------------

struct DivergenceTest {
  std::vector<double> deltas;
  std::vector<double> truncated; // integral of |aD^t u| over (a + delta, (a+b)/2)
  std::vector<double> ratios;    // successive per-decade increment ratios
  bool diverges = false;
};

/// Does the integral of |aD^t u| near x = a diverge?  Truncation at
/// delta = 1e-2 .. 1e-8 of (b - a).
inline DivergenceTest divergence_test(const PowerWeightedFunction& u, double t) {
  const Interval& iv = u.interval();
  PowerIntegral Dt(Side::left, -t, u);
  const double L = iv.length();
  GradedOptions opt;
  opt.nodes = 24;
  DivergenceTest r;
  for (double d = 1e-2; d >= 1e-8 * (1.0 - 1e-9); d *= 0.1) {
    double delta = d * L;
    double v = graded_integrate(iv.a + delta, iv.a + 0.5 * L, EndSpec{0.0, delta},
                                EndSpec{0.0}, opt, [&](double, double dlo, double dhi) {
                                  return std::fabs(Dt.eval_d(delta + dlo, 0.5 * L + dhi));
                                });
    r.deltas.push_back(delta);
    r.truncated.push_back(v);
  }
  // Per-decade increments shrink geometrically when the integral converges
  // and stay level or grow when it diverges; judge on the deepest three,
  // where lower-order terms have died out.
  bool grows = true;
  for (std::size_t i = 2; i < r.truncated.size(); ++i) {
    double inc = r.truncated[i] - r.truncated[i - 1];
    double prev = r.truncated[i - 1] - r.truncated[i - 2];
    r.ratios.push_back(inc / prev);
    if (r.deltas[i - 2] < 1.001e-4 * L)
      grows = grows && inc > 0.0 && inc >= prev * (1.0 - 1e-9);
  }
  r.diverges = grows;
  return r;
}

struct CounterexampleReport {
  double mu = 0.0;
  double t = 0.0;
  double t0 = 0.0;
  double threshold = 0.0;
  double beta_over_alpha = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double p = 0.0;
  double q = 0.0;
  double p_exponent = 0.0; // p + 1 - t
  std::vector<double> deltas;
  std::vector<double> truncated; // integral of |aD^t u| over (a + delta, (a+b)/2)
  std::vector<double> ratios; // successive per-decade increment ratios
  bool diverges = false;
  PowerWeightedFunction solution{{1.0}, 0.0, 0.0, Interval{0.0, 1.0}};
};

inline double counterexample_threshold(double mu, double t0) {
  return std::cos((2.0 - t0) * pi) / std::sin((2.0 - t0) * pi) * sinpi(1.0 - mu) -
         cospi(1.0 - mu);
}

/// Skewed constant-coefficient problem whose solution has no representation
/// u = aD^-t J with integrable J once t > 1 + mu.
inline CounterexampleReport counterexample_check(double mu, double t,
                                                 const Interval& iv = Interval{0.0, 1.0}) {
  if (!(mu > 0.0 && mu < 1.0))
    throw domain_error("mu must lie in (0,1)");
  if (!(t > 1.0 + mu && t < 2.0))
    throw domain_error("counterexample_check: need 1 + mu < t < 2");
  CounterexampleReport r;
  r.mu = mu;
  r.t = t;
  r.t0 = 0.5 * (1.0 + mu + std::min(2.0, t));
  r.threshold = counterexample_threshold(mu, r.t0);
  if (!(r.threshold > 0.0))
    throw numeric_error("counterexample_check: no admissible skew (threshold <= 0)",
                        r.threshold);
  r.beta_over_alpha = 0.5 * r.threshold;
  r.alpha = 1.0 / (1.0 + r.beta_over_alpha);
  r.beta = r.beta_over_alpha * r.alpha;
  auto sol = unit_derivative_solution(r.alpha, r.beta, 1.0 - mu, iv);
  r.p = sol.exps.p;
  r.q = sol.exps.q;
  r.p_exponent = r.p + 1.0 - t;
  r.solution = sol.antiderivative;

  auto d = divergence_test(sol.antiderivative, t);
  r.deltas = d.deltas;
  r.truncated = d.truncated;
  r.ratios = d.ratios;
  r.diverges = d.diverges;
  return r;
}

// ---------------------------------------------------------------------------

struct BoundaryVanishingReport {
  EndpointBehavior dmu_left;  // aD^mu u at x = a
  EndpointBehavior dmu_right; // xD^mu u at x = b
  EndpointBehavior du_left;
  EndpointBehavior du_right;
  bool pass = false;
};

inline bool boundary_vanishing_applies(const ProblemSpec& pb) {
  return pb.mu > 0.5 || pb.adv.is_zero();
}

inline BoundaryVanishingReport finish(BoundaryVanishingReport r) {
  auto allowed = [](const EndpointBehavior& b) {
    return b.value_class != ValueClass::finite_nonzero;
  };
  r.pass = r.dmu_left.value_class == ValueClass::vanishes &&
           r.dmu_right.value_class == ValueClass::vanishes && allowed(r.du_left) &&
           allowed(r.du_right);
  return r;
}

inline BoundaryVanishingReport boundary_vanishing_check(const GalerkinSolution& u, const FitOptions& opt = {}) {
  const ProblemSpec& pb = u.problem();
  if (!boundary_vanishing_applies(pb))
    throw condition_error("boundary behaviour: needs 1/2 < mu < 1 or zero advection",
                          "boundary_vanishing_check: conditions not met");
  const Interval& iv = pb.interval;
  BoundaryVanishingReport r;
  r.dmu_left = classify(fit_boundary_exponent(
      [&](double da, double db) { return u.left_dmu_d(da, db); }, Side::left, iv, opt));
  r.dmu_right = classify(fit_boundary_exponent(
      [&](double da, double db) { return u.right_dmu_d(da, db); }, Side::right, iv, opt));
  auto du = [&](double da, double db) { return u.du_d(da, db); };
  r.du_left = classify(fit_boundary_exponent(du, Side::left, iv, opt));
  r.du_right = classify(fit_boundary_exponent(du, Side::right, iv, opt));
  return finish(r);
}

/// exact exponents for a closed-form solution
inline BoundaryVanishingReport boundary_vanishing_check(const PowerWeightedFunction& u, double mu) {
  BoundaryVanishingReport r;
  auto dl = left_derivative_exponents(u, mu);
  auto dr = left_derivative_exponents(reflect(u), mu);
  auto d1 = left_derivative_exponents(u, 1.0);
  auto d1r = left_derivative_exponents(reflect(u), 1.0);
  r.dmu_left = classify(dl[0]);
  r.dmu_right = classify(dr[0]);
  r.du_left = classify(d1[0]);
  r.du_right = classify(d1r[0]);
  return finish(r);
}

} // namespace fdare
