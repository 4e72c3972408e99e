#pragma once

// Two-sided Abel equations with constant coefficients:
//   g1 I_left^t u + g2 I_right^t u = 1           (power solution)
//   D (g1 I_left^t + g2 I_right^t) u = 1          (derivative form)
// and the correction function linking a solution pair (u, v).

#include <cmath>
#include <functional>
#include <string>

#include "fdare/error.hpp"
#include "fdare/fraccalc.hpp"
#include "fdare/quadrature.hpp"
#include "fdare/specfun.hpp"

namespace fdare {

/// The pair (p, q) in (-1,0)^2 with p + q = -t, g1 sin(q pi) = g2 sin(p pi).
struct ExponentPair {
  double p;
  double q;
  double t;
  double gamma1;
  double gamma2;

  double sum_residual() const { return std::fabs(p + q + t); }
  double sine_residual() const {
    return std::fabs(gamma1 * sinpi(q) - gamma2 * sinpi(p));
  }
};

struct AbelConstants {
  double c = 0.0;
  double c1 = 0.0;
  double S = 0.0;
  double S1 = 0.0;
};

inline void check_abel_params(double gamma1, double gamma2, double t) {
  if (!(gamma1 > 0.0) || !(gamma2 > 0.0))
    throw domain_error("abel: coefficients must be positive");
  if (!(t > 0.0 && t < 1.0))
    throw domain_error("abel: order t must lie in (0,1)");
}

inline ExponentPair solve_exponents(double gamma1, double gamma2, double t) {
  check_abel_params(gamma1, gamma2, t);
  // h is strictly decreasing on (-t, 0)
  auto h = [&](double p) { return gamma1 * sinpi(-t - p) - gamma2 * sinpi(p); };
  const double eps = 1e-9;
  double lo = -t + eps * t, hi = -eps * t;
  double flo = h(lo), fhi = h(hi);
  if (!(flo > 0.0 && fhi < 0.0)) {
    // root sits inside the bracketing margin
    lo = -t;
    hi = 0.0;
  }
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi)
      break;
    if (h(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double p = 0.5 * (lo + hi);
  if (gamma1 == gamma2)
    p = -0.5 * t;
  ExponentPair e{p, -t - p, t, gamma1, gamma2};
  if (e.sum_residual() > 1e-12 || e.sine_residual() > 1e-10 * (gamma1 + gamma2))
    throw numeric_error("solve_exponents: residual above tolerance",
                        std::max(e.sum_residual(), e.sine_residual()));
  return e;
}

/// integral over (a,b) of (t-a)^ea (b-t)^eb via Gauss-Jacobi panels
inline double weight_mass_quadrature(double ea, double eb, const Interval& iv) {
  GradedOptions opt;
  opt.nodes = 40;
  return graded_integrate(iv.a, iv.b, EndSpec{ea}, EndSpec{eb}, opt,
                          [](double, double, double) { return 1.0; });
}

inline double weight_mass_exact(double ea, double eb, const Interval& iv) {
  return std::pow(iv.length(), ea + eb + 1.0) * beta_fn(ea + 1.0, eb + 1.0);
}

/// normalizer of the power solution
inline double unit_image_constant(const ExponentPair& e, const Interval& iv) {
  double mq = weight_mass_quadrature(-e.q - 1.0, -e.p - 1.0, iv);
  double mx = weight_mass_exact(-e.q - 1.0, -e.p - 1.0, iv);
  if (std::fabs(mq - mx) > 1e-10 * std::fabs(mx))
    throw numeric_error("abel: mass integral quadrature disagrees with Beta identity",
                        std::fabs(mq - mx));
  return gamma_fn(-e.q) /
         (e.gamma1 * std::pow(iv.length(), 1.0 + e.p + e.q) * gamma_fn(e.p + 1.0) * mq);
}

/// u = c (x-a)^p (b-x)^q solving g1 I_left^t u + g2 I_right^t u = 1
inline PowerWeightedFunction unit_image_solution(double gamma1, double gamma2, double t,
                                             const Interval& iv) {
  ExponentPair e = solve_exponents(gamma1, gamma2, t);
  return PowerWeightedFunction::power(unit_image_constant(e, iv), e.p, e.q, iv);
}

inline double unit_derivative_constant(const ExponentPair& e) {
  const double p = e.p, q = e.q, t = e.t;
  double den = (1.0 - t) * (2.0 - t) * e.gamma2 * gamma_fn(t + p + 1.0) *
               gamma_fn(q + 2.0);
  if (den == 0.0 || !std::isfinite(den))
    throw numeric_error("unit-derivative solution: normalizer has a pole");
  return (-p - t) * (-p - t + 1.0) * gamma_fn(t) / den;
}

struct UnitDerivativeSolution {
  ExponentPair exps;
  double c1;
  /// u = c1 D[(x-a)^(p+1) (b-x)^(q+1)]
  PowerWeightedFunction u;
  /// c1 (x-a)^(p+1) (b-x)^(q+1)
  PowerWeightedFunction antiderivative;
};

inline UnitDerivativeSolution unit_derivative_solution(double gamma1, double gamma2, double t,
                                      const Interval& iv) {
  ExponentPair e = solve_exponents(gamma1, gamma2, t);
  double c1 = unit_derivative_constant(e);
  const double L = iv.length();
  // (p+1)(b-x) - (q+1)(x-a) = (p+1) L - (p+q+2)(x-a)
  PowerWeightedFunction u({c1 * (e.p + 1.0) * L, -c1 * (e.p + e.q + 2.0)}, e.p, e.q, iv);
  auto anti = PowerWeightedFunction::power(c1, e.p + 1.0, e.q + 1.0, iv);
  return {e, c1, u, anti};
}

/// g1 I_left^t f + g2 I_right^t f at x, closed form
inline double two_sided_integral(double gamma1, double gamma2, double t,
                                 const PowerWeightedFunction& f, double x) {
  return gamma1 * PowerIntegral(Side::left, t, f)(x) +
         gamma2 * PowerIntegral(Side::right, t, f)(x);
}

/// D (g1 I_left^t + g2 I_right^t) f at x, closed form
inline double two_sided_integral_derivative(double gamma1, double gamma2, double t,
                                            const PowerWeightedFunction& f, double x) {
  // D I_left^t = I_left^(t-1), D I_right^t = -I_right^(t-1)
  return gamma1 * PowerIntegral(Side::left, t - 1.0, f)(x) -
         gamma2 * PowerIntegral(Side::right, t - 1.0, f)(x);
}

/// Correction function Y for a pair (u, v) with
///   (g1 I_left + g2 I_right) u = f,  (g1 I_left + g2 I_right) v = Df.
class CorrectionFunction {
public:
  /// v_exp_a: algebraic exponent of v at x = a
  CorrectionFunction(std::function<double(double)> v, double v_exp_a,
                     const ExponentPair& e, AbelConstants k, const Interval& iv)
      : v_(std::move(v)), va_(v_exp_a), e_(e), k_(k), iv_(iv) {}

  const AbelConstants& constants() const { return k_; }

  /// integral of v over (a, x)
  double v_integral(double x) const {
    if (x <= iv_.a)
      return 0.0;
    const double db = iv_.b - x;
    const double L = iv_.length();
    return graded_integrate_adaptive(
               iv_.a, x, EndSpec{va_}, EndSpec{0.0, db}, 1e-12,
               [&](double t, double dlo, double) {
                 return v_(t) * std::pow(dlo, -va_);
               },
               0.25 * L)
        .value;
  }

  double operator()(double x) const {
    const double da = x - iv_.a, db = iv_.b - x;
    double r = v_integral(x);
    if (k_.S == 0.0)
      return r;
    double ratio = k_.S / k_.S1;
    // integral of (t-a)^p (b-t)^q over (a,x)
    double w = PowerIntegral(Side::left, 1.0,
                             PowerWeightedFunction::power(1.0, e_.p, e_.q, iv_))
                   .eval_d(da, db);
    double d = ((e_.p + 1.0) * db - (e_.q + 1.0) * da) * std::pow(da, e_.p) *
               std::pow(db, e_.q);
    return r - k_.c * ratio * w + k_.c1 * ratio * d;
  }

private:
  std::function<double(double)> v_;
  double va_;
  ExponentPair e_;
  AbelConstants k_;
  Interval iv_;
};

/// Constants for the correction function; S is the integral of v.
inline AbelConstants correction_constants(const ExponentPair& e, double S,
                                          const Interval& iv) {
  AbelConstants k;
  k.c = unit_image_constant(e, iv);
  k.c1 = unit_derivative_constant(e);
  k.S = S;
  k.S1 = k.c * weight_mass_exact(e.p, e.q, iv);
  if (k.c == 0.0 || k.S1 == 0.0)
    throw numeric_error("correction constants: c or S1 vanished");
  return k;
}

inline CorrectionFunction abel_correction(std::function<double(double)> v,
                                            const ExponentPair& e,
                                            const AbelConstants& k, const Interval& iv,
                                            double v_exp_a = 0.0) {
  return {std::move(v), v_exp_a, e, k, iv};
}

} // namespace fdare
