#pragma once

// Riemann-Liouville fractional integrals and derivatives on a bounded
// interval.  Closed forms act on power-weighted polynomials
//   g(x) (x-a)^ea (b-x)^eb,  g(x) = sum_j c_j (x-a)^j,
// general integrands go through graded Gauss-Jacobi quadrature.

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fdare/error.hpp"
#include "fdare/quadrature.hpp"
#include "fdare/specfun.hpp"

namespace fdare {

struct Interval {
  double a = 0.0;
  double b = 1.0;

  Interval() = default;
  Interval(double a_, double b_) : a(a_), b(b_) {
    if (!(std::isfinite(a) && std::isfinite(b)) || !(a < b))
      throw domain_error("interval: need finite a < b");
  }
  double length() const { return b - a; }
  bool contains(double x) const { return a < x && x < b; }
};

enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

inline constexpr int max_smooth_degree = 64;

/// g(x) (x-a)^exp_a (b-x)^exp_b with g a polynomial in (x-a).
class PowerWeightedFunction {
public:
  PowerWeightedFunction() = default;
  PowerWeightedFunction(std::vector<double> coeffs, double exp_a, double exp_b,
                        Interval iv)
      : c_(std::move(coeffs)), ea_(exp_a), eb_(exp_b), iv_(iv) {
    if (!(ea_ > -1.0) || !(eb_ > -1.0))
      throw domain_error("power-weighted function: endpoint exponents must exceed -1");
    if (c_.empty())
      c_.push_back(0.0);
    if (static_cast<int>(c_.size()) > max_smooth_degree + 1)
      throw domain_error("power-weighted function: degree above 64");
  }

  static PowerWeightedFunction power(double coef, double exp_a, double exp_b,
                                     Interval iv) {
    return PowerWeightedFunction({coef}, exp_a, exp_b, iv);
  }

  const std::vector<double>& coeffs() const { return c_; }
  double exp_a() const { return ea_; }
  double exp_b() const { return eb_; }
  const Interval& interval() const { return iv_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  /// smooth factor g at distance da from a
  double smooth(double da) const {
    double s = 0.0;
    for (int j = degree(); j >= 0; --j)
      s = s * da + c_[j];
    return s;
  }
  double smooth_derivative(double da) const {
    double s = 0.0;
    for (int j = degree(); j >= 1; --j)
      s = s * da + j * c_[j];
    return s;
  }

  /// value from the two endpoint distances
  double eval_d(double da, double db) const {
    return smooth(da) * std::pow(da, ea_) * std::pow(db, eb_);
  }
  double operator()(double x) const { return eval_d(x - iv_.a, iv_.b - x); }

  /// integral over the whole interval, exact via Beta functions
  double integral() const {
    const double L = iv_.length();
    double s = 0.0;
    for (int j = 0; j <= degree(); ++j)
      if (c_[j] != 0.0)
        s += c_[j] * std::pow(L, ea_ + eb_ + j + 1.0) *
             beta_fn(ea_ + j + 1.0, eb_ + 1.0);
    return s;
  }

  PowerWeightedFunction scaled(double k) const {
    auto c = c_;
    for (auto& v : c)
      v *= k;
    return {c, ea_, eb_, iv_};
  }

private:
  std::vector<double> c_{0.0};
  double ea_ = 0.0;
  double eb_ = 0.0;
  Interval iv_{};
};

using PWF = PowerWeightedFunction;

/// Coefficients of g(a+b-x) in powers of (x-a).
inline std::vector<double> reflect_coeffs(const std::vector<double>& c, double L) {
  const int n = static_cast<int>(c.size());
  std::vector<double> out(n, 0.0);
  // (b-x)^j = (L - (x-a))^j
  for (int j = 0; j < n; ++j) {
    if (c[j] == 0.0)
      continue;
    double binom = 1.0;
    for (int k = 0; k <= j; ++k) {
      double sign = (k % 2 == 0) ? 1.0 : -1.0;
      out[k] += c[j] * binom * sign * std::pow(L, j - k);
      binom = binom * (j - k) / (k + 1.0);
    }
  }
  return out;
}

/// (Qf)(x) = f(a+b-x)
inline PowerWeightedFunction reflect(const PowerWeightedFunction& f) {
  return {reflect_coeffs(f.coeffs(), f.interval().length()), f.exp_b(), f.exp_a(),
          f.interval()};
}

/// Smooth factor with endpoint exponents, for integrands that are not
/// polynomial: f(x) = g(x) (x-a)^exp_a (b-x)^exp_b.
struct WeightedCallable {
  std::function<double(double)> g;
  double exp_a = 0.0;
  double exp_b = 0.0;
  Interval iv{};
};

inline WeightedCallable as_callable(const PowerWeightedFunction& f) {
  return {[f](double x) { return f.smooth(x - f.interval().a); }, f.exp_a(),
          f.exp_b(), f.interval()};
}

// ---------------------------------------------------------------------------
// closed forms

/// Closed-form fractional integral (order > 0) or derivative (order < 0,
/// order > -2) of a power-weighted polynomial.  Evaluates
///   I^order [(x-a)^e (b-x)^f]
///     = L^f Gamma(e+1) (x-a)^(e+order) 2F1~(-f, e+1; e+1+order; z)
/// term by term on the left, and the mirrored expression on the right.
class PowerIntegral {
public:
  PowerIntegral(Side side, double order, PowerWeightedFunction term)
      : side_(side), order_(order), f_(std::move(term)) {
    if (!(order_ > -2.0) || !(order_ < 2.0))
      throw domain_error("fractional order must lie in (-2, 2)");
  }

  Side side() const { return side_; }
  double order() const { return order_; }

  double eval_d(double da, double db) const {
    const Interval& iv = f_.interval();
    const double L = iv.length();
    const double z = da / L, w = db / L;
    const auto& c = f_.coeffs();
    double sum = 0.0;
    if (order_ == 0.0)
      return f_.eval_d(da, db);
    if (side_ == Side::left) {
      for (int j = 0; j <= f_.degree(); ++j) {
        if (c[j] == 0.0)
          continue;
        double e = f_.exp_a() + j, f = f_.exp_b();
        double h = hyp2f1_regularized(-f, e + 1.0, e + 1.0 + order_, z, w);
        sum += c[j] * std::pow(L, f) * gamma_fn(e + 1.0) *
               std::pow(da, e + order_) * h;
      }
    } else {
      // monomial (x-a)^(ea+j) plays the role of the far-end factor
      for (int j = 0; j <= f_.degree(); ++j) {
        if (c[j] == 0.0)
          continue;
        double e = f_.exp_a() + j, f = f_.exp_b();
        double h = hyp2f1_regularized(-e, f + 1.0, f + 1.0 + order_, w, z);
        sum += c[j] * std::pow(L, e) * gamma_fn(f + 1.0) *
               std::pow(db, f + order_) * h;
      }
    }
    return sum;
  }

  double operator()(double x) const {
    const Interval& iv = f_.interval();
    if (!(x > iv.a && x < iv.b))
      throw domain_error("fractional operator evaluated outside (a,b)");
    return eval_d(x - iv.a, iv.b - x);
  }

  /// leading exponent of the result at the near endpoint of the operator
  double near_exponent() const {
    return side_ == Side::left ? f_.exp_a() + order_ : f_.exp_b() + order_;
  }

private:
  Side side_;
  double order_;
  PowerWeightedFunction f_;
};

inline PowerIntegral rl_integral_power(Side side, double sigma,
                                       const PowerWeightedFunction& term) {
  if (!(sigma > 0.0))
    throw domain_error("rl_integral_power: order must be positive");
  return {side, sigma, term};
}

// ---------------------------------------------------------------------------
// quadrature

/// (1/Gamma(sigma)) * integral of the weakly singular kernel against f.
inline QuadEstimate rl_integral_numeric_estimate(Side side, double sigma,
                                                 const WeightedCallable& f,
                                                 double x, double tol = 1e-12) {
  const Interval& iv = f.iv;
  if (!(sigma > 0.0))
    throw domain_error("rl_integral_numeric: order must be positive");
  if (!iv.contains(x))
    throw domain_error("rl_integral_numeric: x must lie in (a,b)");
  if (!(f.exp_a > -1.0) || !(f.exp_b > -1.0))
    throw domain_error("rl_integral_numeric: integrand not integrable");
  const double da = x - iv.a, db = iv.b - x;
  const double L = iv.length();
  QuadEstimate r;
  if (side == Side::left) {
    // t in (a, x): weight (t-a)^ea at lo, kernel (x-t)^(sigma-1) at hi;
    // (b-t)^eb is singular at distance db beyond hi
    r = graded_integrate_adaptive(
        iv.a, x, EndSpec{f.exp_a}, EndSpec{sigma - 1.0, db}, tol,
        [&](double t, double dlo, double dhi) {
          return f.g(t) * std::pow(db + dhi, f.exp_b);
        },
        0.25 * L);
  } else {
    r = graded_integrate_adaptive(
        x, iv.b, EndSpec{sigma - 1.0, da}, EndSpec{f.exp_b}, tol,
        [&](double t, double dlo, double dhi) {
          return f.g(t) * std::pow(da + dlo, f.exp_a);
        },
        0.25 * L);
  }
  double rg = rgamma(sigma);
  return {r.value * rg, r.error * rg};
}

inline double rl_integral_numeric(Side side, double sigma, const WeightedCallable& f,
                                  double x) {
  return rl_integral_numeric_estimate(side, sigma, f, x).value;
}

inline double rl_integral_numeric(Side side, double sigma,
                                  const PowerWeightedFunction& f, double x) {
  return rl_integral_numeric(side, sigma, as_callable(f), x);
}

// ---------------------------------------------------------------------------
// derivatives

/// D^sigma f for sigma in (0,2), exact term-wise on the closed form.
inline double rl_derivative(Side side, double sigma, const PowerWeightedFunction& f,
                            double x) {
  if (!(sigma > 0.0 && sigma < 2.0))
    throw domain_error("rl_derivative: order must lie in (0,2)");
  const Interval& iv = f.interval();
  if (!iv.contains(x))
    throw domain_error("rl_derivative: x must lie in (a,b)");
  const double da = x - iv.a, db = iv.b - x;
  const double guard = 1e-9 * iv.length();
  double near = side == Side::left ? da : db;
  double near_exp = side == Side::left ? f.exp_a() : f.exp_b();
  if (near < guard && near_exp - sigma < 0.0)
    throw domain_error("rl_derivative: derivative blows up at the endpoint");
  return PowerIntegral(side, -sigma, f).eval_d(da, db);
}

/// D^sigma of a general weighted integrand: D^n I^(n-sigma) with central
/// differences of step 1e-5 (b-a).
inline double rl_derivative_numeric(Side side, double sigma, const WeightedCallable& f,
                                    double x) {
  if (!(sigma > 0.0 && sigma < 2.0))
    throw domain_error("rl_derivative: order must lie in (0,2)");
  const Interval& iv = f.iv;
  const double h = 1e-5 * iv.length();
  if (!(x - 2 * h > iv.a && x + 2 * h < iv.b))
    throw domain_error("rl_derivative: too close to the endpoint for differencing");
  const int n = sigma < 1.0 ? 1 : 2;
  const double nu = n - sigma;
  auto I = [&](double y) {
    if (nu == 0.0)
      return f.g(y) * std::pow(y - iv.a, f.exp_a) * std::pow(iv.b - y, f.exp_b);
    return rl_integral_numeric(side, nu, f, y);
  };
  double sgn = (side == Side::right && n == 1) ? -1.0 : 1.0;
  if (n == 1)
    return sgn * (I(x + h) - I(x - h)) / (2 * h);
  return (I(x + h) - 2.0 * I(x) + I(x - h)) / (h * h);
}

/// Limit of a power-weighted function at an endpoint.
struct EndpointValue {
  double value;   // 0, finite, or +-inf
  double exponent;
  bool blows_up;
};

inline EndpointValue endpoint_limit(const PowerWeightedFunction& f, Side end) {
  const double L = f.interval().length();
  double e = end == Side::left ? f.exp_a() : f.exp_b();
  double g = end == Side::left ? f.smooth(0.0) : f.smooth(L);
  double far = end == Side::left ? std::pow(L, f.exp_b()) : std::pow(L, f.exp_a());
  if (g == 0.0 || e > 0.0)
    return {0.0, e, false};
  if (e == 0.0)
    return {g * far, e, false};
  return {std::copysign(std::numeric_limits<double>::infinity(), g), e, true};
}

} // namespace fdare
