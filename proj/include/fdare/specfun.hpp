#pragma once

// Gamma, digamma, Pochhammer and the Gauss hypergeometric function 2F1
// on the real line.

#include <cmath>
#include <limits>
#include <numbers>

#include "fdare/error.hpp"

namespace fdare {

inline constexpr double pi = std::numbers::pi;

inline bool is_nonpositive_integer(double v, double tol = 0.0) {
  return v <= tol && std::fabs(v - std::nearbyint(v)) <= tol;
}

/// sin(pi x) with exact zeros at the integers
inline double sinpi(double x) {
  if (x == std::nearbyint(x))
    return 0.0;
  double r = std::remainder(x, 2.0);
  if (r > 0.5)
    r = 1.0 - r;
  else if (r < -0.5)
    r = -1.0 - r;
  return std::sin(pi * r);
}

inline double cospi(double x) {
  double r = std::remainder(std::fabs(x), 2.0);
  if (r < 0) r = -r;
  if (r == 0.5) return 0.0;
  if (r > 0.5) return -sinpi(r - 0.5);
  return sinpi(0.5 - r);
}

namespace detail {

// Godfrey's 15-term Lanczos set, g = 607/128.
inline double lanczos_gamma(double x) {
  static constexpr double g = 607.0 / 128.0;
  static constexpr double c[15] = {
      0.99999999999999709182,     57.156235665862923517,
      -59.597960355475491248,     14.136097974741747174,
      -0.49191381609762019978,    0.33994649984811888699e-4,
      0.46523628927048575665e-4,  -0.98374475304879564677e-4,
      0.15808870322491248884e-3,  -0.21026444172410488319e-3,
      0.21743961811521264320e-3,  -0.16431810653676389022e-3,
      0.84418223983852743293e-4,  -0.26190838401581408670e-4,
      0.36899182659531622704e-5};
  double y = x - 1.0;
  double s = c[0];
  for (int i = 1; i < 15; ++i)
    s += c[i] / (y + i);
  double t = y + g + 0.5;
  // split the power so that t^(y+0.5) does not overflow near x = 171
  double h = std::pow(t, 0.5 * (y + 0.5));
  return std::sqrt(2.0 * pi) * h * (h * std::exp(-t)) * s;
}

} // namespace detail

/// Gamma function; throws at the poles.
inline double gamma_fn(double x) {
  if (std::isnan(x))
    return x;
  if (is_nonpositive_integer(x))
    throw domain_error("gamma_fn: pole at non-positive integer");
  if (x < 0.5)
    return pi / (sinpi(x) * detail::lanczos_gamma(1.0 - x));
  if (x > 171.7)
    return std::numeric_limits<double>::infinity();
  return detail::lanczos_gamma(x);
}

/// 1/Gamma(x), zero at the poles.
inline double rgamma(double x) {
  if (is_nonpositive_integer(x))
    return 0.0;
  if (x < 0.5)
    return sinpi(x) * detail::lanczos_gamma(1.0 - x) / pi;
  if (x > 171.7)
    return 0.0;
  return 1.0 / detail::lanczos_gamma(x);
}

inline double beta_fn(double x, double y) {
  return gamma_fn(x) * gamma_fn(y) * rgamma(x + y);
}

/// (z)_n = z(z+1)...(z+n-1)
inline double pochhammer(double z, unsigned n) {
  double r = 1.0;
  for (unsigned k = 0; k < n; ++k)
    r *= z + k;
  return r;
}

inline double digamma(double x) {
  if (is_nonpositive_integer(x))
    throw domain_error("digamma: pole at non-positive integer");
  double r = 0.0;
  if (x < 0.0) {
    // psi(x) = psi(1-x) - pi cot(pi x)
    r = -pi * cospi(x) / sinpi(x);
    x = 1.0 - x;
  }
  while (x < 10.0) {
    r -= 1.0 / x;
    x += 1.0;
  }
  double x2 = 1.0 / (x * x);
  double tail =
      x2 * (1.0 / 12 -
            x2 * (1.0 / 120 -
                  x2 * (1.0 / 252 -
                        x2 * (1.0 / 240 -
                              x2 * (1.0 / 132 - x2 * (691.0 / 32760 - x2 / 12))))));
  return r + std::log(x) - 0.5 / x - tail;
}

struct HypParams {
  double sigma1;
  double sigma2;
  double sigma3;
  double x;
};

namespace detail {

inline constexpr int hyp_max_terms = 10000;

// Plain Gauss series; stops after three consecutive negligible terms.
inline double hyp_series(double a, double b, double c, double x,
                         int cap = hyp_max_terms) {
  double term = 1.0, sum = 1.0;
  int small = 0;
  for (int n = 0; n < cap; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
    sum += term;
    if (term == 0.0)
      return sum;
    if (std::fabs(term) <= 1e-16 * std::fabs(sum)) {
      if (++small == 3)
        return sum;
    } else {
      small = 0;
    }
  }
  throw numeric_error("hyp2f1: series did not converge", std::fabs(term));
}

// Terminating case: a or b is a non-positive integer.
inline double hyp_polynomial(double a, double b, double c, double x) {
  double top = 0.0;
  if (is_nonpositive_integer(a)) top = a;
  if (is_nonpositive_integer(b) && (top == 0.0 || b > top)) top = b;
  int n = static_cast<int>(-std::nearbyint(top));
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
  }
  return sum;
}

// c = a + b + m with integer m >= 0, argument x = 1 - w, 0 < w <= 1/2.
inline double hyp_log_case(double a, double b, int m, double w) {
  double lw = std::log(w);
  double c = a + b + m;
  double finite = 0.0;
  if (m > 0) {
    double term = 1.0;
    for (int n = 0; n < m; ++n) {
      finite += term;
      term *= (a + n) * (b + n) / ((n + 1.0) * (1.0 - m + n)) * w;
    }
    finite *= gamma_fn(m) * gamma_fn(c) * rgamma(a + m) * rgamma(b + m);
  }
  double pref = gamma_fn(c) * rgamma(a) * rgamma(b);
  if (pref == 0.0)
    return finite;
  double psi1 = digamma(1.0);            // psi(n+1)
  double psi2 = digamma(m + 1.0);        // psi(n+m+1)
  double psia = digamma(a + m);          // psi(a+n+m)
  double psib = digamma(b + m);          // psi(b+n+m)
  double coef = 1.0;                      // (a+m)_n (b+m)_n / (n! (n+m)!)
  for (int k = 1; k <= m; ++k)
    coef /= k;
  double sum = 0.0;
  int small = 0;
  for (int n = 0; n < hyp_max_terms; ++n) {
    double t = coef * (lw - psi1 - psi2 + psia + psib);
    sum += t;
    if (std::fabs(t) <= 1e-16 * std::fabs(sum) || coef == 0.0) {
      if (++small == 3 || coef == 0.0)
        break;
    } else {
      small = 0;
    }
    coef *= (a + m + n) * (b + m + n) / ((n + 1.0) * (n + m + 1.0)) * w;
    psi1 += 1.0 / (n + 1.0);
    psi2 += 1.0 / (n + m + 1.0);
    psia += 1.0 / (a + m + n);
    psib += 1.0 / (b + m + n);
  }
  double sign = (m % 2 == 0) ? 1.0 : -1.0;
  if (m == 0)
    return -pref * sum;
  return finite - sign * std::pow(w, m) * pref * sum;
}

// Connection formula x -> 1-x for non-integer d = c-a-b.
inline double hyp_connection(double a, double b, double c, double w) {
  double d = c - a - b;
  double gc = gamma_fn(c);
  double A = gc * gamma_fn(d) * rgamma(c - a) * rgamma(c - b);
  double B = gc * gamma_fn(-d) * rgamma(a) * rgamma(b);
  double r = 0.0;
  if (A != 0.0)
    r += A * hyp_series(a, b, 1.0 - d, w);
  if (B != 0.0)
    r += B * std::pow(w, d) * hyp_series(c - a, c - b, 1.0 + d, w);
  return r;
}

inline double hyp_integer_d(double a, double b, double c, int m, double x,
                            double w) {
  if (m >= 0)
    return hyp_log_case(a, b, m, w);
  // Euler transform flips the sign of c-a-b
  (void)x;
  return std::pow(w, static_cast<double>(m)) *
         hyp_log_case(c - a, c - b, -m, w);
}

inline double hyp_near_one(double a, double b, double c, double x, double w) {
  double d = c - a - b;
  double m = std::nearbyint(d);
  double off = d - m;
  if (std::fabs(off) <= 1e-12 * std::max(1.0, std::fabs(d)))
    return hyp_integer_d(a, b, c, static_cast<int>(m), x, w);
  if (std::fabs(off) < 1e-4) {
    // quadratic interpolation in c through d = m-h, m, m+h
    const double h = 1e-3;
    double fm = hyp_connection(a, b, a + b + m - h, w);
    double f0 = hyp_integer_d(a, b, a + b + m, static_cast<int>(m), x, w);
    double fp = hyp_connection(a, b, a + b + m + h, w);
    double s = off / h;
    return f0 + 0.5 * s * (fp - fm) + 0.5 * s * s * (fp - 2.0 * f0 + fm);
  }
  return hyp_connection(a, b, c, w);
}

// x + w = 1, with w supplied separately so callers near x = 1 keep accuracy.
inline double hyp2f1_xw(double a, double b, double c, double x, double w) {
  if (is_nonpositive_integer(c, 1e-13))
    throw domain_error("hyp2f1: sigma3 is a non-positive integer");
  if (!(x <= 1.0) || !(w > 0.0))
    throw domain_error("hyp2f1: argument must be < 1");
  if (x == 0.0 || a == 0.0 || b == 0.0)
    return 1.0;
  bool poly = is_nonpositive_integer(a) || is_nonpositive_integer(b);
  if (poly && std::fabs(x) <= 1.0)
    return hyp_polynomial(a, b, c, x);
  if (x < 0.0) {
    // Pfaff: F(a,b;c;x) = (1-x)^-a F(a,c-b;c;x/(x-1))
    double z = x / (x - 1.0);
    double wz = 1.0 / (1.0 - x);
    return std::pow(w, -a) * hyp2f1_xw(a, c - b, c, z, wz);
  }
  if (poly)
    return hyp_polynomial(a, b, c, x);
  if (x <= 0.5)
    return hyp_series(a, b, c, x);
  return hyp_near_one(a, b, c, x, w);
}

} // namespace detail

/// 2F1(a,b;c;x) for real x < 1.
inline double hyp2f1(double a, double b, double c, double x) {
  return detail::hyp2f1_xw(a, b, c, x, 1.0 - x);
}

inline double hyp2f1(const HypParams& p) {
  return hyp2f1(p.sigma1, p.sigma2, p.sigma3, p.x);
}

/// 2F1(a,b;c;1-w), accurate when w is small
inline double hyp2f1_complement(double a, double b, double c, double w) {
  return detail::hyp2f1_xw(a, b, c, 1.0 - w, w);
}

/// Regularized 2F1(a,b;c;x)/Gamma(c); finite for every c.  w = 1 - x.
inline double hyp2f1_regularized(double a, double b, double c, double x,
                                 double w) {
  if (is_nonpositive_integer(c, 1e-13)) {
    int n = static_cast<int>(-std::nearbyint(c));
    double pre = pochhammer(a, n + 1) * pochhammer(b, n + 1) *
                 rgamma(n + 2.0) * std::pow(x, n + 1);
    if (pre == 0.0)
      return 0.0;
    return pre * detail::hyp2f1_xw(a + n + 1, b + n + 1, n + 2.0, x, w);
  }
  return rgamma(c) * detail::hyp2f1_xw(a, b, c, x, w);
}

} // namespace fdare
