#pragma once

// Cauchy principal-value integrals on (a,b), the weighted singular operator,
// the skew angle theta and closed-form solutions of
//   c1 psi(x) + (c2/pi) p.v. int psi(t)/(t-x) dt = f(x).

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "fdare/error.hpp"
#include "fdare/fraccalc.hpp"
#include "fdare/quadrature.hpp"
#include "fdare/specfun.hpp"

namespace fdare {

namespace detail {

inline bool is_integer(double v) { return v == std::nearbyint(v); }

// p.v. int_0^1 tau^al (1-tau)^be / (tau - xi) d tau, with xi and 1 - xi
// supplied separately.
inline double jacobi_weight_pv(double al, double be, double xi, double xc) {
  if (!is_integer(al) && (xi <= 0.5 || is_integer(be))) {
    double w = std::pow(xi, al) * std::pow(xc, be);
    double cot = cospi(al) / sinpi(al);
    double g = gamma_fn(al) * gamma_fn(be + 1.0) * rgamma(al + be + 1.0);
    return -pi * cot * w + g * detail::hyp2f1_xw(1.0, -al - be, 1.0 - al, xi, xc);
  }
  if (!is_integer(be))
    return -jacobi_weight_pv(be, al, xc, xi);
  // polynomial weight: divided difference plus the logarithmic part
  const int na = static_cast<int>(al), nb = static_cast<int>(be);
  std::vector<double> c(na + nb + 1, 0.0);
  double binom = 1.0;
  for (int k = 0; k <= nb; ++k) {
    c[na + k] = binom * ((k % 2 == 0) ? 1.0 : -1.0);
    binom = binom * (nb - k) / (k + 1.0);
  }
  // synthetic division by (tau - xi)
  const int deg = na + nb;
  std::vector<double> q(std::max(deg, 1), 0.0);
  double carry = 0.0;
  for (int j = deg; j >= 1; --j) {
    carry = c[j] + xi * carry;
    q[j - 1] = carry;
  }
  double integ = 0.0;
  for (int j = 0; j < deg; ++j)
    integ += q[j] / (j + 1.0);
  double w = std::pow(xi, al) * std::pow(xc, be);
  return integ + w * std::log(xc / xi);
}

} // namespace detail

/// (1/pi) p.v. int_a^b f(t)/(t-x) dt from endpoint distances of x.
inline double cauchy_pv_d(const PowerWeightedFunction& f, double da, double db) {
  const Interval& iv = f.interval();
  const double L = iv.length();
  const double xi = da / L, xc = db / L;
  const double ea = f.exp_a(), eb = f.exp_b();
  const auto& c = f.coeffs();
  const int deg = f.degree();
  // (g(t) - g(x))/(t - x) as a polynomial in (t - a), by synthetic division
  std::vector<double> q(std::max(deg, 1), 0.0);
  double carry = 0.0;
  for (int j = deg; j >= 1; --j) {
    carry = c[j] + da * carry;
    q[j - 1] = carry;
  }
  double smooth_part = 0.0;
  if (deg >= 1) {
    auto integrate = [&](int n) {
      const QuadRule& r = gauss_jacobi(n, eb, ea);
      double s = 0.0;
      for (std::size_t k = 0; k < r.x.size(); ++k) {
        double y = 0.5 * L * r.xp[k]; // t - a
        double v = 0.0;
        for (int j = deg - 1; j >= 0; --j)
          v = v * y + q[j];
        s += r.w[k] * v;
      }
      return s * std::pow(0.5 * L, ea + eb + 1.0);
    };
    int n = std::max(8, deg + 4);
    double s1 = integrate(n);
    double s2 = integrate(2 * n);
    if (std::fabs(s1 - s2) > 1e-7 * std::max(1.0, std::fabs(s2)))
      throw numeric_error("cauchy_pv: quadrature did not settle", std::fabs(s1 - s2));
    smooth_part = s2;
  }
  double weight_part = std::pow(L, ea + eb) * detail::jacobi_weight_pv(ea, eb, xi, xc);
  return (smooth_part + f.smooth(da) * weight_part) / pi;
}

inline void check_pv_point(const Interval& iv, double x) {
  const double guard = 1e-9 * iv.length();
  if (!(x - iv.a > guard && iv.b - x > guard))
    throw domain_error("principal value requested too close to an endpoint");
}

/// (1/pi) p.v. int_a^b f(t)/(t-x) dt
inline double cauchy_pv(const PowerWeightedFunction& f, double x) {
  const Interval& iv = f.interval();
  check_pv_point(iv, x);
  return cauchy_pv_d(f, x - iv.a, iv.b - x);
}

inline PowerWeightedFunction reweighted(const PowerWeightedFunction& f, double nu_a,
                                        double nu_b) {
  double ea = f.exp_a() - nu_a, eb = f.exp_b() - nu_b;
  if (!(ea > -1.0) || !(eb > -1.0))
    throw domain_error("weighted singular operator: integrand not integrable");
  return {f.coeffs(), ea, eb, f.interval()};
}

inline double weighted_singular_d(double nu_a, double nu_b,
                                  const PowerWeightedFunction& f, double da, double db) {
  return std::pow(da, nu_a) * std::pow(db, nu_b) *
         cauchy_pv_d(reweighted(f, nu_a, nu_b), da, db);
}

/// (1/pi) int ((x-a)/(t-a))^nu_a ((b-x)/(b-t))^nu_b f(t)/(t-x) dt
inline double weighted_singular(double nu_a, double nu_b, const PowerWeightedFunction& f,
                                double x) {
  const Interval& iv = f.interval();
  check_pv_point(iv, x);
  return weighted_singular_d(nu_a, nu_b, f, x - iv.a, iv.b - x);
}

/// (1/pi) p.v. integral of a general callable, by subtraction and tanh-sinh
inline double cauchy_pv_callable(const std::function<double(double, double, double)>& f,
                                 const Interval& iv, double x, double tol = 1e-11) {
  const double da = x - iv.a, db = iv.b - x;
  const double fx = f(x, da, db);
  auto left = tanh_sinh(
      iv.a, x,
      [&](double t, double dlo, double dhi) {
        if (dhi == 0.0)
          return 0.0;
        return (f(t, dlo, db + dhi) - fx) / (-dhi);
      },
      tol);
  auto right = tanh_sinh(
      x, iv.b,
      [&](double t, double dlo, double dhi) {
        if (dlo == 0.0)
          return 0.0;
        return (f(t, da + dlo, dhi) - fx) / dlo;
      },
      tol);
  return (left.value + right.value + fx * std::log(db / da)) / pi;
}

// ---------------------------------------------------------------------------

/// theta in [0, 2pi) with (A - iB)/(A + iB) = exp(i theta)
inline double angle_of(double A, double B) {
  double th = std::atan2(-2.0 * A * B, A * A - B * B);
  if (th < 0.0)
    th += 2.0 * pi;
  if (th >= 2.0 * pi)
    th -= 2.0 * pi;
  return th;
}

struct SkewCoefficients {
  double alpha;
  double beta;
  double mu;
  double A;
  double B;
  double theta;

  double ratio() const { return theta / (2.0 * pi); }
};

inline SkewCoefficients skew_coefficients(double alpha, double beta, double mu) {
  if (!(alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0) ||
      std::fabs(alpha + beta - 1.0) > 1e-12)
    throw domain_error("skew coefficients: need 0 < alpha, beta < 1 with alpha + beta = 1");
  if (!(mu > 0.0 && mu < 1.0))
    throw domain_error("mu must lie in (0,1)");
  SkewCoefficients s{alpha, beta, mu, alpha - beta * cospi(mu), beta * sinpi(mu), 0.0};
  s.theta = angle_of(s.A, s.B);
  double r = s.ratio();
  if (!(mu < r && r < 1.0))
    throw numeric_error("skew coefficients: angle outside (mu, 1)", r);
  return s;
}

enum class SolutionSpace { X1, X2, X3, X4 };

inline const char* to_string(SolutionSpace s) {
  switch (s) {
  case SolutionSpace::X1: return "X1";
  case SolutionSpace::X2: return "X2";
  case SolutionSpace::X3: return "X3";
  default: return "X4";
  }
}

inline int n_a(SolutionSpace s) {
  return (s == SolutionSpace::X1 || s == SolutionSpace::X2) ? 1 : 0;
}
inline int n_b(SolutionSpace s) {
  return (s == SolutionSpace::X1 || s == SolutionSpace::X3) ? 1 : 0;
}

struct SingularEquationSpec {
  double c1 = 1.0;
  double c2 = 0.0;
  /// f = f*(x) / ((x-a)^(1-nu_a) (b-x)^(1-nu_b)); nu = 1 + endpoint exponent
  PowerWeightedFunction rhs;
  SolutionSpace space = SolutionSpace::X2;
  /// homogeneous-solution constant, used only in X1
  double C = 0.0;

  double nu_a() const { return 1.0 + rhs.exp_a(); }
  double nu_b() const { return 1.0 + rhs.exp_b(); }
  double theta() const { return angle_of(c1, c2); }
  /// exponents of the solution weight at a and b
  double weight_exp_a() const { return 1.0 - n_a(space) - theta() / (2.0 * pi); }
  double weight_exp_b() const { return theta() / (2.0 * pi) - n_b(space); }
  bool solvable() const {
    return weight_exp_a() < nu_a() && weight_exp_b() < nu_b();
  }
  /// In X4 a solution exists only when this moment of f vanishes.
  double compatibility_moment() const {
    return reweighted(rhs, weight_exp_a(), weight_exp_b()).integral();
  }
  /// the same moment with |coefficients|, for a relative test
  double compatibility_scale() const {
    auto c = rhs.coeffs();
    const double L = rhs.interval().length();
    double s = 0.0, p = 1.0;
    for (double v : c) {
      s += std::fabs(v) * p;
      p *= L;
    }
    return s * PowerWeightedFunction::power(1.0, rhs.exp_a() - weight_exp_a(),
                                           rhs.exp_b() - weight_exp_b(), rhs.interval())
                   .integral();
  }
  bool compatible(double tol = 1e-10) const {
    if (space != SolutionSpace::X4 || c2 == 0.0)
      return true;
    return std::fabs(compatibility_moment()) <= tol * compatibility_scale();
  }
};

/// rhs minus the constant that makes it compatible in X4
inline PowerWeightedFunction project_x4(const SingularEquationSpec& s) {
  if (s.rhs.exp_a() != 0.0 || s.rhs.exp_b() != 0.0)
    throw domain_error("project_x4: expects a polynomial right-hand side");
  SingularEquationSpec one = s;
  one.rhs = PowerWeightedFunction({1.0}, 0.0, 0.0, s.rhs.interval());
  auto c = s.rhs.coeffs();
  c[0] -= s.compatibility_moment() / one.compatibility_moment();
  return {c, 0.0, 0.0, s.rhs.interval()};
}

inline double dominant_solution_d(const SingularEquationSpec& s, double da, double db) {
  if (s.c1 == 0.0 && s.c2 == 0.0)
    throw domain_error("dominant equation: c1 and c2 both vanish");
  if (!s.solvable())
    throw domain_error(std::string("dominant equation: solvability condition fails in ") +
                       to_string(s.space));
  if (!s.compatible())
    throw domain_error("dominant equation: right-hand side fails the X4 moment condition");
  const double D = s.c1 * s.c1 + s.c2 * s.c2;
  double r = s.c1 * s.rhs.eval_d(da, db) / D;
  if (s.c2 == 0.0)
    return r;
  const double ea = s.weight_exp_a(), eb = s.weight_exp_b();
  r -= s.c2 / D * weighted_singular_d(ea, eb, s.rhs, da, db);
  if (s.space == SolutionSpace::X1 && s.C != 0.0)
    r += s.C * std::pow(da, ea) * std::pow(db, eb);
  return r;
}

inline double dominant_solution(const SingularEquationSpec& s, double x) {
  const Interval& iv = s.rhs.interval();
  check_pv_point(iv, x);
  return dominant_solution_d(s, x - iv.a, iv.b - x);
}

/// c1 psi(x) + (c2/pi) p.v. int psi/(t-x) - f(x) for the constructed psi
inline double dominant_residual(const SingularEquationSpec& s, double x) {
  const Interval& iv = s.rhs.interval();
  check_pv_point(iv, x);
  auto psi = [&](double, double da, double db) { return dominant_solution_d(s, da, db); };
  double sv = cauchy_pv_callable(psi, iv, x);
  return s.c1 * psi(x, x - iv.a, iv.b - x) + s.c2 * sv - s.rhs(x);
}

// ---------------------------------------------------------------------------

/// endpoint exponents of the four representations
inline std::array<double, 2> j_exponents(const SkewCoefficients& k, int which) {
  const double T = k.ratio();
  switch (which) {
  case 1: return {1.0 - T, T - k.mu};
  case 2: return {1.0 - T, T - k.mu - 1.0};
  case 3: return {-T, T - k.mu};
  case 4: return {-T, T - k.mu - 1.0};
  default: throw domain_error("j_representations: which must be 1..4");
  }
}

inline double j_representation(const PowerWeightedFunction& f, const SkewCoefficients& k,
                               int which, double x) {
  const Interval& iv = f.interval();
  check_pv_point(iv, x);
  auto e = j_exponents(k, which);
  const double D = k.A * k.A + k.B * k.B;
  return k.A * f(x) / D - k.B / D * weighted_singular(e[0], e[1], f, x);
}

/// Moments int (t-a)^(T-1+j) (b-t)^(mu-T) f(t) dt, j = 0, 1.  The four
/// representations coincide exactly when both vanish.
inline std::array<double, 2> j_moments(const PowerWeightedFunction& f,
                                       const SkewCoefficients& k) {
  const double T = k.ratio();
  PowerWeightedFunction w0(f.coeffs(), f.exp_a() + T - 1.0, f.exp_b() + k.mu - T,
                           f.interval());
  auto c1 = f.coeffs();
  c1.insert(c1.begin(), 0.0);
  PowerWeightedFunction w1(c1, f.exp_a() + T - 1.0, f.exp_b() + k.mu - T, f.interval());
  return {w0.integral(), w1.integral()};
}

/// f minus the linear polynomial that cancels both moments
inline PowerWeightedFunction project_compatible(const PowerWeightedFunction& f,
                                                const SkewCoefficients& k) {
  if (f.exp_a() != 0.0 || f.exp_b() != 0.0)
    throw domain_error("project_compatible: expects a polynomial right-hand side");
  const Interval& iv = f.interval();
  auto m = [&](std::vector<double> c) {
    return j_moments(PowerWeightedFunction(c, 0.0, 0.0, iv), k);
  };
  auto mf = j_moments(f, k);
  auto m0 = m({1.0});
  auto m1 = m({0.0, 1.0});
  double det = m0[0] * m1[1] - m1[0] * m0[1];
  double c0 = (mf[0] * m1[1] - m1[0] * mf[1]) / det;
  double cl = (m0[0] * mf[1] - mf[0] * m0[1]) / det;
  auto c = f.coeffs();
  if (c.size() < 2)
    c.resize(2, 0.0);
  c[0] -= c0;
  c[1] -= cl;
  return {c, 0.0, 0.0, iv};
}

} // namespace fdare
