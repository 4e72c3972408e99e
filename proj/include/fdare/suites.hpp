#pragma once

// Seeded property sweeps.  Each check reports the worst measured error over
// its draws against a tolerance.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "fdare/abel.hpp"
#include "fdare/fraccalc.hpp"
#include "fdare/quadrature.hpp"
#include "fdare/singular.hpp"
#include "fdare/specfun.hpp"

namespace fdare {

struct CheckRecord {
  std::string check;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string ref;
};

inline CheckRecord make_check(std::string name, double measured, double tol, std::string ref) {
  return {std::move(name), measured <= tol, measured, tol, std::move(ref)};
}

inline bool all_pass(const std::vector<CheckRecord>& v) {
  return std::all_of(v.begin(), v.end(), [](const CheckRecord& r) { return r.pass; });
}

class Sampler {
public:
  explicit Sampler(unsigned long long seed) : rng_(seed) {}
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * std::generate_canonical<double, 53>(rng_);
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(uniform(0.0, hi - lo + 1.0 - 1e-12)); }
  /// avoids integers by at least gap
  double off_integer(double lo, double hi, double gap) {
    for (;;) {
      double v = uniform(lo, hi);
      if (std::fabs(v - std::nearbyint(v)) >= gap)
        return v;
    }
  }

private:
  std::mt19937_64 rng_;
};

inline double rel_err(double v, double ref) {
  return std::fabs(v - ref) / std::max(1e-300, std::fabs(ref));
}

// ---------------------------------------------------------------------------

inline std::vector<CheckRecord> specfun_suite(unsigned long long seed, int draws = 200) {
  Sampler rs(seed);
  double refl = 0, rec = 0, sym = 0, euler = 0, dec = 0, integ = 0, logc = 0;
  for (int i = 0; i < draws; ++i) {
    double z = rs.uniform(0.01, 0.99);
    refl = std::max(refl, rel_err(gamma_fn(z) * gamma_fn(1.0 - z), pi / std::sin(pi * z)));
    double x = rs.uniform(0.1, 50.0);
    rec = std::max(rec, rel_err(gamma_fn(x + 1.0), x * gamma_fn(x)));

    double a = rs.off_integer(-2.0, 3.0, 0.05), b = rs.off_integer(-2.0, 3.0, 0.05);
    double c = rs.off_integer(-2.0, 3.0, 0.05);
    double y = rs.uniform(-0.9, 0.95);
    sym = std::max(sym, rel_err(hyp2f1(a, b, c, y), hyp2f1(b, a, c, y)));

    double ye = rs.uniform(0.0, 0.9);
    double lhs = hyp2f1(a, b, c, ye);
    double rhs = std::pow(1.0 - ye, c - a - b) * hyp2f1(c - a, c - b, c, ye);
    euler = std::max(euler, std::fabs(lhs - rhs) / (1.0 + std::fabs(lhs)));

    // F(a,b;a+b+1-c;1-x) = A F(a,b;c;x) + B x^(1-c) F(a+1-c,b+1-c;2-c;x)
    double xd = rs.uniform(0.05, 0.95);
    double cd;
    do
      cd = rs.off_integer(-1.5, 2.5, 0.05);
    while (std::fabs(a + b + 1.0 - cd - std::nearbyint(a + b + 1.0 - cd)) < 0.05);
    double g0 = gamma_fn(a + b + 1.0 - cd);
    double A = g0 * gamma_fn(1.0 - cd) * rgamma(a + 1.0 - cd) * rgamma(b + 1.0 - cd);
    double B = g0 * gamma_fn(cd - 1.0) * rgamma(a) * rgamma(b);
    double l2 = hyp2f1(a, b, a + b + 1.0 - cd, 1.0 - xd);
    double t1 = A * hyp2f1(a, b, cd, xd);
    double t2 = B * std::pow(xd, 1.0 - cd) * hyp2f1(a + 1.0 - cd, b + 1.0 - cd, 2.0 - cd, xd);
    // the two terms can cancel by many orders; scale by their size
    dec = std::max(dec, std::fabs(l2 - t1 - t2) /
                            (std::fabs(l2) + std::fabs(t1) + std::fabs(t2)));

    // Euler integral, 0 < b < c
    double bi = rs.uniform(0.1, 2.0), ci = bi + rs.uniform(0.1, 2.0);
    double xi = rs.uniform(-0.9, 0.9);
    auto q = graded_integrate_adaptive(0.0, 1.0, EndSpec{bi - 1.0}, EndSpec{ci - bi - 1.0},
                                       1e-12, [&](double t, double, double) {
                                         return std::pow(1.0 - xi * t, -a);
                                       });
    double ev = q.value * gamma_fn(ci) * rgamma(bi) * rgamma(ci - bi);
    integ = std::max(integ, std::fabs(ev - hyp2f1(a, bi, ci, xi)) / (1.0 + std::fabs(ev)));

    double xl = rs.uniform(0.01, 0.95);
    logc = std::max(logc, rel_err(hyp2f1(1.0, 1.0, 2.0, xl), -std::log1p(-xl) / xl));
  }
  return {
      make_check("gamma.reflection", refl, 1e-12, "G(z)G(1-z) = pi/sin(pi z)"),
      make_check("gamma.recursion", rec, 1e-12, "G(x+1) = x G(x)"),
      make_check("hyp2f1.symmetry", sym, 1e-12, "F(a,b;c;x) = F(b,a;c;x)"),
      make_check("hyp2f1.euler_transform", euler, 1e-9,
                 "F(a,b;c;x) = (1-x)^(c-a-b) F(c-a,c-b;c;x)"),
      make_check("hyp2f1.decomposition", dec, 1e-9, "x <-> 1-x connection formula"),
      make_check("hyp2f1.euler_integral", integ, 1e-8, "integral representation, 0<b<c"),
      make_check("hyp2f1.log_case", logc, 1e-12, "F(1,1;2;x) = -ln(1-x)/x"),
  };
}

// ---------------------------------------------------------------------------

struct AbelDraw {
  double g1, g2, t;
  Interval iv;
};

inline AbelDraw draw_abel(Sampler& rs) {
  double a = rs.uniform(-2.0, 2.0);
  return {rs.uniform(0.1, 2.0), rs.uniform(0.1, 2.0), rs.uniform(0.05, 0.95),
          Interval{a, a + rs.uniform(0.5, 3.0)}};
}

inline std::vector<double> interior_points(const Interval& iv, int n) {
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i)
    x[i] = iv.a + iv.length() * 0.5 * (1.0 - std::cos(pi * (i + 0.5) / n));
  return x;
}

inline std::vector<CheckRecord> abel_suite(unsigned long long seed, int draws = 50) {
  Sampler rs(seed);
  double l1 = 0, l2 = 0, sum = 0, sine = 0, symm = 0;
  for (int i = 0; i < draws; ++i) {
    AbelDraw d = draw_abel(rs);
    auto u1 = unit_image_solution(d.g1, d.g2, d.t, d.iv);
    auto s2 = unit_derivative_solution(d.g1, d.g2, d.t, d.iv);
    auto cb = as_callable(u1);
    for (double x : interior_points(d.iv, 20)) {
      // quadrature route, independent of the closed forms
      double v = d.g1 * rl_integral_numeric(Side::left, d.t, cb, x) +
                 d.g2 * rl_integral_numeric(Side::right, d.t, cb, x);
      l1 = std::max(l1, std::fabs(v - 1.0));
      l2 = std::max(l2, std::fabs(two_sided_integral_derivative(d.g1, d.g2, d.t, s2.u, x) - 1.0));
    }
    sum = std::max(sum, s2.exps.sum_residual());
    sine = std::max(sine, s2.exps.sine_residual());
    double g = rs.uniform(0.1, 2.0);
    auto e = solve_exponents(g, g, d.t);
    symm = std::max({symm, std::fabs(e.p + 0.5 * d.t), std::fabs(e.q + 0.5 * d.t)});
  }
  return {
      make_check("abel.power_solution_residual", l1, 1e-7, "g1 I_l^t u + g2 I_r^t u = 1"),
      make_check("abel.derivative_form_residual", l2, 1e-5, "D(g1 I_l^t + g2 I_r^t) u = 1"),
      make_check("abel.exponent_sum", sum, 1e-10, "p + q = -t"),
      make_check("abel.exponent_sine", sine, 1e-10, "g1 sin(q pi) = g2 sin(p pi)"),
      make_check("abel.symmetric_exponents", symm, 1e-12, "g1 = g2 gives p = q = -t/2"),
  };
}

// ---------------------------------------------------------------------------

inline PowerWeightedFunction random_polynomial(Sampler& rs, const Interval& iv, int degree,
                                               double ea = 0.0, double eb = 0.0) {
  std::vector<double> c(degree + 1);
  double scale = 1.0;
  for (auto& v : c) {
    v = rs.uniform(-1.0, 1.0) * scale;
    scale /= iv.length();
  }
  return {c, ea, eb, iv};
}

inline SingularEquationSpec draw_dominant(Sampler& rs) {
  for (;;) {
    double a = rs.uniform(-1.0, 1.0);
    Interval iv{a, a + rs.uniform(0.5, 2.5)};
    SingularEquationSpec s;
    s.c1 = rs.uniform(-1.0, 1.0);
    s.c2 = rs.uniform(0.1, 1.0);
    if (rs.uniform(0.0, 1.0) < 0.5)
      s.c2 = -s.c2;
    s.space = static_cast<SolutionSpace>(rs.integer(0, 3));
    if (s.space == SolutionSpace::X4) {
      s.rhs = random_polynomial(rs, iv, 3);
      s.rhs = project_x4(s);
    } else {
      double ea = rs.uniform(-0.6, 0.5);
      double eb = rs.uniform(-0.6, 0.5);
      s.rhs = random_polynomial(rs, iv, 3, ea, eb);
    }
    if (s.space == SolutionSpace::X1)
      s.C = rs.uniform(-1.0, 1.0);
    if (s.solvable())
      return s;
  }
}

inline std::vector<CheckRecord> singular_suite(unsigned long long seed) {
  Sampler rs(seed);
  double theta_viol = 0.0, symm = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double al = rs.uniform(0.01, 0.99), mu = rs.uniform(0.01, 0.99);
    auto k = skew_coefficients(al, 1.0 - al, mu);
    double r = k.ratio();
    theta_viol = std::max({theta_viol, mu - r, r - 1.0, 0.0});
    auto ks = skew_coefficients(0.5, 0.5, mu);
    symm = std::max(symm, std::fabs(ks.ratio() - 0.5 * (1.0 + mu)));
  }
  double jspread = 0.0;
  for (int i = 0; i < 20; ++i) {
    double a = rs.uniform(-1.0, 1.0);
    Interval iv{a, a + rs.uniform(0.5, 2.5)};
    double al = rs.uniform(0.05, 0.95), mu = rs.uniform(0.05, 0.95);
    auto k = skew_coefficients(al, 1.0 - al, mu);
    auto f = project_compatible(random_polynomial(rs, iv, rs.integer(2, 5)), k);
    for (double x : interior_points(iv, 10)) {
      double v[4];
      for (int w = 0; w < 4; ++w)
        v[w] = j_representation(f, k, w + 1, x);
      for (int p = 0; p < 4; ++p)
        for (int q = p + 1; q < 4; ++q)
          jspread = std::max(jspread, std::fabs(v[p] - v[q]));
    }
  }
  double dres = 0.0;
  for (int i = 0; i < 20; ++i) {
    auto s = draw_dominant(rs);
    for (double x : interior_points(s.rhs.interval(), 5))
      dres = std::max(dres, std::fabs(dominant_residual(s, x)));
  }
  // p.v. of f(t) = t on (0,1)
  PowerWeightedFunction lin({0.0, 1.0}, 0.0, 0.0, Interval{0.0, 1.0});
  double pv = 0.0;
  for (double x : interior_points(lin.interval(), 10))
    pv = std::max(pv, std::fabs(cauchy_pv(lin, x) - (1.0 + x * std::log((1.0 - x) / x)) / pi));
  return {
      make_check("singular.theta_bound", theta_viol, 0.0, "mu < theta/2pi < 1"),
      make_check("singular.theta_symmetric", symm, 1e-12, "alpha = beta gives (1+mu)/2"),
      make_check("singular.j_representations", jspread, 1e-6,
                 "four representations agree for compatible f"),
      make_check("singular.dominant_residual", dres, 1e-5,
                 "c1 psi + (c2/pi) pv int psi/(t-x) = f"),
      make_check("singular.cauchy_pv_linear", pv, 1e-12,
                 "pv of t on (0,1) = (1 + x ln((1-x)/x))/pi"),
  };
}

} // namespace fdare
