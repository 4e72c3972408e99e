// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fdare/abel.hpp"
#include "fdare/analysis.hpp"
#include "fdare/singular.hpp"
#include "fdare/solver.hpp"
#include "fdare/suites.hpp"
#include "problems.hpp"

using namespace fdare;

namespace {

constexpr unsigned long long seed = 20240607;

struct Outcome {
  bool pass;
  std::string detail;
};

const CheckRecord& find(const std::vector<CheckRecord>& v, const std::string& name) {
  for (const auto& r : v)
    if (r.check == name)
      return r;
  throw std::runtime_error("missing check " + name);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double l2_difference(const GalerkinSolution& u, const std::function<double(double)>& v) {
  const Interval& iv = u.problem().interval;
  const QuadRule& gl = gauss_legendre(200);
  double s = 0.0;
  for (std::size_t i = 0; i < gl.x.size(); ++i) {
    double x = iv.a + 0.5 * iv.length() * (gl.x[i] + 1.0);
    double d = u.u(x) - v(x);
    s += gl.w[i] * d * d;
  }
  return std::sqrt(0.5 * iv.length() * s);
}

// 1-3 share one sweep
std::vector<CheckRecord> abel_records;
double abel_seconds = 0.0;

void run_abel() {
  if (!abel_records.empty())
    return;
  auto t0 = std::chrono::steady_clock::now();
  abel_records = abel_suite(seed, 50);
  abel_seconds = seconds_since(t0);
}

Outcome c1() {
  run_abel();
  const auto& r = find(abel_records, "abel.power_solution_residual");
  return {r.pass && abel_seconds <= 30.0,
          fmt("max residual %.3g (tol 1e-7), 50 draws x 20 points, %.2f s (limit 30 s)", r.measured,
              abel_seconds)};
}

Outcome c2() {
  run_abel();
  const auto& r = find(abel_records, "abel.derivative_form_residual");
  return {r.pass && abel_seconds <= 30.0,
          fmt("max residual %.3g (tol 1e-5), %.2f s (limit 30 s)", r.measured, abel_seconds)};
}

Outcome c3() {
  run_abel();
  const auto& s = find(abel_records, "abel.exponent_sum");
  const auto& n = find(abel_records, "abel.exponent_sine");
  const auto& y = find(abel_records, "abel.symmetric_exponents");
  return {s.pass && n.pass && y.pass,
          fmt("sum %.3g, sine %.3g (tol 1e-10); symmetric %.3g (tol 1e-12)", s.measured,
              n.measured, y.measured)};
}

std::vector<CheckRecord> singular_records;

void run_singular() {
  if (singular_records.empty())
    singular_records = singular_suite(seed);
}

Outcome c4() {
  run_singular();
  const auto& b = find(singular_records, "singular.theta_bound");
  const auto& s = find(singular_records, "singular.theta_symmetric");
  return {b.pass && s.pass,
          fmt("1000 draws, worst bound violation %.3g; symmetric deviation %.3g (tol 1e-12)",
              b.measured, s.measured)};
}

Outcome c5() {
  run_singular();
  const auto& r = find(singular_records, "singular.j_representations");
  return {r.pass, fmt("max pairwise spread %.3g (tol 1e-6), 20 sources x 10 points", r.measured)};
}

Outcome c6() {
  run_singular();
  const auto& r = find(singular_records, "singular.dominant_residual");
  return {r.pass, fmt("max forward residual %.3g (tol 1e-5), 20 specs", r.measured)};
}

Outcome c7() {
  auto t0 = std::chrono::steady_clock::now();
  auto pb = testprob::symmetric(0.5);
  auto u = solve_weak(pb, 8);
  auto exact = unit_derivative_solution(0.5, 0.5, 0.5, pb.interval).antiderivative;
  double rec = l2_difference(u, [&](double x) { return exact(x); });
  bool ok = rec <= 1e-9;
  std::string conv;
  for (const auto& p : {testprob::skew(), testprob::singular_source()}) {
    auto ref = solve_weak(p, 48);
    double prev = INFINITY;
    for (int n : {4, 8, 16, 32}) {
      double e = l2_difference(solve_weak(p, n), [&](double x) { return ref.u(x); });
      ok = ok && e < prev;
      prev = e;
      conv += fmt("%.2g ", e);
    }
    conv += "| ";
  }
  double secs = seconds_since(t0);
  ok = ok && secs <= 60.0;
  return {ok, fmt("exact-case L2 error %.3g (tol 1e-9); %.2f s (limit 60 s); ", rec, secs) +
                  "self-convergence N=4,8,16,32: " + conv};
}

Outcome c8() {
  double rmin = INFINITY;
  for (const auto& pb : testprob::admissible())
    rmin = std::min(rmin, rayleigh_bounds(pb, 16).min);
  Sampler rs(seed);
  double lo = INFINITY, hi = 0.0;
  auto pb = testprob::skew();
  for (int i = 0; i < 10; ++i) {
    pb.source = random_polynomial(rs, pb.interval, 2);
    double r = hs_seminorm(solve_weak(pb, 16)) / source_norm(pb);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return {rmin > 0.0 && hi / lo <= 2.0,
          fmt("min Rayleigh quotient %.3g over %.0f problems; norm constant spread %.3g (limit 2)",
              rmin, static_cast<double>(testprob::admissible().size()), hi / lo)};
}

Outcome c9() {
  int checked = 0;
  bool ok = true;
  double worst_dmu = INFINITY;
  for (const auto& pb : testprob::admissible()) {
    if (!boundary_vanishing_applies(pb))
      continue;
    auto r = boundary_vanishing_check(solve_weak(pb, 16));
    ++checked;
    ok = ok && r.pass && r.dmu_left.fitted_exponent > 0.0 && r.dmu_right.fitted_exponent > 0.0;
    worst_dmu = std::min({worst_dmu, r.dmu_left.fitted_exponent, r.dmu_right.fitted_exponent});
  }
  const double mu = 0.5;
  auto u = unit_derivative_solution(0.5, 0.5, 1.0 - mu, Interval{0.0, 1.0}).antiderivative;
  auto du = left_derivative_exponents(u, 1.0);
  auto cr = boundary_vanishing_check(u, mu);
  double dev = std::fabs(du[0] - 0.5 * (mu - 1.0));
  ok = ok && checked >= 5 && cr.pass && dev <= 1e-12;
  return {ok, fmt("%.0f problems, smallest D^mu exponent %.3g; analytic Du exponent deviation %.3g",
                  checked, worst_dmu, dev)};
}

Outcome c10() {
  bool ok = true;
  std::string d;
  for (double mu : {0.3, 0.5, 0.7}) {
    double t = 1.0 + mu + 0.1;
    auto r = counterexample_check(mu, t);
    bool above = verify_representation(r.solution, mu, t).in_Hstar;
    bool below = verify_representation(r.solution, mu, 1.0 + mu - 0.1).in_Hstar;
    bool good = r.threshold > 0.0 && r.beta_over_alpha > 0.0 &&
                r.beta_over_alpha < r.threshold && r.p_exponent < -1.0 && r.diverges &&
                !above && below;
    ok = ok && good;
    d += fmt("mu=%.1f: b/a=%.3g p+1-t=%.4g; ", mu, r.beta_over_alpha, r.p_exponent);
  }
  return {ok, d};
}

Outcome c11() {
  bool ok = true;
  std::string d;
  for (const auto& pb : {testprob::skew(), testprob::trig()}) {
    auto u = solve_weak(pb, 16);
    auto r = operator_residuals(u, interior_points(pb.interval, 50));
    // discretization error: rms of the strong residual of u_N
    double ss = 0.0, diff = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
      ss += r.l[i] * r.l[i];
      diff = std::max(diff, std::fabs(r.l[i] - r.ltilde[i]));
    }
    double disc = std::sqrt(ss / r.x.size());
    ok = ok && diff <= 10.0 * disc;
    d += fmt("max|L-Lt| %.3g vs rms residual %.3g; ", diff, disc);
  }
  return {ok, d};
}

Outcome c12() {
  auto t0 = std::chrono::steady_clock::now();
  auto recs = specfun_suite(seed, 200);
  double secs = seconds_since(t0);
  std::string d;
  for (const auto& r : recs)
    d += r.check + fmt("=%.2g ", r.measured);
  return {all_pass(recs) && secs <= 10.0, d + fmt("%.2f s (limit 10 s)", secs)};
}

} // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion all[] = {
      {"abel power solution residual", c1},
      {"abel derivative-form residual", c2},
      {"exponent system", c3},
      {"angle bound", c4},
      {"four J representations agree", c5},
      {"dominant singular equation residual", c6},
      {"galerkin recovery and self-convergence", c7},
      {"discrete coercivity and norm stability", c8},
      {"boundary vanishing of D^mu u", c9},
      {"sharpness of the order 1 + mu", c10},
      {"operator-form equivalence", c11},
      {"special-function suite", c12},
  };
  int failed = 0;
  int i = 0;
  for (const auto& c : all) {
    ++i;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("criterion %2d %s %s: %s\n", i, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 12 criteria passed\n", 12 - failed);
  return failed == 0 ? 0 : 1;
}
