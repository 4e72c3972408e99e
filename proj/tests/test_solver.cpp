#include <cmath>

#include <gtest/gtest.h>

#include "fdare/abel.hpp"
#include "fdare/solver.hpp"
#include "oracles/values.hpp"
#include "problems.hpp"

using namespace fdare;

namespace {

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

} // namespace

TEST(Conditions, AdmissibleProblemsPass) {
  for (const auto& pb : testprob::admissible()) {
    auto rep = check_wellposedness(pb);
    EXPECT_TRUE(rep.pass) << rep.failing_condition;
  }
}

TEST(Conditions, NamesTheFailingCondition) {
  auto pb = testprob::symmetric();
  pb.k = CoefficientFunction::polynomial({1.0, -2.0});
  EXPECT_EQ(check_wellposedness(pb).failing_condition.rfind("positivity", 0), 0u);
  pb = testprob::symmetric(0.3);
  pb.k = CoefficientFunction::exp_poly({0.0, 3.0});
  EXPECT_EQ(check_wellposedness(pb).failing_condition.rfind("scalar", 0), 0u);
  pb = testprob::symmetric();
  pb.reac = CoefficientFunction::polynomial({-1.0});
  EXPECT_EQ(check_wellposedness(pb).failing_condition.rfind("sign", 0), 0u);
  pb = testprob::symmetric();
  pb.alpha = 0.7;
  EXPECT_EQ(check_wellposedness(pb).failing_condition.rfind("skew", 0), 0u);
  EXPECT_THROW(solve_weak(pb, 4), condition_error);
}

TEST(Coefficient, DerivativesMatchDifferences) {
  Interval iv{1.0, 3.0};
  for (auto c : {CoefficientFunction::polynomial({1.0, -0.5, 0.25}),
                 CoefficientFunction::exp_poly({0.1, 0.3, -0.2}),
                 CoefficientFunction::trig({2.0, 0.1, 0.05, -0.3})}) {
    double x = 2.2, h = 1e-6;
    double fd = (c(x + h, iv) - c(x - h, iv)) / (2 * h);
    EXPECT_NEAR(c.eval(x, iv).second, fd, 1e-8) << c.describe();
  }
}

TEST(Galerkin, RecoversSymmetricClosedForm) {
  for (const auto& c : oracle::symmetric_cases) {
    auto pb = testprob::symmetric(c.mu);
    auto u = solve_weak(pb, 8);
    double s = 0.5 * (1.0 + c.mu);
    double err = l2_difference(u, [&](double x) { return c.c * std::pow(x * (1 - x), s); });
    EXPECT_LT(err, 1e-9) << "mu = " << c.mu;
  }
}

TEST(Galerkin, SystemIsSymmetricForSymmetricProblem) {
  auto B = assemble_b2(testprob::symmetric(), 10);
  EXPECT_LT((B - B.transpose()).norm(), 1e-13 * B.norm());
}

TEST(Galerkin, SelfConvergence) {
  for (const auto& pb : {testprob::skew(), testprob::singular_source()}) {
    auto ref = solve_weak(pb, 48);
    double prev = 1e300;
    for (int n : {4, 8, 16, 32}) {
      double e = l2_difference(solve_weak(pb, n), [&](double x) { return ref.u(x); });
      EXPECT_LT(e, prev) << "N = " << n;
      prev = e;
    }
  }
}

TEST(Galerkin, DualOperatorEvaluators) {
  auto pb = testprob::skew();
  auto u = solve_weak(pb, 12);
  // aD^mu u = I^(1-mu) u' for u vanishing at a
  double x = 0.4;
  double h = 1e-5;
  double fd = (u.fractional_d(Side::left, 1.0 - pb.mu, x + h, 1.0 - x - h, false) -
               u.fractional_d(Side::left, 1.0 - pb.mu, x - h, 1.0 - x + h, false)) /
              (2 * h);
  EXPECT_NEAR(u.left_dmu(x), fd, 1e-7);
}

TEST(Coercivity, RayleighQuotientPositive) {
  for (const auto& pb : testprob::admissible()) {
    auto r = rayleigh_bounds(pb, 12);
    EXPECT_GT(r.min, 0.0);
    EXPECT_GE(r.max, r.min);
  }
}

TEST(Residuals, StrongFormsAgree) {
  auto u = solve_weak(testprob::skew(), 12);
  auto r = operator_residuals(u, {0.25, 0.5, 0.75});
  for (std::size_t i = 0; i < r.x.size(); ++i)
    EXPECT_LT(std::fabs(r.l[i] - r.ltilde[i]), 1e-5);
}

TEST(Validation, BasisSizeRange) {
  EXPECT_THROW(WeightedLegendreBasis(0, 0.75, Interval{0, 1}), domain_error);
  EXPECT_THROW(WeightedLegendreBasis(65, 0.75, Interval{0, 1}), domain_error);
}
