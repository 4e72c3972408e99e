#include <cmath>

#include <gtest/gtest.h>

#include "fdare/abel.hpp"
#include "fdare/analysis.hpp"
#include "oracles/values.hpp"
#include "problems.hpp"

using namespace fdare;

TEST(Fit, ExactForPurePower) {
  Interval iv{0.0, 2.0};
  auto f = [](double da, double) { return 3.0 * std::pow(da, 0.37); };
  auto fit = fit_boundary_exponent(f, Side::left, iv);
  EXPECT_NEAR(fit.estimate, 0.37, 1e-12);
  EXPECT_LT(fit.stderr_, 1e-12);
  EXPECT_EQ(fit.points, 24);
}

TEST(Fit, SmoothFactorBiasIsSmall) {
  // the smooth factor varies by ~1% over the window, biasing the slope
  Interval iv{0.0, 2.0};
  auto f = [](double da, double db) { return 3.0 * std::pow(da, 0.37) * (1.0 + db); };
  EXPECT_NEAR(fit_boundary_exponent(f, Side::left, iv).estimate, 0.37, 1e-3);
  auto g = [](double da, double db) { return std::pow(db, -0.2) * (2.0 + da); };
  EXPECT_NEAR(fit_boundary_exponent(g, Side::right, iv).estimate, -0.2, 1e-3);
}

TEST(Classify, ThreeWay) {
  EXPECT_EQ(classify(0.3).value_class, ValueClass::vanishes);
  EXPECT_EQ(classify(-0.3).value_class, ValueClass::blows_up);
  EXPECT_EQ(classify(0.0).value_class, ValueClass::finite_nonzero);
  EXPECT_EQ(classify(0.01, 0.01).value_class, ValueClass::finite_nonzero);
}

TEST(Boundary, SymmetricClosedFormExponents) {
  auto u = unit_derivative_solution(0.5, 0.5, 0.5, Interval{0.0, 1.0}).antiderivative;
  auto r = boundary_vanishing_check(u, 0.5);
  EXPECT_TRUE(r.pass);
  auto du = left_derivative_exponents(u, 1.0);
  EXPECT_NEAR(du[0], (0.5 - 1.0) / 2, 1e-15);
}

TEST(Boundary, GalerkinSolutionsVanish) {
  for (const auto& pb : testprob::admissible()) {
    if (!boundary_vanishing_applies(pb))
      continue;
    auto r = boundary_vanishing_check(solve_weak(pb, 16));
    EXPECT_TRUE(r.pass);
    EXPECT_GT(r.dmu_left.fitted_exponent, 0.0);
    EXPECT_GT(r.dmu_right.fitted_exponent, 0.0);
  }
}

TEST(Boundary, RefusesWhenConditionsFail) {
  auto pb = testprob::singular_source();
  pb.mu = 0.4;
  EXPECT_FALSE(boundary_vanishing_applies(pb));
  EXPECT_THROW(boundary_vanishing_check(solve_weak(pb, 8)), condition_error);
}

TEST(Representation, SymmetricOrderLimit) {
  auto u = unit_derivative_solution(0.5, 0.5, 0.5, Interval{0.0, 1.0}).antiderivative;
  EXPECT_TRUE(verify_representation(u, 0.5, 1.4).in_Hstar);
  EXPECT_THROW(verify_representation(u, 0.5, 1.5), domain_error);
  // symmetric solution stays representable above 1 + mu
  EXPECT_TRUE(verify_representation(u, 0.5, 1.6).in_Hstar);
}

TEST(Counterexample, ThresholdMatchesReference) {
  for (const auto& c : oracle::threshold_cases) {
    auto r = counterexample_check(c.mu, c.t);
    EXPECT_NEAR(r.threshold, c.value, 1e-13);
    EXPECT_LT(r.beta_over_alpha, r.threshold);
    EXPECT_LT(r.p_exponent, -1.0);
    EXPECT_TRUE(r.diverges);
  }
}

TEST(Divergence, ConvergentIntegralNotFlagged) {
  auto u = unit_derivative_solution(0.5, 0.5, 0.4, Interval{0.0, 1.0}).antiderivative;
  EXPECT_FALSE(divergence_test(u, 1.6).diverges);
}
