#include <cmath>

#include <gtest/gtest.h>

#include "fdare/abel.hpp"
#include "fdare/suites.hpp"
#include "oracles/values.hpp"

using namespace fdare;

TEST(Exponents, MatchReferenceRoots) {
  for (const auto& c : oracle::exponent_cases) {
    auto e = solve_exponents(c.g1, c.g2, c.t);
    EXPECT_NEAR(e.p, c.p, 1e-13);
    EXPECT_NEAR(e.q, c.q, 1e-13);
    EXPECT_LT(e.sum_residual(), 1e-14);
    EXPECT_LT(e.sine_residual(), 1e-13);
  }
}

TEST(Exponents, SymmetricIsHalfOrder) {
  for (double t : {0.1, 0.5, 0.99}) {
    auto e = solve_exponents(0.5, 0.5, t);
    EXPECT_NEAR(e.p, -t / 2, 1e-15);
    EXPECT_NEAR(e.q, -t / 2, 1e-15);
  }
}

TEST(UnitImage, SolutionHasUnitImage) {
  Interval iv{-0.5, 1.7};
  auto u = unit_image_solution(0.8, 0.35, 0.6, iv);
  for (double x : interior_points(iv, 20)) {
    double v = 0.8 * rl_integral_numeric(Side::left, 0.6, as_callable(u), x) +
               0.35 * rl_integral_numeric(Side::right, 0.6, as_callable(u), x);
    EXPECT_NEAR(v, 1.0, 1e-9) << x;
  }
}

TEST(UnitDerivative, DerivativeOfImageIsOne) {
  Interval iv{0.0, 2.0};
  auto s = unit_derivative_solution(0.3, 0.9, 0.45, iv);
  for (double x : interior_points(iv, 20))
    EXPECT_NEAR(two_sided_integral_derivative(0.3, 0.9, 0.45, s.u, x), 1.0, 1e-10) << x;
}

TEST(UnitDerivative, AntiderivativeMatchesSolution) {
  Interval iv{0.0, 1.0};
  auto s = unit_derivative_solution(0.6, 0.4, 0.5, iv);
  double x = 0.37, h = 1e-6;
  double fd = (s.antiderivative(x + h) - s.antiderivative(x - h)) / (2 * h);
  EXPECT_NEAR(fd, s.u(x), 1e-8);
}

TEST(UnitDerivative, SymmetricConstantCoefficientOracle) {
  // u = c (x(1-x))^((1+mu)/2) solves -D (1/2)(I_l + I_r)^(1-mu) u' = -1
  for (const auto& c : oracle::symmetric_cases) {
    Interval iv{0.0, 1.0};
    auto s = unit_derivative_solution(0.5, 0.5, 1.0 - c.mu, iv);
    EXPECT_NEAR(s.exps.p + 1.0, 0.5 * (1.0 + c.mu), 1e-14);
    double x = 0.3;
    EXPECT_NEAR(s.antiderivative(x), c.c * std::pow(x * (1 - x), 0.5 * (1 + c.mu)), 1e-12);
  }
}

TEST(Validation, RejectsInadmissibleParameters) {
  EXPECT_THROW(solve_exponents(0.5, 0.5, 1.2), domain_error);
  EXPECT_THROW(solve_exponents(-0.1, 0.5, 0.5), domain_error);
}

TEST(Suite, AllPropertiesPass) {
  for (const auto& r : abel_suite(3))
    EXPECT_TRUE(r.pass) << r.check << " measured " << r.measured;
}
