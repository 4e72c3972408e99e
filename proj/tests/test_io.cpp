#include <cmath>

#include <gtest/gtest.h>

#include "fdare/problem_io.hpp"
#include "fdare/table.hpp"

using namespace fdare;

namespace {
const char* minimal =
    "interval = 0..1\nmu = 0.5\nalpha = 0.5\nk = poly:1\nadv = poly:0\nreac = poly:0\n"
    "source = power:-1,0,0\n";
}

TEST(ProblemFile, MinimalIsValid) {
  auto pb = parse_problem_text(minimal);
  EXPECT_EQ(pb.interval.a, 0.0);
  EXPECT_EQ(pb.interval.b, 1.0);
  EXPECT_EQ(pb.beta, 0.5);
  EXPECT_EQ(pb.source.exp_a(), 0.0);
  EXPECT_EQ(pb.source.coeffs().size(), 1u);
}

TEST(ProblemFile, SlashSourceForm) {
  auto pb = parse_problem_text(
      "interval = 0, 2\nmu = 0.6\nalpha = 0.5\nk = exp-poly:0,0.1\nsource = power:1,2/-0.5/0.25\n");
  EXPECT_EQ(pb.source.coeffs().size(), 2u);
  EXPECT_EQ(pb.source.exp_a(), -0.5);
  EXPECT_EQ(pb.source.exp_b(), 0.25);
}

TEST(ProblemFile, OrderOutOfRange) {
  try {
    parse_problem_text("interval = 0, 1\nmu = 1.2\nalpha = 0.5\nk = poly:1\nsource = power:-1,0,0\n");
    FAIL();
  } catch (const condition_error& e) {
    EXPECT_NE(std::string(e.what()).find("mu must lie in (0,1)"), std::string::npos);
  }
}

TEST(ProblemFile, PositivityViolation) {
  try {
    parse_problem_text(
        "interval = 0, 1\nmu = 0.5\nalpha = 0.5\nk = poly:1,-2\nsource = power:-1,0,0\n");
    FAIL();
  } catch (const condition_error& e) {
    EXPECT_NE(e.condition().find("positivity"), std::string::npos);
  }
}

TEST(ProblemFile, ParseErrorsCarryLineAndField) {
  try {
    parse_problem_text(
        "interval = 0, 1\nmu = abc\nalpha = 0.5\nk = poly:1\nsource = power:-1,0,0\n");
    FAIL();
  } catch (const parse_error& e) {
    std::string m = e.what();
    EXPECT_NE(m.find("line 2"), std::string::npos);
    EXPECT_NE(m.find("mu"), std::string::npos);
  }
  EXPECT_THROW(parse_problem_text("interval = 0, 1\nbogus = 3\n"), parse_error);
  EXPECT_THROW(parse_problem_text("interval = 0, 1\ninterval = 0, 2\n"), parse_error);
  EXPECT_THROW(parse_problem_text("mu = 0.5\n"), parse_error);
  EXPECT_THROW(parse_coefficient("spline:1,2"), parse_error);
  EXPECT_THROW(parse_source("power:1,2", Interval{0, 1}), parse_error);
}

TEST(ProblemFile, ConditionsCanBeDeferred) {
  ParseOptions opt;
  opt.check_conditions = false;
  auto pb = parse_problem_text(
      "interval = 0, 1\nmu = 0.5\nalpha = 0.5\nk = poly:1,-2\nsource = power:-1,0,0\n", opt);
  EXPECT_FALSE(check_wellposedness(pb).pass);
}

TEST(Table, LayoutAndRoundTrip) {
  auto u = solve_weak(parse_problem_text(minimal), 8);
  auto t = make_solution_table(u);
  ASSERT_EQ(t.size(), 401u);
  for (std::size_t i = 1; i < t.size(); ++i)
    EXPECT_LT(t[i - 1].x, t[i].x);
  auto a = boundary_records(t, true);
  for (const auto& text : {to_csv(t), to_json(t).dump()}) {
    auto b = boundary_records(parse_solution_table(text), true);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_NEAR(a[i].fit.estimate, b[i].fit.estimate, 1e-12);
      EXPECT_NEAR(a[i].fit.stderr_, b[i].fit.stderr_, 1e-12);
    }
  }
}

TEST(Table, TableFitsMatchDirectFits) {
  auto u = solve_weak(parse_problem_text(minimal), 8);
  auto t = make_solution_table(u);
  auto direct = fit_boundary_exponent([&](double da, double db) { return u.left_dmu_d(da, db); },
                                      Side::left, u.problem().interval);
  EXPECT_NEAR(fit_from_table(t, TableColumn::dmu_left, Side::left).estimate, direct.estimate,
              1e-12);
}

TEST(Table, RejectsMalformedInput) {
  EXPECT_THROW(parse_solution_table("a,b\n1,2\n"), parse_error);
  EXPECT_THROW(parse_solution_table("[{\"x\": 1}"), parse_error);
  EXPECT_THROW(fit_from_table({}, TableColumn::u, Side::left), domain_error);
}

TEST(Records, JsonSchema) {
  auto j = to_json(CheckRecord{"c", true, 1e-3, 1e-2, "r"});
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it)
    keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"check", "status", "measured", "tolerance", "ref"}));
  EXPECT_EQ(j["status"], "pass");
}
