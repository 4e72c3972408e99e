#pragma once

// Line-oriented problem files:
//
//   # comment
//   interval = 0, 1
//   mu       = 0.5
//   alpha    = 0.5            (beta = 1 - alpha unless given)
//   k        = poly:1          poly:c0,c1,..  exp-poly:c0,..  trig:c0,a1,b1,..
//   adv      = poly:0
//   reac     = poly:0
//   source   = power:-1/0/0    coefficients / exp_a / exp_b
//
// "power:c0,..,cn,ea,eb" (no slashes) is also accepted: the last two entries
// are the exponents.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fdare/error.hpp"
#include "fdare/fraccalc.hpp"
#include "fdare/solver.hpp"

namespace fdare {

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep)
    out.push_back("");
  return out;
}

struct FieldError {
  int line;
  std::string field;
  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error("line " + std::to_string(line) + ": " + field + ": " + msg);
  }
};

inline double to_number(const std::string& s, const FieldError& at) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    at.fail("expected a number, got '" + s + "'");
  }
  if (used != s.size())
    at.fail("expected a number, got '" + s + "'");
  return v;
}

inline std::vector<double> to_numbers(const std::string& s, const FieldError& at) {
  std::vector<double> out;
  for (const auto& t : split(s, ','))
    out.push_back(to_number(t, at));
  if (out.empty())
    at.fail("empty coefficient list");
  return out;
}

} // namespace detail

inline CoefficientFunction parse_coefficient(const std::string& text, int line = 0,
                                             const std::string& field = "coefficient") {
  detail::FieldError at{line, field};
  auto colon = text.find(':');
  if (colon == std::string::npos)
    at.fail("expected kind:coefficients");
  std::string kind = detail::trim(text.substr(0, colon));
  auto c = detail::to_numbers(text.substr(colon + 1), at);
  if (kind == "poly")
    return CoefficientFunction::polynomial(c);
  if (kind == "exp-poly")
    return CoefficientFunction::exp_poly(c);
  if (kind == "trig")
    return CoefficientFunction::trig(c);
  at.fail("unknown coefficient kind '" + kind + "'");
}

inline PowerWeightedFunction parse_source(const std::string& text, const Interval& iv,
                                          int line = 0) {
  detail::FieldError at{line, "source"};
  auto colon = text.find(':');
  if (colon == std::string::npos || detail::trim(text.substr(0, colon)) != "power")
    at.fail("expected power:coefficients/exp_a/exp_b");
  std::string body = text.substr(colon + 1);
  std::vector<double> coeffs;
  double ea = 0.0, eb = 0.0;
  if (body.find('/') != std::string::npos) {
    auto parts = detail::split(body, '/');
    if (parts.size() != 3)
      at.fail("expected coefficients/exp_a/exp_b");
    coeffs = detail::to_numbers(parts[0], at);
    ea = detail::to_number(parts[1], at);
    eb = detail::to_number(parts[2], at);
  } else {
    auto all = detail::to_numbers(body, at);
    if (all.size() < 3)
      at.fail("expected at least one coefficient and two exponents");
    eb = all.back();
    all.pop_back();
    ea = all.back();
    all.pop_back();
    coeffs = all;
  }
  try {
    return PowerWeightedFunction(coeffs, ea, eb, iv);
  } catch (const domain_error& e) {
    at.fail(e.what());
  }
}

struct ParseOptions {
  /// run check_wellposedness and throw condition_error on failure
  bool check_conditions = true;
};

inline ProblemSpec parse_problem_text(const std::string& text, const ParseOptions& opt = {}) {
  std::map<std::string, std::pair<std::string, int>> kv;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = detail::trim(raw.substr(0, hash));
    if (line.empty())
      continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw parse_error("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = detail::trim(line.substr(0, eq));
    std::string val = detail::trim(line.substr(eq + 1));
    static const char* known[] = {"interval", "mu", "alpha", "beta", "k", "adv", "reac", "source"};
    bool ok = false;
    for (const char* k : known)
      ok = ok || key == k;
    if (!ok)
      throw parse_error("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (kv.count(key))
      throw parse_error("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    kv[key] = {val, lineno};
  }
  for (const char* req : {"interval", "mu", "alpha", "k", "source"})
    if (!kv.count(req))
      throw parse_error(std::string("missing key '") + req + "'");

  ProblemSpec pb;
  {
    auto [v, ln] = kv["interval"];
    detail::FieldError at{ln, "interval"};
    std::string s = v;
    auto dots = s.find("..");
    if (dots != std::string::npos)
      s = s.substr(0, dots) + "," + s.substr(dots + 2);
    auto ab = detail::to_numbers(s, at);
    if (ab.size() != 2)
      at.fail("expected a, b");
    if (!(ab[0] < ab[1]))
      at.fail("need a < b");
    pb.interval = Interval{ab[0], ab[1]};
  }
  auto number = [&](const char* key) {
    auto [v, ln] = kv[key];
    return detail::to_number(v, {ln, key});
  };
  pb.mu = number("mu");
  if (opt.check_conditions && !(pb.mu > 0.0 && pb.mu < 1.0))
    throw condition_error("order", "mu must lie in (0,1)");
  pb.alpha = number("alpha");
  pb.beta = kv.count("beta") ? number("beta") : 1.0 - pb.alpha;
  pb.k = parse_coefficient(kv["k"].first, kv["k"].second, "k");
  if (kv.count("adv"))
    pb.adv = parse_coefficient(kv["adv"].first, kv["adv"].second, "adv");
  if (kv.count("reac"))
    pb.reac = parse_coefficient(kv["reac"].first, kv["reac"].second, "reac");
  pb.source = parse_source(kv["source"].first, pb.interval, kv["source"].second);
  if (opt.check_conditions)
    require_wellposed(pb);
  return pb;
}

inline ProblemSpec parse_problem_file(const std::string& path, const ParseOptions& opt = {}) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot open problem file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem_text(ss.str(), opt);
}

} // namespace fdare
