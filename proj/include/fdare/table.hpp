#pragma once

// Solution tables and their JSON / CSV forms.  A table holds 24 log-spaced
// points inside each endpoint fitting window plus 353 interior points, so
// boundary fits can be recomputed from the table alone.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdare/analysis.hpp"
#include "fdare/error.hpp"
#include "fdare/solver.hpp"
#include "fdare/suites.hpp"

namespace fdare {

struct TableRow {
  double x, dist_a, dist_b, u, du, dmu_left, dmu_right;
};

using SolutionTable = std::vector<TableRow>;

inline constexpr int table_interior_points = 353;

inline SolutionTable make_solution_table(const GalerkinSolution& u, const FitOptions& fit = {}) {
  const Interval& iv = u.problem().interval;
  const double L = iv.length();
  std::vector<std::pair<double, double>> pts; // (dist_a, dist_b)
  for (int i = 0; i < fit.points; ++i) {
    double d = fit.lo * std::pow(fit.hi / fit.lo, i / (fit.points - 1.0)) * L;
    pts.push_back({d, L - d});
  }
  const double lo = 2.0 * fit.hi * L;
  for (int i = 0; i < table_interior_points; ++i) {
    double d = lo + (L - 2.0 * lo) * i / (table_interior_points - 1.0);
    pts.push_back({d, L - d});
  }
  for (int i = fit.points - 1; i >= 0; --i) {
    double d = fit.lo * std::pow(fit.hi / fit.lo, i / (fit.points - 1.0)) * L;
    pts.push_back({L - d, d});
  }
  SolutionTable t;
  for (auto [da, db] : pts) {
    double x = da <= db ? iv.a + da : iv.b - db;
    t.push_back({x, da, db, u.u_d(da, db), u.du_d(da, db), u.left_dmu_d(da, db),
                 u.right_dmu_d(da, db)});
  }
  return t;
}

enum class TableColumn { u, du, dmu_left, dmu_right };

inline const char* to_string(TableColumn c) {
  switch (c) {
  case TableColumn::u: return "u";
  case TableColumn::du: return "du";
  case TableColumn::dmu_left: return "dmu_left";
  default: return "dmu_right";
  }
}

inline double column(const TableRow& r, TableColumn c) {
  switch (c) {
  case TableColumn::u: return r.u;
  case TableColumn::du: return r.du;
  case TableColumn::dmu_left: return r.dmu_left;
  default: return r.dmu_right;
  }
}

/// Fit from the rows that lie in the endpoint window.
inline ExponentFit fit_from_table(const SolutionTable& t, TableColumn c, Side end,
                                  const FitOptions& fit = {}) {
  if (t.empty())
    throw domain_error("fit_from_table: empty table");
  const double L = t.front().dist_a + t.front().dist_b;
  const Interval iv{0.0, L};
  std::vector<const TableRow*> rows;
  for (const auto& r : t) {
    double d = end == Side::left ? r.dist_a : r.dist_b;
    if (d <= fit.hi * L * (1.0 + 1e-9) && d >= fit.lo * L * (1.0 - 1e-9))
      rows.push_back(&r);
  }
  if (static_cast<int>(rows.size()) != fit.points)
    throw domain_error("fit_from_table: table does not cover the fitting window");
  std::size_t next = 0;
  if (end == Side::right)
    std::reverse(rows.begin(), rows.end());
  // fit_boundary_exponent visits the window from the endpoint outwards
  return fit_boundary_exponent(
      [&](double, double) { return column(*rows[next++], c); }, end, iv, fit);
}

struct BoundaryRecord {
  CheckRecord check;
  ExponentFit fit;
  EndpointBehavior behavior;
  std::string column;
};

/// Endpoint records: D^mu u vanishes at its own endpoint, Du is
/// never finite and nonzero, u vanishes.
inline std::vector<BoundaryRecord> boundary_records(const SolutionTable& t, bool dmu_applies,
                                                    const FitOptions& fit = {}) {
  struct Want {
    TableColumn c;
    Side end;
  };
  const Want wants[] = {{TableColumn::u, Side::left},          {TableColumn::u, Side::right},
                        {TableColumn::du, Side::left},         {TableColumn::du, Side::right},
                        {TableColumn::dmu_left, Side::left},   {TableColumn::dmu_right, Side::right}};
  std::vector<BoundaryRecord> out;
  for (const auto& w : wants) {
    BoundaryRecord r;
    r.column = to_string(w.c);
    r.fit = fit_from_table(t, w.c, w.end, fit);
    r.behavior = classify(r.fit);
    bool ok;
    std::string expect;
    if (w.c == TableColumn::du) {
      ok = r.behavior.value_class != ValueClass::finite_nonzero;
      expect = "vanishes or blows up";
    } else if (w.c == TableColumn::u) {
      ok = r.behavior.value_class == ValueClass::vanishes;
      expect = "vanishes";
    } else {
      ok = !dmu_applies || r.behavior.value_class == ValueClass::vanishes;
      expect = dmu_applies ? "vanishes" : "not required";
    }
    r.check = {std::string("boundary.") + r.column + "." + to_string(w.end), ok, r.fit.estimate,
               3.0 * r.fit.stderr_,
               std::string("class ") + to_string(r.behavior.value_class) + ", expected " + expect};
    out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------

using json = nlohmann::ordered_json;

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline json to_json(const CheckRecord& r) {
  return json{{"check", r.check},
              {"status", r.pass ? "pass" : "fail"},
              {"measured", r.measured},
              {"tolerance", r.tolerance},
              {"ref", r.ref}};
}

inline json to_json(const BoundaryRecord& b) {
  json j = to_json(b.check);
  j["column"] = b.column;
  j["endpoint"] = to_string(b.fit.endpoint);
  j["estimate"] = b.fit.estimate;
  j["stderr"] = b.fit.stderr_;
  j["window"] = {b.fit.window_lo, b.fit.window_hi};
  j["points"] = b.fit.points;
  j["value_class"] = to_string(b.behavior.value_class);
  return j;
}

inline json to_json(const SolutionTable& t) {
  json a = json::array();
  for (const auto& r : t)
    a.push_back(json{{"x", r.x},
                     {"dist_a", r.dist_a},
                     {"dist_b", r.dist_b},
                     {"u", r.u},
                     {"du", r.du},
                     {"dmu_left", r.dmu_left},
                     {"dmu_right", r.dmu_right}});
  return a;
}

inline const char* table_csv_header = "x,dist_a,dist_b,u,du,dmu_left,dmu_right";

inline std::string to_csv(const SolutionTable& t) {
  std::string s = std::string(table_csv_header) + "\n";
  for (const auto& r : t) {
    for (double v : {r.x, r.dist_a, r.dist_b, r.u, r.du, r.dmu_left, r.dmu_right}) {
      s += format_double(v);
      s += ',';
    }
    s.back() = '\n';
  }
  return s;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s)
    q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string to_csv(const std::vector<CheckRecord>& v) {
  std::string s = "check,status,measured,tolerance,ref\n";
  for (const auto& r : v)
    s += csv_field(r.check) + "," + (r.pass ? "pass" : "fail") + "," + format_double(r.measured) +
         "," + format_double(r.tolerance) + "," + csv_field(r.ref) + "\n";
  return s;
}

inline double json_number(const json& v) {
  if (v.is_number())
    return v.get<double>();
  // non-finite values are written as null
  return std::numeric_limits<double>::quiet_NaN();
}

/// Reads a table written by to_json (bare array or {"table": [...]}) or to_csv.
inline SolutionTable parse_solution_table(const std::string& text) {
  SolutionTable t;
  std::string trimmed = text.substr(std::min(text.size(), text.find_first_not_of(" \t\r\n")));
  if (!trimmed.empty() && (trimmed[0] == '{' || trimmed[0] == '[')) {
    json j;
    try {
      j = json::parse(trimmed);
    } catch (const std::exception& e) {
      throw parse_error(std::string("solution table: ") + e.what());
    }
    const json& arr = j.is_object() ? j.at("table") : j;
    for (const auto& r : arr)
      t.push_back({json_number(r.at("x")), json_number(r.at("dist_a")),
                   json_number(r.at("dist_b")), json_number(r.at("u")), json_number(r.at("du")),
                   json_number(r.at("dmu_left")), json_number(r.at("dmu_right"))});
    return t;
  }
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind(table_csv_header, 0) != 0)
    throw parse_error("solution table: missing CSV header");
  int ln = 1;
  while (std::getline(is, line)) {
    ++ln;
    if (line.empty())
      continue;
    std::vector<double> v;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ','))
      v.push_back(std::strtod(cell.c_str(), nullptr));
    if (v.size() != 7)
      throw parse_error("solution table: line " + std::to_string(ln) + ": expected 7 columns");
    t.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6]});
  }
  return t;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace fdare
