// Command-line surface: exact tables for the weight and the monic families,
// terminating hypergeometric evaluation, and the verification suites.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mvcheb/diffops.hpp"
#include "mvcheb/recurrence.hpp"
#include "mvcheb/render.hpp"
#include "mvcheb/special.hpp"
#include "mvcheb/verify.hpp"
#include "mvcheb/weight.hpp"

using json = nlohmann::ordered_json;
using namespace mvcheb;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

json grid_json(const MatPoly& m, char var) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(render::poly_to_string(m.at(i, j), var));
    rows.push_back(row);
  }
  return rows;
}

json grid_json(const RatMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

json grid_json(const PiMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

json grid_json_float(const MatPoly& m, double x0, int precision) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(render::double_to_string(m.at(i, j).eval_double(x0), precision));
    rows.push_back(row);
  }
  return rows;
}

// float-coefficient rendering of a polynomial grid ("0.5x^2 - 0.25" style)
json grid_json_float_coeffs(const MatPoly& m, char var, int precision) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      const Poly& p = m.at(i, j);
      std::string s;
      for (long k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        if (s.empty()) {
          if (neg) s += "-";
        } else {
          s += neg ? " - " : " + ";
        }
        s += render::double_to_string(std::fabs(c.to_double()), precision);
        if (k > 0) {
          s += var;
          if (k > 1) s += "^" + std::to_string(k);
        }
      }
      row.push_back(s.empty() ? "0" : s);
    }
    rows.push_back(row);
  }
  return rows;
}

void emit_csv_grid(const std::string& name, const json& grid) {
  for (size_t i = 0; i < grid.size(); ++i)
    for (size_t j = 0; j < grid[i].size(); ++j)
      std::cout << name << "," << i << "," << j << "," << grid[i][j].get<std::string>() << "\n";
}

void emit_pretty_grid(const std::string& name, const json& grid) {
  std::cout << name << ":\n";
  for (const auto& row : grid) {
    std::cout << "  [";
    for (size_t j = 0; j < row.size(); ++j)
      std::cout << (j ? ", " : "") << row[j].get<std::string>();
    std::cout << "]\n";
  }
}

void emit(const json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  const json& data = doc["data"];
  for (auto it = data.begin(); it != data.end(); ++it) {
    if (it.value().is_array() && !it.value().empty() && it.value().front().is_array()) {
      if (format == "csv")
        emit_csv_grid(it.key(), it.value());
      else
        emit_pretty_grid(it.key(), it.value());
    } else {
      std::string v = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
      if (format == "csv")
        std::cout << it.key() << ",,," << v << "\n";
      else
        std::cout << it.key() << " = " << v << "\n";
    }
  }
}

int cmd_weight(int twoL, const std::string& format, bool asFloat) {
  weight::WeightSpec spec{twoL};
  auto fac = weight::factorization(spec);
  auto det = weight::det_weight(spec);
  json doc;
  doc["params"] = {{"two_ell", twoL}, {"format", format}};
  json data;
  if (asFloat) {
    data["W"] = grid_json_float_coeffs(fac.polynomialPart, 'x', 15);
    data["L"] = grid_json_float_coeffs(fac.L, 'x', 15);
  } else {
    data["W"] = grid_json(fac.polynomialPart, 'x');
    data["L"] = grid_json(fac.L, 'x');
  }
  json t = json::array();
  for (const auto& [c, k] : fac.tdiag)
    t.push_back({{"c", asFloat ? render::double_to_string(c.to_double(), 15) : c.str()},
                 {"power", k}});
  data["T"] = t;
  data["det"] = {{"constant", det.constant.str()}, {"exponent", det.exponent.str()}};
  doc["data"] = data;
  doc["provenance"] = {{"equation", "ldu-factorization"}};
  if (format == "json") {
    emit(doc, format);
    return 0;
  }
  if (format == "csv") {
    emit_csv_grid("W", data["W"]);
    emit_csv_grid("L", data["L"]);
    for (size_t k = 0; k < data["T"].size(); ++k)
      std::cout << "T," << k << "," << data["T"][k]["power"] << ","
                << data["T"][k]["c"].get<std::string>() << "\n";
    std::cout << "det,constant,," << det.constant.str() << "\n";
    std::cout << "det,exponent,," << det.exponent.str() << "\n";
    return 0;
  }
  emit_pretty_grid("W", data["W"]);
  emit_pretty_grid("L", data["L"]);
  std::cout << "T:\n";
  for (const auto& e : data["T"])
    std::cout << "  " << e["c"].get<std::string>() << " * (1-x^2)^" << e["power"] << "\n";
  std::cout << "det: " << det.constant.str() << " * (1-x^2)^(" << det.exponent.str() << ")\n";
  return 0;
}

int cmd_polys(int twoL, int degree, const std::string& domain, const std::string& format,
              bool asFloat) {
  weight::WeightSpec spec{twoL};
  json doc;
  doc["params"] = {{"two_ell", twoL}, {"degree", degree}, {"domain", domain}, {"format", format}};
  json data;
  char var = domain == "u" ? 'u' : 'x';
  MatPoly table = domain == "u" ? mvop::monic_R(spec, degree) : mvop::monic_P(spec, degree);
  data[domain == "u" ? "R" : "P"] =
      asFloat ? grid_json_float_coeffs(table, var, 15) : grid_json(table, var);
  data["X"] = grid_json(mvop::recurrence_X(spec, degree));
  if (degree >= 1) data["Y"] = grid_json(mvop::recurrence_Y(spec, degree));
  data["H"] = grid_json(mvop::squared_norm_H(spec, degree));
  doc["data"] = data;
  doc["provenance"] = {{"equation", "three-term-recurrence"}};
  emit(doc, format);
  return 0;
}

int cmd_hyp(const std::string& num, const std::string& den, const std::string& z,
            const std::string& format) {
  special::HypSeriesSpec spec;
  auto split = [](const std::string& s) {
    std::vector<Rational> out;
    size_t pos = 0;
    while (pos < s.size()) {
      size_t comma = s.find(',', pos);
      if (comma == std::string::npos) comma = s.size();
      out.push_back(Rational::parse(s.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return out;
  };
  spec.numeratorParams = split(num);
  spec.denominatorParams = split(den);
  spec.argument = Rational::parse(z);
  Rational v = special::hyp_terminating(spec);
  json doc;
  doc["params"] = {{"num", num}, {"den", den}, {"z", z}};
  doc["data"] = {{"value", v.str()}};
  doc["provenance"] = {{"equation", "terminating-hypergeometric-sum"}};
  emit(doc, format);
  return 0;
}

int cmd_verify(const std::string& suite, int twoLMax, int degreeMax, const std::string& alpha,
               const std::string& format) {
  verify::Options opts;
  opts.twoLMax = twoLMax;
  opts.degreeMax = degreeMax;
  opts.alpha = Rational::parse(alpha);
  std::vector<verify::VerifyReport> reports;
  if (suite == "all")
    reports = verify::run_all(opts);
  else
    reports.push_back(verify::run_suite(suite, opts));

  bool allPass = true;
  for (const auto& r : reports) allPass = allPass && r.pass();

  if (format == "json") {
    json jreports = json::array();
    for (const auto& r : reports) {
      json cases = json::array();
      for (const auto& c : r.cases)
        cases.push_back(
            {{"id", c.caseId}, {"params", c.params}, {"pass", c.pass}, {"witness", c.witness}});
      jreports.push_back({{"suite", r.suite}, {"pass", r.pass()}, {"cases", cases}});
    }
    json doc;
    doc["params"] = {{"suite", suite},
                     {"two_ell_max", twoLMax},
                     {"degree_max", degreeMax},
                     {"alpha", alpha}};
    doc["data"] = {{"reports", jreports}, {"pass", allPass}};
    doc["provenance"] = {{"equation", "verification-suite"}};
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    for (const auto& r : reports)
      for (const auto& c : r.cases)
        std::cout << r.suite << "," << c.caseId << "," << (c.pass ? "pass" : "fail") << ","
                  << c.witness << "\n";
  } else {
    for (const auto& r : reports) {
      int failed = 0;
      for (const auto& c : r.cases)
        if (!c.pass) {
          ++failed;
          std::cout << "FAIL " << c.caseId << (c.witness.empty() ? "" : "  [" + c.witness + "]")
                    << "\n";
        }
      std::cout << (r.pass() ? "pass" : "FAIL") << " suite " << r.suite << ": "
                << r.cases.size() - failed << "/" << r.cases.size() << " cases\n";
    }
    std::cout << (allPass ? "all selected suites passed" : "verification failed") << "\n";
  }
  return allPass ? 0 : kExitVerifyFail;
}

int cmd_eval(int twoL, int degree, double x0, int precision, const std::string& format) {
  weight::WeightSpec spec{twoL};
  MatPoly p = mvop::monic_P(spec, degree);
  MatPoly w = weight::weight_poly(spec);
  double sqrtFac = std::sqrt(1.0 - x0 * x0);
  json doc;
  doc["params"] = {{"two_ell", twoL}, {"degree", degree}, {"x0", x0}, {"precision", precision}};
  json data;
  data["P"] = grid_json_float(p, x0, precision);
  json wrows = json::array();
  for (int i = 0; i < w.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < w.cols(); ++j)
      row.push_back(render::double_to_string(sqrtFac * w.at(i, j).eval_double(x0), precision));
    wrows.push_back(row);
  }
  data["W"] = wrows;
  doc["data"] = data;
  doc["provenance"] = {{"equation", "float-evaluation"}};
  emit(doc, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact matrix-valued Chebyshev-type orthogonal polynomial toolkit"};
  app.require_subcommand(1);

  std::string format = "pretty";
  int twoL = 0, degree = 0, twoLMax = 4, degreeMax = 4, precision = 15;
  std::string domain = "u", suite = "all", alpha = "1/3";
  std::string hypNum, hypDen, hypZ = "1";
  double x0 = 0.0;
  bool asFloat = false;

  auto* wcmd = app.add_subcommand("weight", "weight matrix, factorization, determinant");
  wcmd->add_option("--two-ell", twoL, "matrix size parameter 2l")->check(CLI::NonNegativeNumber);
  wcmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));
  wcmd->add_flag("--float", asFloat, "render coefficients as floats");

  auto* pcmd = app.add_subcommand("polys", "monic polynomial tables with X_n, Y_n, H_n");
  pcmd->add_option("--two-ell", twoL)->check(CLI::NonNegativeNumber);
  pcmd->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
  pcmd->add_option("--domain", domain)->check(CLI::IsMember({"x", "u"}));
  pcmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));
  pcmd->add_flag("--float", asFloat, "render coefficients as floats");

  auto* hcmd = app.add_subcommand("hyp", "terminating pFq evaluation");
  hcmd->add_option("--num", hypNum, "comma-separated numerator parameters")->required();
  hcmd->add_option("--den", hypDen, "comma-separated denominator parameters")->required();
  hcmd->add_option("--z", hypZ, "argument as p/q");
  hcmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));

  auto* vcmd = app.add_subcommand("verify", "run verification suites");
  vcmd->add_option("--suite", suite, "suite name or 'all'");
  vcmd->add_option("--two-ell-max", twoLMax)->check(CLI::NonNegativeNumber);
  vcmd->add_option("--degree-max", degreeMax)->check(CLI::NonNegativeNumber);
  vcmd->add_option("--alpha", alpha, "rational p/q for the combined operator");
  vcmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));

  auto* ecmd = app.add_subcommand("eval", "float evaluation of P_n(x0) and W(x0)");
  ecmd->add_option("--two-ell", twoL)->check(CLI::NonNegativeNumber);
  ecmd->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
  ecmd->add_option("--x0", x0)->required();
  ecmd->add_option("--precision", precision)->check(CLI::Range(1, 17));
  ecmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help path
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (wcmd->parsed()) return cmd_weight(twoL, format, asFloat);
    if (pcmd->parsed()) return cmd_polys(twoL, degree, domain, format, asFloat);
    if (hcmd->parsed()) return cmd_hyp(hypNum, hypDen, hypZ, format);
    if (vcmd->parsed()) {
      if (suite != "all" && !verify::is_suite(suite)) {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return kExitUsage;
      }
      return cmd_verify(suite, twoLMax, degreeMax, alpha, format);
    }
    if (ecmd->parsed()) {
      if (x0 < -1.0 || x0 > 1.0) {
        std::cerr << "error: x0 must lie in [-1, 1]\n";
        return kExitUsage;
      }
      return cmd_eval(twoL, degree, x0, precision, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
