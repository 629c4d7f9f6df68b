// Command-line surface: coefficient tables, identity verification, transform
// evaluation on grid-function files, and characteristic-function convergence
// tables. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "sbt/combinatorics.hpp"
#include "sbt/orthogonal.hpp"
#include "sbt/transform.hpp"
#include "sbt/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace sbt;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json json_rational(const Rational& r) {
  return json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

std::string csv_rational(const Rational& r) { return "\"" + to_fraction_string(r) + "\""; }

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Complex literals: "1", "-0.5", "2i", "-i", "1+2i", "0.5-0.25i", "1e-3+2e-2i".
Complex parse_complex(const std::string& text) {
  if (text.empty()) throw UsageError("empty complex literal");
  auto to_double_checked = [&](const std::string& s) {
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw UsageError("bad complex literal '" + text + "'");
    }
    if (used != s.size()) throw UsageError("bad complex literal '" + text + "'");
    return v;
  };
  if (text.back() != 'i') return Complex(to_double_checked(text), 0.0);
  std::string body = text.substr(0, text.size() - 1);
  // split at the last +/- that is not a leading sign or an exponent sign
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    char ch = body[k];
    if ((ch == '+' || ch == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    if (body.empty() || body == "+") return Complex(0.0, 1.0);
    if (body == "-") return Complex(0.0, -1.0);
    return Complex(0.0, to_double_checked(body));
  }
  std::string re = body.substr(0, split);
  std::string im = body.substr(split);
  if (im == "+") return Complex(to_double_checked(re), 1.0);
  if (im == "-") return Complex(to_double_checked(re), -1.0);
  return Complex(to_double_checked(re), to_double_checked(im));
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw UsageError("cannot open output file '" + out_path + "'");
  os << content;
}

int line_of_byte(const std::string& text, size_t byte) {
  int line = 1;
  for (size_t k = 0; k < byte && k < text.size(); ++k)
    if (text[k] == '\n') ++line;
  return line;
}

int line_of_key(const std::string& text, const std::string& key) {
  size_t pos = text.find("\"" + key + "\"");
  return pos == std::string::npos ? 1 : line_of_byte(text, pos);
}

// ----------------------------------------------------------------- coeffs --

Poly family_member(const std::string& family, const ModelParams& params, int n) {
  if (family == "charlier") return charlier_explicit(params, n);
  if (family == "hermite") return OrthogonalBasis::hermite(params.sigma, n).poly(n);
  if (family == "touchard") return touchard(n);
  if (family == "factorial") return generalized_factorial(n, params.alpha);
  if (family == "touchard-scaled") return touchard_scaled(n, params.alpha);
  if (family == "hermite-tilde") return hermite_tilde(params.sigma, n);
  throw UsageError("unknown family '" + family +
                   "' (expected charlier|hermite|touchard|factorial|touchard-scaled|hermite-tilde)");
}

int cmd_coeffs(const std::string& family, const ModelParams& params, int degree,
               const std::string& format, const std::string& out_path) {
  std::vector<Poly> rows;
  for (int n = 0; n <= degree; ++n) rows.push_back(family_member(family, params, n));
  std::ostringstream os;
  if (format == "json") {
    json doc;
    doc["family"] = family;
    doc["alpha"] = json_rational(params.alpha);
    doc["sigma"] = json_rational(params.sigma);
    doc["degree"] = degree;
    json jrows = json::array();
    for (int n = 0; n <= degree; ++n) {
      json row = json::array();
      for (int k = 0; k <= n; ++k) row.push_back(json_rational(rows[static_cast<size_t>(n)].coeff(k)));
      jrows.push_back(std::move(row));
    }
    doc["rows"] = std::move(jrows);
    os << doc.dump(2) << "\n";
  } else {
    os << "n";
    for (int k = 0; k <= degree; ++k) os << ",c" << k;
    os << "\n";
    for (int n = 0; n <= degree; ++n) {
      os << n;
      for (int k = 0; k <= degree; ++k)
        os << "," << csv_rational(rows[static_cast<size_t>(n)].coeff(k));
      os << "\n";
    }
  }
  write_output(out_path, os.str());
  return 0;
}

// ----------------------------------------------------------------- verify --

int cmd_verify(const std::string& suite, const VerifyConfig& config, const std::string& format,
               const std::string& out_path) {
  std::vector<CheckResult> results = run_suite(suite, config);
  std::ostringstream os;
  if (format == "json") {
    json doc;
    doc["suite"] = suite;
    doc["seed"] = config.seed;
    json jparams = json::array();
    for (const ModelParams& p : config.param_sets)
      jparams.push_back({{"alpha", json_rational(p.alpha)}, {"sigma", json_rational(p.sigma)}});
    doc["params"] = std::move(jparams);
    json checks = json::array();
    for (const CheckResult& r : results) {
      checks.push_back({{"suite", r.suite},
                        {"id", r.id},
                        {"status", r.pass ? "pass" : "fail"},
                        {"mode", r.exact ? "exact" : "numeric"},
                        {"seconds", r.seconds},
                        {"detail", r.detail}});
    }
    doc["checks"] = std::move(checks);
    doc["all_pass"] = all_passed(results);
    os << doc.dump(2) << "\n";
  } else {
    os << "suite,id,status,mode,seconds,detail\n";
    for (const CheckResult& r : results) {
      std::string detail = r.detail;
      for (char& ch : detail)
        if (ch == ',' || ch == '\n') ch = ';';
      os << r.suite << "," << r.id << "," << (r.pass ? "pass" : "fail") << ","
         << (r.exact ? "exact" : "numeric") << "," << r.seconds << "," << detail << "\n";
    }
  }
  write_output(out_path, os.str());
  return all_passed(results) ? 0 : 1;
}

// -------------------------------------------------------------- transform --

struct GridFile {
  ModelParams params;
  GridFunction f;
};

GridFile load_grid_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot open grid file '" + path + "'");
  std::stringstream buf;
  buf << is.rdbuf();
  std::string text = buf.str();
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("grid file " + path + ": parse error at line " +
                     std::to_string(line_of_byte(text, e.byte)) + ": " + e.what());
  }
  auto need_string = [&](const char* key) -> std::string {
    if (!doc.contains(key) || !doc[key].is_string())
      throw UsageError("grid file " + path + ": missing string field \"" + key + "\" near line " +
                       std::to_string(line_of_key(text, key)));
    return doc[key].get<std::string>();
  };
  Rational alpha, sigma;
  try {
    alpha = parse_rational(need_string("alpha"));
    sigma = parse_rational(need_string("sigma"));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("grid file " + path + ": " + e.what() + " near line " +
                     std::to_string(line_of_key(text, "alpha")));
  }
  if (!doc.contains("values") || !doc["values"].is_array())
    throw UsageError("grid file " + path + ": missing array field \"values\" near line " +
                     std::to_string(line_of_key(text, "values")));
  GridFile out{ModelParams(alpha, sigma), {}};
  for (const auto& entry : doc["values"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      throw UsageError("grid file " + path +
                       ": every value must be a [re, im] pair of numbers near line " +
                       std::to_string(line_of_key(text, "values")));
    out.f.values.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return out;
}

int cmd_transform(const std::string& path, const std::optional<Rational>& alpha_flag,
                  const std::optional<Rational>& sigma_flag, const std::vector<Complex>& points,
                  const std::string& format, const std::string& out_path) {
  GridFile grid = load_grid_file(path);
  if (alpha_flag && !(*alpha_flag == grid.params.alpha))
    throw UsageError("--alpha disagrees with the grid file (file has " +
                     to_fraction_string(grid.params.alpha) + ")");
  if (sigma_flag && !(*sigma_flag == grid.params.sigma))
    throw UsageError("--sigma disagrees with the grid file (file has " +
                     to_fraction_string(grid.params.sigma) + ")");
  std::ostringstream os;
  if (format == "json") {
    json doc;
    doc["alpha"] = json_rational(grid.params.alpha);
    doc["sigma"] = json_rational(grid.params.sigma);
    doc["support"] = grid.f.support_bound();
    json rows = json::array();
    for (const Complex& z : points) {
      TransformValue v = transform_apply(grid.f, grid.params, z);
      rows.push_back({{"z", {z.real(), z.imag()}},
                      {"value", {v.value.real(), v.value.imag()}},
                      {"tail_bound", v.tail_bound}});
    }
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << "\n";
  } else {
    os << "z_re,z_im,value_re,value_im,tail_bound\n";
    os.precision(17);
    for (const Complex& z : points) {
      TransformValue v = transform_apply(grid.f, grid.params, z);
      os << z.real() << "," << z.imag() << "," << v.value.real() << "," << v.value.imag() << ","
         << v.tail_bound << "\n";
    }
  }
  write_output(out_path, os.str());
  return 0;
}

// --------------------------------------------------------------- converge --

int cmd_converge(const Rational& sigma, const std::vector<Rational>& alphas,
                 const std::vector<double>& ys, const std::string& format,
                 const std::string& out_path) {
  for (const Rational& a : alphas)
    if (!is_positive(a)) throw UsageError("--alphas entries must be positive");
  std::ostringstream os;
  struct Row {
    Rational alpha;
    double y, phi_abs, gauss, abs_diff, gap;
  };
  std::vector<Row> rows;
  struct Summary {
    Rational alpha;
    double max_abs_diff = 0.0, max_gap = 0.0;
  };
  std::vector<Summary> summaries;
  for (const Rational& a : alphas) {
    ModelParams p(a, sigma);
    Summary s{a, 0.0, 0.0};
    for (double y : ys) {
      CharFnValue cf = centered_char_function(p, y);
      Row r;
      r.alpha = a;
      r.y = y;
      r.phi_abs = std::abs(cf.value);
      r.gauss = cf.gaussian;
      r.abs_diff = std::abs(r.phi_abs - r.gauss);
      r.gap = std::abs(cf.value - Complex(cf.gaussian, 0.0));
      s.max_abs_diff = std::max(s.max_abs_diff, r.abs_diff);
      s.max_gap = std::max(s.max_gap, r.gap);
      rows.push_back(r);
    }
    summaries.push_back(s);
  }
  if (format == "json") {
    json doc;
    doc["sigma"] = json_rational(sigma);
    json jrows = json::array();
    for (const Row& r : rows)
      jrows.push_back({{"alpha", to_fraction_string(r.alpha)},
                       {"y", r.y},
                       {"phi_abs", r.phi_abs},
                       {"gauss", r.gauss},
                       {"abs_diff", r.abs_diff},
                       {"gap", r.gap}});
    doc["rows"] = std::move(jrows);
    json jsum = json::array();
    for (const Summary& s : summaries)
      jsum.push_back({{"alpha", to_fraction_string(s.alpha)},
                      {"max_abs_diff", s.max_abs_diff},
                      {"max_gap", s.max_gap}});
    doc["summary"] = std::move(jsum);
    os << doc.dump(2) << "\n";
  } else {
    os.precision(17);
    os << "alpha,y,phi_abs,gauss,abs_diff,gap\n";
    for (const Row& r : rows)
      os << csv_rational(r.alpha) << "," << r.y << "," << r.phi_abs << "," << r.gauss << ","
         << r.abs_diff << "," << r.gap << "\n";
    os << "alpha,max_abs_diff,max_gap\n";
    for (const Summary& s : summaries)
      os << csv_rational(s.alpha) << "," << s.max_abs_diff << "," << s.max_gap << "\n";
  }
  write_output(out_path, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact umbral/operator calculus and the lattice Segal-Bargmann transform"};
  app.require_subcommand(1);
  app.fallthrough();  // shared flags may follow the subcommand name

  std::string alpha_text, sigma_text;
  int degree = 8;
  int cap = 24;
  std::string format = "json";
  unsigned seed = 12345;
  std::string out_path;

  app.add_option("--alpha", alpha_text, "lattice spacing, rational literal (p/q, integer, or exact decimal)");
  app.add_option("--sigma", sigma_text, "variance, rational literal");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--out", out_path, "output path (default stdout)");

  auto* coeffs = app.add_subcommand("coeffs", "emit a coefficient table for a polynomial family");
  std::string family;
  coeffs->add_option("family", family, "charlier|hermite|touchard|factorial|touchard-scaled|hermite-tilde")
      ->required();
  coeffs->add_option("--degree", degree, "highest row degree (<= 64)");

  auto* verify = app.add_subcommand("verify", "run identity verification suites");
  std::string suite = "all";
  std::vector<std::string> tol_pairs;
  verify->add_option("suite", suite, "all|series|operators|orthogonality|katriel|transform|hermite");
  verify->add_option("--cap", cap, "operator cap for the normal-ordering suite (<= 64)");
  verify->add_option("--tol", tol_pairs, "tolerance override name=value (repeatable)");

  auto* transform = app.add_subcommand("transform", "evaluate the transform of a grid-function file");
  std::string grid_path, points_text;
  transform->add_option("input", grid_path, "path to a grid-function JSON file")->required();
  transform->add_option("--points", points_text, "comma list of complex literals, e.g. 0.5,1+2i,-0.3i");

  auto* converge = app.add_subcommand("converge", "characteristic-function convergence table");
  std::string alphas_text = "1,1/2,1/4,1/8";
  std::string ys_text = "0.25,0.5,0.75,1,1.25,1.5,1.75,2,2.25,2.5,2.75,3";
  converge->add_option("--alphas", alphas_text, "comma list of rational lattice spacings");
  converge->add_option("--ys", ys_text, "comma list of real evaluation points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Rational alpha = alpha_text.empty() ? Rational(1) : parse_rational_flag(alpha_text, "--alpha");
    Rational sigma = sigma_text.empty() ? Rational(1) : parse_rational_flag(sigma_text, "--sigma");
    if (degree < 0 || degree > 64) throw UsageError("--degree must lie in 0..64");
    if (cap < 0 || cap > 64) throw UsageError("--cap must lie in 0..64");

    if (coeffs->parsed()) {
      ModelParams params(alpha, sigma);
      return cmd_coeffs(family, params, degree, format, out_path);
    }
    if (verify->parsed()) {
      VerifyConfig config = VerifyConfig::standard();
      if (!alpha_text.empty() || !sigma_text.empty()) config.param_sets = {ModelParams(alpha, sigma)};
      config.seed = seed;
      config.katriel_cap = cap;
      for (const std::string& pair : tol_pairs) {
        size_t eq = pair.find('=');
        if (eq == std::string::npos) throw UsageError("--tol expects name=value, got '" + pair + "'");
        try {
          config.tolerances[pair.substr(0, eq)] = std::stod(pair.substr(eq + 1));
        } catch (const std::exception&) {
          throw UsageError("--tol value is not a number in '" + pair + "'");
        }
      }
      return cmd_verify(suite, config, format, out_path);
    }
    if (transform->parsed()) {
      std::optional<Rational> alpha_flag, sigma_flag;
      if (!alpha_text.empty()) alpha_flag = alpha;
      if (!sigma_text.empty()) sigma_flag = sigma;
      std::vector<Complex> points;
      for (const std::string& item : split_list(points_text)) points.push_back(parse_complex(item));
      return cmd_transform(grid_path, alpha_flag, sigma_flag, points, format, out_path);
    }
    if (converge->parsed()) {
      std::vector<Rational> alphas;
      for (const std::string& item : split_list(alphas_text))
        alphas.push_back(parse_rational_flag(item, "--alphas"));
      std::vector<double> ys;
      for (const std::string& item : split_list(ys_text)) {
        try {
          ys.push_back(std::stod(item));
        } catch (const std::exception&) {
          throw UsageError("--ys entry is not a number: '" + item + "'");
        }
      }
      return cmd_converge(sigma, alphas, ys, format, out_path);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
