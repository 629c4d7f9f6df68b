#pragma once

#include "sbt/params.hpp"

#include <map>
#include <string>
#include <vector>

namespace sbt {

struct CheckResult {
  std::string suite;
  std::string id;
  bool pass = false;
  bool exact = false;  // exact rational identity vs. numeric tolerance
  std::string detail;
  double seconds = 0.0;
};

struct VerifyConfig {
  std::vector<ModelParams> param_sets;
  unsigned seed = 12345;
  int katriel_cap = 24;  // operator cap used by the normal-ordering suite
  std::map<std::string, double> tolerances;

  // Named tolerance with a fallback used when no override is present.
  double tolerance(const std::string& name, double fallback) const;
  // The three standard parameter sets (1,1), (1/2,3/4), (2,5).
  static VerifyConfig standard();
};

// Suite names accepted by run_suite, in reporting order ("all" not included).
const std::vector<std::string>& verify_suites();
// Runs one suite, or every suite for "all"; unknown names throw
// std::invalid_argument.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& config);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace sbt
