#pragma once

#include <string>
#include <vector>

namespace motivic {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Names of the bundled verification checks, in their canonical run order.
std::vector<std::string> check_names();

/// Runs one named check. `order` overrides the default expansion order where
/// a check has one (values below the check's minimum are raised to it); pass
/// -1 for the default. `jobs` is forwarded to point enumeration.
CheckResult run_check(const std::string& name, int order = -1, int jobs = 1);

std::vector<CheckResult> run_all_checks(int jobs = 1);

}  // namespace motivic
