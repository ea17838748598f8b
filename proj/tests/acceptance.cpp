// Acceptance suite: runs every bundled verification check and prints one
// pass/fail line per criterion. Exits nonzero when any criterion fails.
// All comparisons inside the checks are exact; there are no tolerances.

#include <iostream>

#include "motivic/checks.hpp"

int main() {
  const std::vector<std::pair<int, std::string>> criteria = {
      {1, "gaussian-symmetric-counts"},
      {2, "projective-zeta-rational"},
      {3, "zeta-group-scaling"},
      {4, "conic-zeta"},
      {5, "index2-product"},
      {6, "sb-surface"},
      {7, "mod-l-rationality"},
      {8, "g-divisibility"},
      {9, "blowup"},
      {10, "multisym"},
      {11, "rational-reconstruction"},
  };
  bool all_ok = true;
  for (const auto& [number, name] : criteria) {
    motivic::CheckResult result = motivic::run_check(name);
    all_ok = all_ok && result.ok;
    std::cout << (result.ok ? "PASS" : "FAIL") << " [" << number << "] " << name << ": "
              << result.detail << "\n";
  }
  std::cout << (all_ok ? "ACCEPTANCE OK" : "ACCEPTANCE FAILED") << "\n";
  return all_ok ? 0 : 1;
}
