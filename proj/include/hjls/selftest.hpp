#pragma once

#include <string>
#include <vector>

namespace hjls {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fast invariant checks over every module (orders of accuracy, weights,
/// RK stage algebra, max principle, Hamiltonian oracle, a small BRT).
std::vector<CheckResult> run_selftest();

}  // namespace hjls
