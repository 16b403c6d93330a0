#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sliceforge {

// One verified inequality, limit, or property. empirical_constant is the
// smallest constant observed to make the statement true on the stated grid;
// max_violation is the worst signed excess over the claimed bound (<= 0 when
// the bound holds outright).
struct CheckResult {
  std::string name;
  std::map<std::string, double> params;
  std::map<std::string, double> grid;
  double empirical_constant = 0.0;
  double max_violation = 0.0;
  bool pass = false;
  std::string notes;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace sliceforge
