#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sliceforge/proximate.hpp"
#include "sliceforge/report.hpp"

namespace sliceforge {

// Knobs shared by the verification suites. Every randomized check derives
// its stream from seed, so a fixed config reproduces reports byte for byte.
struct SuiteConfig {
  std::uint64_t seed = 2026;
  int n = 3;          // Clifford dimension for randomized algebra checks
  int trials = 200;   // randomized cases per check
  std::string family = "constant";  // proximate order under test
  double rho = 1.0;
  double b = 0.3;                 // log-shift offset
  double r0 = 7.389056098930650;  // log-shift threshold (e^2)
};

// the proximate order selected by cfg.family ("constant", "log-shift",
// "table"), normalized
ProximateOrder suite_order(const SuiteConfig& cfg);

// suites runnable one at a time; "all" is accepted by run_suites only
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg = {});

// "all" expands to every suite (the proximate-order suite once per family);
// any other name gives a single-element vector
std::vector<SuiteReport> run_suites(const std::string& name,
                                    const SuiteConfig& cfg = {});

}  // namespace sliceforge
