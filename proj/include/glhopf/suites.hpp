#pragma once

#include <string>
#include <vector>

#include "glhopf/hc.hpp"
#include "glhopf/io.hpp"

namespace glhopf {

/// One line of a suite run: a named check with its verdict and JSON report.
struct SuiteEntry {
  std::string suite;
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string witness;
  Json report;
};

SuiteEntry suite_entry(std::string suite, const HCReport& r);
SuiteEntry suite_entry(std::string suite, const PSHReport& r);

/// Suite names in the order they run.
const std::vector<std::string>& suite_names();
/// Expands "all" and sorts into run order; throws ConfigError on unknown names.
std::vector<std::string> resolve_suites(const std::vector<std::string>& requested);

/// The classifier's orbit partition of gl_n equals the brute-force partition
/// under conjugation by generators, with matching sizes; sizes sum to
/// q^(n^2), the group order matches the product formula, and the nilpotent
/// orbits are counted by partitions of n.
HCReport verify_orbit_oracle(Algebra& alg, int n);
/// (1, 1) in degrees 1 and 2 equals q/(q-1) and q^4 / (q (q-1)^2 (q+1)).
HCReport verify_constant_norms(Algebra& alg);

/// Runs one named suite for degrees up to max_n.
std::vector<SuiteEntry> run_suite(Algebra& alg, const std::string& suite, int max_n);

}  // namespace glhopf
