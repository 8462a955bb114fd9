#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "glhopf/field.hpp"

namespace glhopf {

/// Outcome of one exact identity check. A failing report always names the
/// first offending entry in `witness`.
struct HCReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool passed = true;
  std::size_t checks = 0;
  std::string witness;

  HCReport& param(std::string key, std::string value) {
    parameters.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  HCReport& param(std::string key, long long value) { return param(std::move(key), std::to_string(value)); }
  /// Records one comparison; keeps the first failure.
  void record(bool ok, const std::string& where) {
    ++checks;
    if (!ok && passed) {
      passed = false;
      witness = where;
    }
  }
  /// Folds a sub-report in, prefixing its witness.
  void absorb(const HCReport& sub) {
    checks += sub.checks;
    if (!sub.passed && passed) {
      passed = false;
      witness = sub.identity + ": " + sub.witness;
    }
  }
};

struct PSHReport {
  std::string axiom;
  int min_degree = 0;
  int max_degree = 0;
  bool passed = true;
  std::size_t checks = 0;
  std::string witness;
  std::optional<SqrtRational> value;

  void record(bool ok, const std::string& where) {
    ++checks;
    if (!ok && passed) {
      passed = false;
      witness = where;
    }
  }
};

nlohmann::ordered_json to_json(const HCReport& r);
nlohmann::ordered_json to_json(const PSHReport& r);

}  // namespace glhopf
