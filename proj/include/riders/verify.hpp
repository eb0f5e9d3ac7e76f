#pragma once

// The acceptance battery: criteria 1-9, each reported pass/fail with a
// one-line detail.

#include "riders/bounds.hpp"
#include "riders/enumerator.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace riders {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  /// Run the optional nightrider q=4 lcmd job under criterion 9.
  bool stretch = false;
  /// Empty means all criteria.
  std::set<int> only;
  EnumerationOptions enumeration;
  BoundsOptions bounds;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_acceptance_suite(const VerifyOptions& opts = {});

/// {"criteria": [{"detail", "id", "name", "pass"}], "pass": bool}. Timings
/// are left out so output is reproducible.
std::string suite_json(const std::vector<CriterionResult>& results);

/// "Criterion k: PASS - name: detail"
std::string format_line(const CriterionResult& r);

}  // namespace riders
