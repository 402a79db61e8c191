#pragma once

#include <string>
#include <vector>

#include "acq/category.hpp"

namespace acq {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  std::string summary() const;
};

// Runs, in order: structure, equivariance, nondegeneracy, snake, stability,
// schur, semisimplicity, completeness, rank. Never throws on bad data.
ValidationReport validate_category(const Category& c);

}  // namespace acq
