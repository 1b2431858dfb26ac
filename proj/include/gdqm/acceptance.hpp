#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gdqm::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string details;
};

/// Runs every release criterion and returns one result per criterion.
std::vector<CriterionResult> run_all();

/// Prints a PASS/FAIL table; returns true when every criterion passed.
bool run_and_print(std::ostream& out);

}  // namespace gdqm::acceptance
