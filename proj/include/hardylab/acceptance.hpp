#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hardylab::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the full desk-scale verification battery, one criterion at a time,
// printing a PASS/FAIL line per criterion as it finishes. Tolerances are
// pinned inside each criterion.
std::vector<CriterionResult> run_all(std::ostream& os);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace hardylab::acceptance
