#pragma once

#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace glrank {

struct SubCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  double budget_seconds = 0;
  double seconds = 0;
  std::vector<SubCheck> checks;
  bool pass() const;
};

// Runs the acceptance criteria (all of them when only is empty). Progress
// notes go to progress when given.
std::vector<CriterionResult> run_acceptance(const std::set<int>& only = {},
                                            std::ostream* progress = nullptr);

// One "[PASS]"/"[FAIL]" line per criterion, sub-checks indented below.
void print_results(std::ostream& out, const std::vector<CriterionResult>& results,
                   bool verbose = true);

}  // namespace glrank
