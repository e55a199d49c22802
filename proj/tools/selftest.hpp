#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypf::selftest {

struct Check {
  int id = 0;
  std::string name;
  bool pass = true;
  double seconds = 0.0;
  std::vector<std::string> details;  // one line per sub-check
};

// Criteria 1–9; `only` selects a single criterion when nonzero.
std::vector<Check> run_acceptance(int only = 0, std::ostream* progress = nullptr);
// A fast subset with known-good targets.
std::vector<Check> run_quick();

void print_report(const std::vector<Check>& checks, std::ostream& out, bool verbose);

}  // namespace hypf::selftest
