// Runs acceptance criteria 1–9 and prints one PASS/FAIL line per criterion.
// Exit status is 1 when any criterion fails, unless --report is given.
#include <CLI11.hpp>
#include <iostream>

#include "selftest.hpp"

int main(int argc, char** argv) {
  CLI::App app{"hypf acceptance runner"};
  bool report = false, quiet = false;
  int only = 0;
  app.add_flag("--report", report, "always exit 0 after printing the results");
  app.add_flag("--quiet", quiet, "omit the per-check details");
  app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const auto checks = hypf::selftest::run_acceptance(only, &std::cerr);
  hypf::selftest::print_report(checks, std::cout, !quiet);
  int failed = 0;
  for (const auto& c : checks) failed += c.pass ? 0 : 1;
  std::cout << (checks.size() - failed) << "/" << checks.size() << " criteria passed\n";
  return failed > 0 && !report ? 1 : 0;
}
