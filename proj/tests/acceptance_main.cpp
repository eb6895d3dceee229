// Acceptance suite runner: one PASS/FAIL line per criterion.
//
//   srf_acceptance            run all criteria
//   srf_acceptance 4 7        run only criteria 4 and 7

#include "srf/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  srf::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) options.only.push_back(std::stoi(argv[i]));
  int failed = 0;
  srf::run_acceptance(options, [&](const srf::CriterionResult& r) {
    std::cout << srf::format_result(r) << std::endl;
    if (!r.passed) ++failed;
  });
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
