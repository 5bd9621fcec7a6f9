// Runs every acceptance criterion and prints one PASS/FAIL line for each.
#include <cstring>
#include <iostream>

#include "bruhat/acceptance.hpp"

int main(int argc, char** argv) {
  bruhat::CheckLevel level = bruhat::CheckLevel::full;
  if (argc == 3 && std::strcmp(argv[1], "--level") == 0 && std::strcmp(argv[2], "fast") == 0) {
    level = bruhat::CheckLevel::fast;
  }
  int failed = 0;
  bruhat::run_acceptance(level, {}, [&](const bruhat::CriterionResult& r) {
    if (!r.passed) ++failed;
    std::cout << bruhat::format_result(r) << std::endl;
  });
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
