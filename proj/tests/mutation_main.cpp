// Linked against the library built with BRUHAT_MUTATE_CLIFFORD_SIGN: the braid
// criterion has to fail there.
#include <iostream>

#include "bruhat/acceptance.hpp"

int main() {
  const auto r = bruhat::run_criterion(2, bruhat::CheckLevel::fast);
  std::cout << bruhat::format_result(r) << "\n";
  if (r.passed) {
    std::cout << "mutation was not detected\n";
    return 1;
  }
  std::cout << "mutation detected\n";
  return 0;
}
