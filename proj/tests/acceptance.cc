#include <chrono>
#include <iostream>

#include "belyi/corpus.hpp"

int main() {
  auto t0 = std::chrono::steady_clock::now();
  int passed = 0;
  for (int id = 1; id <= belyi::kCriterionCount; ++id) {
    belyi::CriterionResult r = belyi::run_criterion(id);
    std::cout << belyi::format_result(r) << std::endl;
    passed += r.pass;
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << passed << "/" << belyi::kCriterionCount << " criteria passed in " << s << " s\n";
  return passed == belyi::kCriterionCount ? 0 : 1;
}
