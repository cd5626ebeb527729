#include <cstdio>
#include <iostream>

#include "hardylab/acceptance.hpp"

int main() {
  const auto results = hardylab::acceptance::run_all(std::cout);
  int passed = 0;
  for (const auto& r : results)
    if (r.pass) ++passed;
  std::printf("%d/%zu criteria passed\n", passed, results.size());
  return hardylab::acceptance::all_passed(results) ? 0 : 1;
}
