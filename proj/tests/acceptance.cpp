#include <iostream>
#include <set>
#include <string>

#include "glrank/verify.hpp"

// Runs every acceptance criterion; optional arguments select criterion ids.
int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));
  auto results = glrank::run_acceptance(only, &std::cerr);
  glrank::print_results(std::cout, results);
  for (const auto& r : results)
    if (!r.pass()) return 1;
  return 0;
}
