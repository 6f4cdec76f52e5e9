// Runs the ten acceptance criteria and prints one line per criterion.
#include <cstdlib>
#include <iostream>
#include <string>

#include "triexp/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = triexp::kDefaultCheckSeed;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  const auto results = triexp::run_acceptance(seed);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << "): " << r.detail << "\n";
    failed += r.passed ? 0 : 1;
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
