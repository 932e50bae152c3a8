// Acceptance runner: one PASS/FAIL line per criterion, details indented below.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "quadnet/cli/suite.hpp"

int main(int argc, char** argv) {
  quadnet::SuiteOptions opt;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string key = argv[i];
    if (key == "--seed") opt.seed = std::strtoull(argv[i + 1], nullptr, 10);
    if (key == "--trials") opt.trials = std::atoi(argv[i + 1]);
  }
  int failed = 0;
  for (const auto& r : quadnet::run_acceptance_suite(opt)) {
    std::printf("%s %s %s (%.2f s)\n", r.id.c_str(), r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
    for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%d of 9 criteria pass\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
