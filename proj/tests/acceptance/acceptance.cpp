// One PASS/FAIL line per acceptance criterion; exit status 1 on any failure.

#include "riders/verify.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
  riders::VerifyOptions opts;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--stretch") == 0) opts.stretch = true;
    else opts.only.insert(std::atoi(argv[k]));
  }
  opts.on_result = [](const riders::CriterionResult& r) {
    std::cout << riders::format_line(r) << "  [" << r.seconds << " s]" << std::endl;
  };
  const auto results = riders::run_acceptance_suite(opts);
  for (const auto& r : results)
    if (!r.pass) return 1;
  return 0;
}
