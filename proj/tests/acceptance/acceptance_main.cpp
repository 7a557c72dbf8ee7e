#include <cstdint>
#include <iostream>
#include <string>

#include "landau/verification/acceptance.hpp"

// Criteria 1-15 with the pinned tolerances; exits non-zero on a hard failure.
int main(int argc, char** argv) {
  std::string level = "full";
  std::uint64_t seed = 42;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--level") {
      level = argv[i + 1];
    } else if (flag == "--seed") {
      seed = std::stoull(argv[i + 1]);
    } else {
      std::cerr << "usage: acceptance [--level quick|full] [--seed N]\n";
      return 2;
    }
  }
  using namespace landau::verification;
  const Report report = run_acceptance(parse_level(level), seed);
  write_report(std::cout, report, true);
  return report.hard_passed() ? 0 : 1;
}
