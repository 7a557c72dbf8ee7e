#ifndef LANDAU_VERIFICATION_ACCEPTANCE_HPP
#define LANDAU_VERIFICATION_ACCEPTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "landau/units.hpp"

namespace landau::verification {

enum class Level { quick, full };

/// Parses "quick" or "full"; throws InputError otherwise.
Level parse_level(const std::string& text);

struct CriterionResult {
  int id{0};
  std::string title;
  bool soft{false};
  bool passed{false};
  std::string measured;
  std::string expected;
  double seconds{0};
};

struct TeslaRow {
  int Z{0};
  double nu{0};
  double analytic_lower_tesla{0};  ///< 4 / (5 nu^2) in Tesla
  double quoted_lower_tesla{0};
  double log10_BL_tesla{0};
  double quoted_BL_tesla{0};
};

struct Report {
  Level level{Level::full};
  std::uint64_t seed{0};
  std::vector<CriterionResult> criteria;  ///< ordered by id
  std::vector<TeslaRow> tesla_table;

  bool hard_passed() const;
};

/// Runs criteria 1-15. The quick level drops the delta = 0.02 point of the
/// asymptotic check and uses 20 random trials per coupling instead of 200.
Report run_acceptance(Level level, std::uint64_t seed, const PhysicalConstants& constants = {});

/// One "PASS|FAIL|SOFT-PASS|SOFT-FAIL  [id] title: measured (expected)" line
/// per criterion followed by the Tesla table. Timings are omitted unless
/// requested, so a fixed seed gives identical bytes.
void write_report(std::ostream& out, const Report& report, bool with_timings = false);

}  // namespace landau::verification

#endif  // LANDAU_VERIFICATION_ACCEPTANCE_HPP
