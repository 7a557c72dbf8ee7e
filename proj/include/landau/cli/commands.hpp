#ifndef LANDAU_CLI_COMMANDS_HPP
#define LANDAU_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "landau/cli/run_record.hpp"
#include "landau/critical_field.hpp"
#include "landau/groundstate.hpp"
#include "landau/units.hpp"

namespace landau::cli {

enum ExitCode : int {
  kOk = 0,
  kHardFailure = 1,     ///< verify: a hard criterion failed
  kInvalidInput = 2,
  kNonConvergence = 3,  ///< solver did not converge or a bracket failed
  kIoError = 4,
};

/// Everything a command reads besides its own flags.
struct Settings {
  PhysicalConstants constants{};
  GroundStateOptions groundstate{};
  CriticalFieldOptions critical{};
  std::uint64_t seed{42};
  unsigned threads{0};  ///< sweep workers; 0 = hardware concurrency
};

/// Overlays a JSON config file on `base`. Recognised keys: alpha, tesla_unit,
/// seed, threads, and the objects "groundstate" {residual_tol, degenerate_tol,
/// eigen_abs_tol, extrapolation_tol, domain_tol, xi_step, min_coarse_n, c1,
/// c2, c3, min_levels, max_levels, max_domain_steps, max_iterations} and
/// "critical_field" {y_step, y_margin, e1_rel_tol, extrapolation_rel_tol,
/// domain_rel_tol, min_levels, max_levels, max_iterations}. Unknown keys are
/// an InputError.
Settings apply_config(const nlohmann::json& config, Settings base);
Settings load_config_file(const std::string& path, Settings base);

RunRecord cmd_groundstate(const Settings& s, double nu, double B, int ell = 0);

/// method: auto | direct | schrodinger | both | asymptotic. auto picks the
/// Schrodinger form up to delta = 0.7 and the direct route above.
RunRecord cmd_critfield(const Settings& s, double nu, const std::string& method = "auto", bool tesla = false,
                        std::optional<int> Z = std::nullopt);

RunRecord cmd_bounds(const Settings& s, double nu, bool tesla = false, std::optional<int> Z = std::nullopt);

RunRecord cmd_sandwich(const Settings& s, double nu, bool tesla = false);

struct SweepSpec {
  std::string param{"delta"};  ///< nu | B | delta
  std::vector<double> values;  ///< explicit grid; otherwise from/to/points
  double from{0}, to{0};
  int points{0};
  bool log{false};
  double nu{0.5};  ///< fixed coupling for B sweeps
  double B{1.0};   ///< fixed field for nu sweeps
  int ell{0};
  std::string method{"auto"};  ///< delta sweeps
};

/// Grid values in input order.
std::vector<double> sweep_grid(const SweepSpec& spec);

struct SweepTable {
  std::string param;
  std::vector<std::string> columns;
  std::vector<RunRecord> rows;  ///< input order
  int failures{0};
};

/// CSV columns:
///   nu, B sweeps: index,nu,B,ell,lambda,degenerate,iterations,residual,L,n,status
///   delta sweeps: index,delta,method,log_BL,delta_logBL,iterations,L,n,status
SweepTable cmd_sweep(const Settings& s, const SweepSpec& spec);

void write_csv(std::ostream& out, const SweepTable& table);
nlohmann::ordered_json sweep_json(const SweepTable& table);

/// Human-readable rendering of a record.
void write_text(std::ostream& out, const RunRecord& record);

/// Entry point: parses argv, runs one subcommand, returns the exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace landau::cli

#endif  // LANDAU_CLI_COMMANDS_HPP
