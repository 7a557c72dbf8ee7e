#include "landau/cli/commands.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "landau/errors.hpp"
#include "landau/trial_bounds.hpp"
#include "landau/verification/acceptance.hpp"

namespace landau::cli {

namespace {

template <typename T>
void read_key(const nlohmann::json& obj, const char* key, T& target) {
  if (obj.contains(key)) target = obj.at(key).get<T>();
}

void check_keys(const nlohmann::json& obj, std::initializer_list<const char*> known, const std::string& where) {
  if (!obj.is_object()) throw InputError("config: " + where + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    bool found = false;
    for (const char* k : known) found = found || key == k;
    if (!found) throw InputError("config: unknown key '" + key + "' in " + where);
  }
}

void add_groundstate_config(FlatMap& c, const GroundStateOptions& o) {
  c.set("residual_tol", o.residual_tol)
      .set("degenerate_tol", o.degenerate_tol)
      .set("eigen_abs_tol", o.eigen_abs_tol)
      .set("extrapolation_tol", o.extrapolation_tol)
      .set("domain_tol", o.domain_tol)
      .set("xi_step", o.xi_step)
      .set("min_coarse_n", o.min_coarse_n)
      .set("max_levels", o.max_levels);
}

void add_critical_config(FlatMap& c, const CriticalFieldOptions& o) {
  c.set("y_step", o.y_step)
      .set("y_margin", o.y_margin)
      .set("e1_rel_tol", o.e1_rel_tol)
      .set("extrapolation_rel_tol", o.extrapolation_rel_tol)
      .set("domain_rel_tol", o.domain_rel_tol)
      .set("max_levels", o.max_levels);
}

void add_constants_config(FlatMap& c, const PhysicalConstants& k) {
  c.set("alpha", k.alpha).set("tesla_unit", k.B_unit_tesla);
}

// Field in log form, plus the plain value when it is representable.
void set_field(FlatMap& m, const std::string& stem, double log_B) {
  m.set("log_" + stem, log_B);
  const double B = std::exp(log_B);
  if (std::isfinite(B)) m.set(stem, B);
}

void set_tesla(FlatMap& m, const std::string& stem, double log_B, const PhysicalConstants& k) {
  const double log10T = log10_tesla_of_log_B(log_B, k);
  m.set(stem + "_log10_tesla", log10T);
  const double T = std::pow(10.0, log10T);
  if (std::isfinite(T)) m.set(stem + "_tesla", T);
}

void add_critical_diagnostics(FlatMap& m, const CriticalFieldResult& r, const std::string& prefix) {
  m.set(prefix + "iterations", r.iterations);
  m.set(prefix + "L", r.L);
  m.set(prefix + "n", r.n);
  if (r.m_delta) m.set(prefix + "m_delta", *r.m_delta);
  if (r.log_kappa) m.set(prefix + "log_kappa", *r.log_kappa);
  if (r.e1) m.set(prefix + "e1", *r.e1);
  if (r.e1_bracket) {
    m.set(prefix + "e1_lower", r.e1_bracket->lower);
    m.set(prefix + "e1_upper", r.e1_bracket->upper);
  }
}

CriticalFieldResult solve_critical(const Settings& s, double delta, const std::string& method) {
  if (method == "direct") {
    if (delta < kMinDirectDelta) {
      throw DomainError("the direct method needs delta >= 0.15; use --method schrodinger for smaller couplings");
    }
    return critical_field_direct(delta, s.critical);
  }
  if (method == "schrodinger") return critical_field_schrodinger(delta, s.critical);
  if (method == "asymptotic") return critical_field_asymptotic(delta);
  if (method == "auto") {
    if (delta < kMinDelta) {
      throw DomainError("critical fields are supported for delta >= 0.01 (got " + format_double(delta) + ")");
    }
    return delta <= kMaxSchrodingerDelta ? critical_field_schrodinger(delta, s.critical)
                                         : critical_field_direct(delta, s.critical);
  }
  throw InputError("unknown method '" + method + "' (auto|direct|schrodinger|both|asymptotic)");
}

RunRecord make_record(const std::string& command) {
  RunRecord r;
  r.command = command;
  r.version = version();
  return r;
}

}  // namespace

Settings apply_config(const nlohmann::json& config, Settings s) {
  check_keys(config, {"alpha", "tesla_unit", "seed", "threads", "groundstate", "critical_field"}, "top level");
  read_key(config, "alpha", s.constants.alpha);
  read_key(config, "tesla_unit", s.constants.B_unit_tesla);
  read_key(config, "seed", s.seed);
  read_key(config, "threads", s.threads);
  if (config.contains("groundstate")) {
    const auto& g = config.at("groundstate");
    check_keys(g,
               {"residual_tol", "degenerate_tol", "eigen_abs_tol", "extrapolation_tol", "domain_tol", "xi_step",
                "min_coarse_n", "c1", "c2", "c3", "min_levels", "max_levels", "max_domain_steps",
                "max_iterations"},
               "groundstate");
    auto& o = s.groundstate;
    read_key(g, "residual_tol", o.residual_tol);
    read_key(g, "degenerate_tol", o.degenerate_tol);
    read_key(g, "eigen_abs_tol", o.eigen_abs_tol);
    read_key(g, "extrapolation_tol", o.extrapolation_tol);
    read_key(g, "domain_tol", o.domain_tol);
    read_key(g, "xi_step", o.xi_step);
    read_key(g, "min_coarse_n", o.min_coarse_n);
    read_key(g, "c1", o.c1);
    read_key(g, "c2", o.c2);
    read_key(g, "c3", o.c3);
    read_key(g, "min_levels", o.min_levels);
    read_key(g, "max_levels", o.max_levels);
    read_key(g, "max_domain_steps", o.max_domain_steps);
    read_key(g, "max_iterations", o.max_iterations);
  }
  if (config.contains("critical_field")) {
    const auto& c = config.at("critical_field");
    check_keys(c,
               {"y_step", "y_margin", "e1_rel_tol", "extrapolation_rel_tol", "domain_rel_tol", "min_levels",
                "max_levels", "max_iterations"},
               "critical_field");
    auto& o = s.critical;
    read_key(c, "y_step", o.y_step);
    read_key(c, "y_margin", o.y_margin);
    read_key(c, "e1_rel_tol", o.e1_rel_tol);
    read_key(c, "extrapolation_rel_tol", o.extrapolation_rel_tol);
    read_key(c, "domain_rel_tol", o.domain_rel_tol);
    read_key(c, "min_levels", o.min_levels);
    read_key(c, "max_levels", o.max_levels);
    read_key(c, "max_iterations", o.max_iterations);
  }
  s.constants.validate();
  return s;
}

Settings load_config_file(const std::string& path, Settings base) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("config file '" + path + "': " + e.what());
  }
  try {
    return apply_config(j, std::move(base));
  } catch (const nlohmann::json::exception& e) {
    throw InputError("config file '" + path + "': " + e.what());
  }
}

RunRecord cmd_groundstate(const Settings& s, double nu, double B, int ell) {
  RunRecord r = make_record("groundstate");
  r.inputs.set("nu", nu).set("B", B).set("ell", ell);
  add_groundstate_config(r.config, s.groundstate);
  const FixedPointResult fp = ground_state_lambda(PotentialSpec{nu, B, ell}, s.groundstate);
  r.outputs.set("lambda", fp.lambda)
      .set("degenerate", fp.degenerate)
      .set("iterations", fp.iterations)
      .set("residual", fp.residual)
      .set("L", fp.L)
      .set("n", fp.n);
  return r;
}

RunRecord cmd_critfield(const Settings& s, double nu, const std::string& method, bool tesla,
                        std::optional<int> Z) {
  RunRecord r = make_record("critfield");
  if (Z) r.inputs.set("Z", *Z);
  r.inputs.set("nu", nu).set("method", method).set("tesla", tesla);
  add_critical_config(r.config, s.critical);
  add_constants_config(r.config, s.constants);

  if (method == "both") {
    const CriticalFieldResult direct = solve_critical(s, nu, "direct");
    const CriticalFieldResult schr = solve_critical(s, nu, "schrodinger");
    set_field(r.outputs, "B_L", schr.log_BL);
    r.outputs.set("log_B_L_direct", direct.log_BL)
        .set("log_B_L_schrodinger", schr.log_BL)
        .set("rel_discrepancy", std::fabs(direct.log_BL - schr.log_BL) / std::fabs(direct.log_BL));
    add_critical_diagnostics(r.outputs, direct, "direct_");
    add_critical_diagnostics(r.outputs, schr, "schrodinger_");
    if (tesla) set_tesla(r.outputs, "B_L", schr.log_BL, s.constants);
    return r;
  }

  const CriticalFieldResult cf = solve_critical(s, nu, method);
  r.outputs.set("method_used", to_string(cf.method));
  set_field(r.outputs, "B_L", cf.log_BL);
  r.outputs.set("delta_log_B_L", nu * cf.log_BL);
  if (cf.method == CriticalMethod::asymptotic) {
    r.outputs.set("provenance", "leading order 4 delta^2 exp(pi/delta)");
  } else {
    add_critical_diagnostics(r.outputs, cf, "");
  }
  if (tesla) set_tesla(r.outputs, "B_L", cf.log_BL, s.constants);
  return r;
}

RunRecord cmd_bounds(const Settings& s, double nu, bool tesla, std::optional<int> Z) {
  RunRecord r = make_record("bounds");
  if (Z) r.inputs.set("Z", *Z);
  r.inputs.set("nu", nu).set("tesla", tesla);
  add_constants_config(r.config, s.constants);

  const HhhBounds hhh = hhh_bounds(nu);
  r.outputs.set("lower", hhh.lower).set("lower_source", "rigorous 4/(5 nu^2)");
  if (tesla) set_tesla(r.outputs, "lower", std::log(hhh.lower), s.constants);
  if (hhh.upper_gaussian) {
    r.outputs.set("upper", *hhh.upper_gaussian).set("upper_source", "Gaussian trial 18 pi nu^2/(3 nu^2-2)^2");
    if (tesla) set_tesla(r.outputs, "upper", std::log(*hhh.upper_gaussian), s.constants);
  } else {
    r.outputs.set("upper_source", "none: Gaussian trial needs nu^2 > 2/3");
  }
  return r;
}

RunRecord cmd_sandwich(const Settings& s, double nu, bool tesla) {
  RunRecord r = make_record("sandwich");
  r.inputs.set("nu", nu).set("tesla", tesla);
  add_critical_config(r.config, s.critical);
  add_constants_config(r.config, s.constants);

  const SandwichBracket b = sandwich(nu, s.constants, s.critical);
  r.outputs.set("delta_minus", b.delta_minus)
      .set("delta_plus", b.delta_plus)
      .set("lower_logB", b.lower_logB)
      .set("lower_source", "B_L(nu + nu^{3/2})")
      .set("upper_logB", b.upper_logB)
      .set("upper_source", "B_L(nu - nu^{3/2})")
      .set("analytic_lower", b.analytic_lower)
      .set("analytic_lower_source", "rigorous 4/(5 nu^2)");
  if (b.analytic_upper_gaussian) r.outputs.set("analytic_upper_gaussian", *b.analytic_upper_gaussian);
  if (tesla) {
    r.outputs.set("lower_log10_tesla", b.lower_log10_tesla)
        .set("upper_log10_tesla", b.upper_log10_tesla)
        .set("analytic_lower_tesla", b.analytic_lower_tesla);
  }
  add_critical_diagnostics(r.outputs, b.lower_solve, "lower_");
  add_critical_diagnostics(r.outputs, b.upper_solve, "upper_");
  return r;
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  if (!spec.values.empty()) return spec.values;
  if (spec.points < 2) throw InputError("sweep: --points must be >= 2");
  if (!std::isfinite(spec.from) || !std::isfinite(spec.to)) throw InputError("sweep: --from/--to must be finite");
  if (spec.log && !(spec.from > 0 && spec.to > 0)) throw InputError("sweep: --log needs positive --from and --to");
  std::vector<double> grid(spec.points);
  for (int i = 0; i < spec.points; ++i) {
    const double t = static_cast<double>(i) / (spec.points - 1);
    grid[i] = spec.log ? std::exp((1 - t) * std::log(spec.from) + t * std::log(spec.to))
                       : (1 - t) * spec.from + t * spec.to;
  }
  grid.front() = spec.from;
  grid.back() = spec.to;
  return grid;
}

SweepTable cmd_sweep(const Settings& s, const SweepSpec& spec) {
  const bool delta_sweep = spec.param == "delta";
  if (!delta_sweep && spec.param != "nu" && spec.param != "B") {
    throw InputError("sweep: --param must be nu, B or delta");
  }
  const std::vector<double> grid = sweep_grid(spec);

  SweepTable table;
  table.param = spec.param;
  table.columns = delta_sweep ? std::vector<std::string>{"index", "delta", "method", "log_BL", "delta_logBL",
                                                         "iterations", "L", "n", "status"}
                              : std::vector<std::string>{"index", "nu", "B", "ell", "lambda", "degenerate",
                                                         "iterations", "residual", "L", "n", "status"};
  table.rows.resize(grid.size());

  auto solve = [&](std::size_t i) {
    RunRecord r = make_record("sweep");
    const double x = grid[i];
    r.inputs.set("index", static_cast<std::int64_t>(i));
    if (delta_sweep) {
      r.inputs.set("delta", x).set("method", spec.method);
      add_critical_config(r.config, s.critical);
    } else {
      r.inputs.set("nu", spec.param == "nu" ? x : spec.nu)
          .set("B", spec.param == "B" ? x : spec.B)
          .set("ell", spec.ell);
      add_groundstate_config(r.config, s.groundstate);
    }
    try {
      if (delta_sweep) {
        const CriticalFieldResult cf = solve_critical(s, x, spec.method);
        r.outputs.set("log_BL", cf.log_BL)
            .set("delta_logBL", x * cf.log_BL)
            .set("iterations", cf.iterations)
            .set("L", cf.L)
            .set("n", cf.n);
      } else {
        const double nu = spec.param == "nu" ? x : spec.nu;
        const double B = spec.param == "B" ? x : spec.B;
        const FixedPointResult fp = ground_state_lambda(PotentialSpec{nu, B, spec.ell}, s.groundstate);
        r.outputs.set("lambda", fp.lambda)
            .set("degenerate", fp.degenerate)
            .set("iterations", fp.iterations)
            .set("residual", fp.residual)
            .set("L", fp.L)
            .set("n", fp.n);
      }
      r.outputs.set("status", "ok");
    } catch (const std::exception& e) {
      r.outputs = FlatMap{};
      r.outputs.set("status", std::string("error: ") + e.what());
    }
    table.rows[i] = std::move(r);
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(s.threads ? s.threads : hw, grid.size());
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) solve(i);
      });
    }
  }
  for (const auto& row : table.rows) {
    if (std::get<std::string>(*row.outputs.find("status")) != "ok") ++table.failures;
  }
  return table;
}

void write_csv(std::ostream& out, const SweepTable& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      const std::string& name = table.columns[c];
      const Value* v = row.inputs.find(name);
      if (!v) v = row.outputs.find(name);
      out << (c ? "," : "") << (v ? csv_cell(to_text(*v)) : "");
    }
    out << '\n';
  }
}

nlohmann::ordered_json sweep_json(const SweepTable& table) {
  nlohmann::ordered_json j;
  j["command"] = "sweep";
  j["version"] = version();
  j["param"] = table.param;
  j["columns"] = table.columns;
  j["failures"] = table.failures;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) j["rows"].push_back(row.to_json());
  return j;
}

void write_text(std::ostream& out, const RunRecord& record) {
  out << record.command << " (" << record.version << ")\n";
  for (const auto& [key, value] : record.inputs.entries()) out << "  " << key << " = " << to_text(value) << '\n';
  out << "results\n";
  for (const auto& [key, value] : record.outputs.entries()) out << "  " << key << " = " << to_text(value) << '\n';
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lowest Landau-level ground states and critical fields of the magnetic Dirac-Coulomb problem"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", version());

  bool json = false;
  std::string config_path;
  std::optional<double> alpha, tesla_unit;
  app.add_flag("--json", json, "JSON record on stdout");
  app.add_option("--config", config_path, "JSON config file (defaults < file < flags)");
  app.add_option("--alpha", alpha, "fine-structure constant");
  app.add_option("--tesla-unit", tesla_unit, "Tesla value of the unit field m^2c^2/(|q| hbar)");

  double nu = 0, B = 0;
  std::optional<int> Z, ell_flag, grid_n, seed;
  std::optional<double> tol;
  std::string method = "auto", level = "quick";
  bool tesla = false, timings = false;

  auto* gs = app.add_subcommand("groundstate", "ground state lambda_1^L(nu, B)");
  gs->add_option("--nu", nu, "coupling nu in (0, 1)")->required();
  gs->add_option("--B", B, "field B > 0")->required();
  gs->add_option("--ell", ell_flag, "Landau angular momentum, default 0");
  gs->add_option("--grid-n", grid_n, "minimum interior nodes on the coarsest grid");
  gs->add_option("--tol", tol, "fixed-point residual tolerance");

  auto* cf = app.add_subcommand("critfield", "critical field B_L(nu)");
  auto* cf_nu = cf->add_option("--nu", nu, "coupling delta");
  auto* cf_z = cf->add_option("--Z", Z, "nuclear charge, nu = Z alpha");
  cf_nu->excludes(cf_z);
  cf->add_option("--method", method, "auto|direct|schrodinger|both|asymptotic");
  cf->add_flag("--tesla", tesla, "report Tesla");

  auto* bd = app.add_subcommand("bounds", "analytic bounds 4/(5nu^2) <= B(nu) <= Gaussian certificate");
  auto* bd_nu = bd->add_option("--nu", nu, "coupling nu");
  auto* bd_z = bd->add_option("--Z", Z, "nuclear charge");
  bd_nu->excludes(bd_z);
  bd->add_flag("--tesla", tesla, "report Tesla");

  auto* sw = app.add_subcommand("sandwich", "B_L(nu + nu^1.5) <= B(nu) <= B_L(nu - nu^1.5)");
  sw->add_option("--nu", nu, "coupling nu < nu_bar")->required();
  sw->add_flag("--tesla", tesla, "report Tesla");

  SweepSpec sweep;
  std::string out_path, format = "csv";
  std::optional<unsigned> threads;
  auto* sp = app.add_subcommand("sweep", "parameter sweep to CSV or JSON");
  sp->add_option("--param", sweep.param, "nu|B|delta")->required();
  sp->add_option("--from", sweep.from, "first grid value");
  sp->add_option("--to", sweep.to, "last grid value");
  sp->add_option("--points", sweep.points, "number of grid points (>= 2)");
  sp->add_option("--values", sweep.values, "explicit grid, comma separated")->delimiter(',');
  sp->add_flag("--log", sweep.log, "geometric spacing");
  sp->add_option("--nu", sweep.nu, "fixed nu for B sweeps");
  sp->add_option("--B", sweep.B, "fixed B for nu sweeps");
  sp->add_option("--ell", sweep.ell, "Landau angular momentum");
  sp->add_option("--method", sweep.method, "critical-field method for delta sweeps");
  sp->add_option("--out", out_path, "output file (stdout when omitted)");
  sp->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  sp->add_option("--threads", threads, "worker threads");

  auto* vf = app.add_subcommand("verify", "acceptance suite");
  vf->add_option("--level", level, "quick|full")->check(CLI::IsMember({"quick", "full"}));
  vf->add_option("--seed", seed, "random seed");
  vf->add_flag("--timings", timings, "append per-criterion run times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  auto emit = [&](const RunRecord& r) {
    if (json) {
      out << r.to_json().dump(2) << '\n';
    } else {
      write_text(out, r);
    }
  };

  try {
    Settings s;
    if (!config_path.empty()) s = load_config_file(config_path, s);
    if (alpha) s.constants.alpha = *alpha;
    if (tesla_unit) s.constants.B_unit_tesla = *tesla_unit;
    if (threads) s.threads = *threads;
    if (seed) s.seed = static_cast<std::uint64_t>(*seed);
    s.constants.validate();

    auto coupling = [&](CLI::Option* nu_opt) {
      if (Z) return nu_of_Z(*Z, s.constants);
      if (nu_opt->count() == 0) throw InputError("one of --nu or --Z is required");
      return nu;
    };

    if (*gs) {
      if (grid_n) s.groundstate.min_coarse_n = *grid_n;
      if (tol) s.groundstate.residual_tol = *tol;
      emit(cmd_groundstate(s, nu, B, ell_flag.value_or(0)));
    } else if (*cf) {
      emit(cmd_critfield(s, coupling(cf_nu), method, tesla, Z));
    } else if (*bd) {
      emit(cmd_bounds(s, coupling(bd_nu), tesla, Z));
    } else if (*sw) {
      emit(cmd_sandwich(s, nu, tesla));
    } else if (*sp) {
      const SweepTable table = cmd_sweep(s, sweep);
      std::ostringstream buffer;
      if (format == "json") {
        buffer << sweep_json(table).dump(2) << '\n';
      } else {
        write_csv(buffer, table);
      }
      if (out_path.empty()) {
        out << buffer.str();
      } else {
        std::ofstream file(out_path);
        if (!(file << buffer.str()) || !file.flush()) {
          err << "error: cannot write '" << out_path << "'\n";
          return kIoError;
        }
      }
      if (!table.rows.empty() && table.failures == static_cast<int>(table.rows.size())) {
        err << "error: every sweep point failed\n";
        return kNonConvergence;
      }
    } else if (*vf) {
      const auto report = verification::run_acceptance(verification::parse_level(level), s.seed, s.constants);
      if (json) {
        RunRecord r = make_record("verify");
        r.inputs.set("level", level).set("seed", static_cast<std::int64_t>(s.seed));
        add_constants_config(r.config, s.constants);
        for (const auto& c : report.criteria) {
          const std::string key = "criterion_" + std::to_string(c.id);
          r.outputs.set(key, c.passed ? "PASS" : "FAIL");
          r.outputs.set(key + "_soft", c.soft);
          r.outputs.set(key + "_measured", c.measured);
          r.outputs.set(key + "_expected", c.expected);
          if (timings) r.outputs.set(key + "_seconds", c.seconds);
        }
        r.outputs.set("hard_passed", report.hard_passed());
        out << r.to_json().dump(2) << '\n';
      } else {
        verification::write_report(out, report, timings);
      }
      return report.hard_passed() ? kOk : kHardFailure;
    }
    return kOk;
  } catch (const NonConvergenceError& e) {
    err << "error: " << e.what() << " (last residual " << format_double(std::fabs(e.last() - e.previous()))
        << ")\n";
    return kNonConvergence;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const CoefficientError& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  }
}

}  // namespace landau::cli
