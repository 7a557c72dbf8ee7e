#include "landau/verification/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "landau/critical_field.hpp"
#include "landau/errors.hpp"
#include "landau/groundstate.hpp"
#include "landau/potentials.hpp"
#include "landau/sturm_liouville.hpp"
#include "landau/trial_bounds.hpp"
#include "landau/verification/oracles.hpp"

namespace landau::verification {

namespace {

const double kPi = std::acos(-1.0);

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// Shared between criteria: every Schrodinger-form solve is re-examined by the
// E_1 bracketing criterion.
struct Context {
  Level level;
  std::uint64_t seed;
  PhysicalConstants constants;
  std::vector<CriticalFieldResult> schrodinger_solves;

  CriticalFieldResult schrodinger(double delta) {
    schrodinger_solves.push_back(critical_field_schrodinger(delta));
    return schrodinger_solves.back();
  }
};

struct Outcome {
  bool passed;
  std::string measured, expected;
};

Outcome special_functions(Context& ctx) {
  const double a00 = landau_coulomb(0, 1.0, 0.0);
  const double err0 = std::fabs(a00 - std::sqrt(kPi / 2));
  std::mt19937_64 rng(ctx.seed);
  std::uniform_real_distribution<double> Bdist(0.1, 100.0), zdist(-50.0, 50.0);
  double worst_scaling = 0, worst_oracle = 0;
  for (int i = 0; i < 20; ++i) {
    const double B = Bdist(rng), z = zdist(rng);
    const double lhs = landau_coulomb(0, B, z);
    const double rhs = std::sqrt(B) * landau_coulomb(0, 1.0, std::sqrt(B) * z);
    worst_scaling = std::max(worst_scaling, std::fabs(lhs - rhs) / std::fabs(rhs));
    const double ref = oracle::a0_closed_form(B, z);
    worst_oracle = std::max(worst_oracle, std::fabs(lhs - ref) / ref);
  }
  return {err0 < 1e-10 && worst_scaling < 1e-10 && worst_oracle < 1e-10,
          fmt("|a0(0)-sqrt(pi/2)|=%.1e, scaling rel=%.1e, erfcx oracle rel=%.1e", err0, worst_scaling,
              worst_oracle),
          "1e-10 each, < 1 s"};
}

Outcome monotonicity(Context&) {
  double worst = -INFINITY;
  for (double B : {0.5, 1.0, 10.0}) {
    for (int k = 0; k < 50; ++k) {
      const double z = -20.0 + 40.0 * k / 49.0;
      double previous = landau_coulomb(0, B, z);
      for (int ell = 1; ell <= 5; ++ell) {
        const double current = landau_coulomb(ell, B, z);
        worst = std::max(worst, current - previous);
        previous = current;
      }
    }
  }
  return {worst < 1e-12, fmt("max(a_l - a_{l-1})=%.3e", worst), "< 1e-12"};
}

Outcome eigensolver_oracles(Context&) {
  SolverOptions opts;
  SturmLiouvilleProblem free_mode{[](double) { return 1.0; }, [](double) { return 0.0; }, kPi / 2};
  const double e_free = lowest_eigenvalue(free_mode, opts).value;

  SturmLiouvilleProblem ho{[](double) { return 1.0; }, [](double z) { return z * z; }, 8.0};
  SolverOptions grow = opts;
  grow.grow_domain = true;
  const double e_ho = lowest_eigenvalue(ho, grow).value;

  const double sigma = 2.0, V0 = 5.0;
  SturmLiouvilleProblem step{[](double) { return 1.0; },
                             [=](double z) {
                               const double d = std::fabs(z) - sigma;
                               return d < 0 ? 0.0 : (d == 0 ? 0.5 * V0 : V0);
                             },
                             8.0};
  const double e_step = lowest_eigenvalue(step, opts).value;
  const double e_ref = oracle::step_well_ground_state(sigma, V0);

  const double d1 = std::fabs(e_free - 1), d2 = std::fabs(e_ho - 1), d3 = std::fabs(e_step - e_ref);
  return {d1 < 1e-6 && d2 < 1e-6 && d3 < 1e-6,
          fmt("free %.2e, oscillator %.2e, step %.2e (root %.10f)", d1, d2, d3, e_ref), "1e-6 each, < 5 s"};
}

Outcome gaussian_closed_form(Context&) {
  double worst = 0;
  for (auto [nu, B] : {std::pair{0.85, 10.0}, {0.9, 100.0}, {0.95, 3.0}}) {
    const double G = evaluate_GB(nu, B, TrialState{0, isotropic_gaussian(B)}).G_B;
    const double ref = oracle::gaussian_G_closed_form(nu, B);
    worst = std::max(worst, std::fabs(G - ref) / std::fabs(ref));
  }
  const TrialEvaluation unit = evaluate_GB(0.5, 1.0, TrialState{0, isotropic_gaussian(1.0)});
  const double crossing = std::sqrt(unit.kinetic / unit.potential);
  const double dc = std::fabs(crossing - std::sqrt(2.0 / 3.0));
  return {worst < 1e-8 && dc < 1e-8, fmt("rel=%.2e, zero crossing off by %.2e", worst, dc), "1e-8 each"};
}

Outcome gaussian_certificate(Context&) {
  const Certificate cert = certify_critical_upper_bound(0.9, ProfileFamily::gaussian);
  const double ref = oracle::gaussian_certificate_closed_form(0.9);
  if (!cert.log_B_cert) return {false, "no certificate", fmt("%.4f within 0.1%%", ref)};
  const double B = std::exp(*cert.log_B_cert);
  const double rel = std::fabs(B - ref) / ref;
  return {rel < 1e-3, fmt("B=%.4f (rel %.1e)", B, rel), fmt("%.4f within 0.1%%", ref)};
}

Outcome fixed_point_vs_dense(Context&) {
  double worst = 0;
  for (auto [nu, B] : {std::pair{0.3, 5.0}, {0.5, 1.0}, {0.5, 10.0}}) {
    const double lib = ground_state_lambda(PotentialSpec{nu, B, 0}).lambda;
    const double ref = oracle::dense_ground_state(nu, B);
    worst = std::max(worst, std::fabs(lib - ref));
  }
  bool monotone = true;
  double previous = INFINITY;
  for (double B : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double l = ground_state_lambda(PotentialSpec{0.5, B, 0}).lambda;
    monotone = monotone && l <= previous;
    previous = l;
  }
  previous = INFINITY;
  for (double nu : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    const double l = ground_state_lambda(PotentialSpec{nu, 1.0, 0}).lambda;
    monotone = monotone && l <= previous;
    previous = l;
  }
  return {worst < 1e-4 && monotone,
          fmt("max |lambda - dense|=%.2e, nonincreasing in B and nu: %s", worst, monotone ? "yes" : "no"),
          "1e-4, monotone"};
}

Outcome scaling_law(Context&) {
  const double l1 = landau_functional_minimum(0.5, 1.0).value;
  double worst = 0;
  for (double B : {4.0, 25.0}) {
    const double lB = landau_functional_minimum(0.5, B).value;
    worst = std::max(worst, std::fabs(lB - 1 - std::sqrt(B) * (l1 - 1)));
  }
  return {worst < 1e-4, fmt("max residual %.2e", worst), "< 1e-4"};
}

Outcome cross_method(Context& ctx) {
  double worst = 0;
  for (double delta : {0.3, 0.5, 0.7}) {
    const double direct = critical_field_direct(delta).log_BL;
    const double schr = ctx.schrodinger(delta).log_BL;
    worst = std::max(worst, std::fabs(direct - schr) / std::fabs(direct));
  }
  double worst_sc = 0;
  for (double nu : {0.3, 0.5}) {
    const double logB = critical_field_direct(nu).log_BL;
    const double lambda = ground_state_lambda(PotentialSpec{nu, std::exp(logB), 0}).lambda;
    worst_sc = std::max(worst_sc, std::fabs(lambda + 1));
  }
  return {worst < 1e-3 && worst_sc < 1e-3,
          fmt("log B_L rel diff %.2e, |lambda(B_L)+1| %.2e", worst, worst_sc), "1e-3 each, < 30 s"};
}

Outcome asymptotics(Context& ctx) {
  std::vector<double> deltas{0.1, 0.05};
  if (ctx.level == Level::full) deltas.push_back(0.02);
  std::string measured;
  double previous = INFINITY, last = 0;
  bool decreasing = true;
  for (double delta : deltas) {
    const double gap = std::fabs(delta * ctx.schrodinger(delta).log_BL - kPi);
    decreasing = decreasing && gap < previous;
    previous = last = gap;
    measured += fmt("%s%g:%.5f", measured.empty() ? "" : ", ", delta, gap);
  }
  const bool near = ctx.level == Level::quick || last < 0.8;
  return {decreasing && near, "|delta log B_L - pi| at " + measured,
          ctx.level == Level::full ? "strictly decreasing, < 0.8 at 0.02, < 60 s"
                                   : "strictly decreasing (quick: 0.02 skipped)"};
}

std::string two_sig(double x) { return fmt("%.1e", x); }

Outcome tesla_rigorous(Context& ctx) {
  const std::string z40 = two_sig(tesla_of_B(hhh_bounds(nu_of_Z(40, ctx.constants)).lower, ctx.constants));
  const std::string z92 = two_sig(tesla_of_B(hhh_bounds(nu_of_Z(92, ctx.constants)).lower, ctx.constants));
  return {z40 == "4.1e+10" && z92 == "7.8e+09", "Z=40 " + z40 + " T, Z=92 " + z92 + " T",
          "4.1e+10 T, 7.8e+09 T"};
}

Outcome tesla_landau(Context& ctx, std::vector<TeslaRow>& table) {
  struct Quote {
    int Z;
    double lower, BL, orders;
  };
  bool ok = true;
  std::string measured;
  for (const Quote q : {Quote{40, 4.1e10, 2.5e16, 1.5}, Quote{92, 7.8e9, 4.6e11, 1.0}}) {
    const double nu = nu_of_Z(q.Z, ctx.constants);
    const double log10T = log10_tesla_of_log_B(ctx.schrodinger(nu).log_BL, ctx.constants);
    const double off = log10T - std::log10(q.BL);
    ok = ok && std::fabs(off) <= q.orders;
    measured += fmt("%sZ=%d log10 T=%.3f (%+.2f orders)", measured.empty() ? "" : ", ", q.Z, log10T, off);
    table.push_back({q.Z, nu, tesla_of_B(hhh_bounds(nu).lower, ctx.constants), q.lower, log10T, q.BL});
  }
  return {ok, measured, "within 1.5 orders of 2.5e16 T (Z=40), 1.0 of 4.6e11 T (Z=92)"};
}

Outcome sqrt5(Context& ctx) {
  const int samples = ctx.level == Level::full ? 200 : 20;
  bool ok = true;
  std::string measured;
  for (double nu : {0.3, 0.7}) {
    const Sqrt5Report r = check_sqrt5_inequality(nu, samples, ctx.seed);
    ok = ok && r.worst_ratio >= r.bound - 1e-8;
    measured += fmt("%snu=%g min %.4f >= %.4f", measured.empty() ? "" : ", ", nu, r.worst_ratio, r.bound);
  }
  return {ok, measured + fmt(" (%d trials each)", samples), "G_1/|phi|^2 >= -nu sqrt(5) - 1e-8"};
}

Outcome gap_constant_values(Context&) {
  const GapConstants g = gap_constants();
  const double ref = oracle::nu_bar_closed_form();
  const double d0 = g.d(0.0), d1 = g.d(1 - std::sqrt(2.0) / 2);
  const double eps = std::numeric_limits<double>::epsilon();
  const bool ok = std::fabs(g.nu_bar - 0.0561) <= 5e-4 && std::fabs(g.nu_bar - ref) < 1e-12 &&
                  d0 == std::sqrt(2.0) && std::fabs(d1) <= 4 * eps;
  return {ok, fmt("nu_bar=%.8f (closed form %.8f), d(0)=%.17g, d(1-sqrt2/2)=%.1e", g.nu_bar, ref, d0, d1),
          "0.0561 +- 5e-4, d(0)=sqrt 2, d(1-sqrt2/2)=0"};
}

Outcome sandwich_coherence(Context& ctx) {
  bool ok = true;
  std::string measured;
  for (double nu : {0.02, 0.04}) {
    const SandwichBracket s = sandwich(nu, ctx.constants);
    ctx.schrodinger_solves.push_back(s.lower_solve);
    ctx.schrodinger_solves.push_back(s.upper_solve);
    ok = ok && s.lower_logB <= s.upper_logB && std::log(s.analytic_lower) <= s.upper_logB;
    measured += fmt("%snu=%g: log B_L(d+)=%.4f, log B_L(d-)=%.4f, log(4/(5nu^2))=%.4f",
                    measured.empty() ? "" : "; ", nu, s.lower_logB, s.upper_logB, std::log(s.analytic_lower));
  }
  return {ok, measured, "B_L(d+) <= B_L(d-), 4/(5nu^2) <= B_L(d-)"};
}

Outcome e1_bracketing(Context& ctx) {
  int inside = 0, total = 0;
  for (const auto& r : ctx.schrodinger_solves) {
    if (!r.e1 || !r.e1_bracket) continue;
    ++total;
    if (*r.e1 >= r.e1_bracket->lower && *r.e1 <= r.e1_bracket->upper) ++inside;
  }
  return {total > 0 && inside == total, fmt("%d of %d solves inside", inside, total), "all"};
}

}  // namespace

Level parse_level(const std::string& text) {
  if (text == "quick") return Level::quick;
  if (text == "full") return Level::full;
  throw InputError("unknown verification level '" + text + "' (quick|full)");
}

bool Report::hard_passed() const {
  for (const auto& c : criteria) {
    if (!c.soft && !c.passed) return false;
  }
  return true;
}

Report run_acceptance(Level level, std::uint64_t seed, const PhysicalConstants& constants) {
  Context ctx{level, seed, constants, {}};
  Report report;
  report.level = level;
  report.seed = seed;

  auto run = [&](int id, std::string title, bool soft, double budget, std::function<Outcome()> body) {
    CriterionResult r{id, std::move(title), soft, false, "", "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      r.passed = o.passed;
      r.measured = std::move(o.measured);
      r.expected = std::move(o.expected);
    } catch (const std::exception& e) {
      r.measured = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget > 0 && r.seconds > budget) {
      r.passed = false;
      r.measured += fmt(" [over the %g s budget]", budget);
    }
    report.criteria.push_back(std::move(r));
  };

  run(1, "special-function exactness", false, 1, [&] { return special_functions(ctx); });
  run(2, "Landau-level monotonicity", false, 0, [&] { return monotonicity(ctx); });
  run(3, "eigensolver oracles", false, 5, [&] { return eigensolver_oracles(ctx); });
  run(4, "Gaussian trial closed form", false, 0, [&] { return gaussian_closed_form(ctx); });
  run(5, "Gaussian certificate", false, 0, [&] { return gaussian_certificate(ctx); });
  run(6, "fixed point vs dense oracle", false, 0, [&] { return fixed_point_vs_dense(ctx); });
  run(7, "scaling law", false, 0, [&] { return scaling_law(ctx); });
  run(8, "cross-method critical field", false, 30, [&] { return cross_method(ctx); });
  run(10, "asymptotics delta log B_L -> pi", false, 60, [&] { return asymptotics(ctx); });
  run(11, "Tesla numbers from 4/(5 nu^2)", false, 0, [&] { return tesla_rigorous(ctx); });
  run(12, "Tesla numbers from B_L", true, 0, [&] { return tesla_landau(ctx, report.tesla_table); });
  run(13, "sqrt(5) inequality", false, 0, [&] { return sqrt5(ctx); });
  run(14, "constants nu_bar and d", false, 0, [&] { return gap_constant_values(ctx); });
  run(15, "sandwich coherence", false, 0, [&] { return sandwich_coherence(ctx); });
  run(9, "E_1 bracketing", false, 0, [&] { return e1_bracketing(ctx); });

  std::sort(report.criteria.begin(), report.criteria.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  return report;
}

void write_report(std::ostream& out, const Report& report, bool with_timings) {
  out << "verify level=" << (report.level == Level::full ? "full" : "quick") << " seed=" << report.seed
      << '\n';
  for (const auto& c : report.criteria) {
    const char* verdict = c.soft ? (c.passed ? "SOFT-PASS" : "SOFT-FAIL") : (c.passed ? "PASS" : "FAIL");
    out << fmt("%-9s [%2d] ", verdict, c.id) << c.title << ": " << c.measured << " (expected " << c.expected
        << ')';
    if (with_timings) out << fmt(" %.2fs", c.seconds);
    out << '\n';
  }
  out << "Z   nu        4/(5nu^2) [T]  quoted      log10 B_L [T]  quoted\n";
  for (const auto& row : report.tesla_table) {
    out << fmt("%-3d %.6f  %.3e      %.1e     %.3f         %.1f\n", row.Z, row.nu, row.analytic_lower_tesla,
               row.quoted_lower_tesla, row.log10_BL_tesla, std::log10(row.quoted_BL_tesla));
  }
  out << (report.hard_passed() ? "all hard criteria passed" : "hard criteria FAILED") << '\n';
}

}  // namespace landau::verification
