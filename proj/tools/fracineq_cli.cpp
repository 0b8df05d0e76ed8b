// Command-line front end: identity sweeps, theorem-bound sweeps with
// certification gating, envelope certification, randomized falsification,
// scalar special-function evaluation, and JSON-to-CSV conversion.
//
// Exit codes: 0 = everything passed, 1 = run completed with findings
// (flag/fail/error rows), 2 = usage or configuration error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracineq/bounds.hpp"
#include "fracineq/config.hpp"
#include "fracineq/report.hpp"
#include "fracineq/specfun.hpp"
#include "fracineq/sweep.hpp"
#include "fracineq/version.hpp"

namespace {

using namespace fracineq;

SweepConfig resolve_config(const std::string& config_path, int jobs_flag) {
  SweepConfig cfg =
      config_path.empty() ? default_config() : load_config(config_path);
  apply_env_overrides(cfg);        // env overrides file values
  if (jobs_flag > 0) cfg.jobs = jobs_flag;  // flags override env
  return cfg;
}

void print_summary(const RunReport& report) {
  const RunSummary& s = report.summary;
  std::printf("mode: %s\n", report.run_mode.c_str());
  std::printf("rows: %ld  pass: %ld  flag: %ld  fail: %ld  error: %ld\n",
              s.rows, s.n_pass, s.n_flag, s.n_fail, s.n_error);
  if (report.run_mode == "falsify") {
    std::printf(
        "trials: %ld  certified evaluations: %ld  violations: %ld  "
        "equality cases: %ld\n",
        s.trials, s.certified_evals, s.violations, s.equality_cases);
    for (const auto& row : report.rows) {
      if (row.kind == "falsify_top") {
        std::printf(
            "  tight: %s ratio %.6f  fn=%s map=%s a=%.6f b=%.6f alpha=%.4f "
            "lambda=%.4f q=%.4f (trial %ld)\n",
            row.bound.theorem.c_str(), row.slack_ratio, row.fn.c_str(),
            row.map.c_str(), row.a, row.b, row.alpha, row.lambda, row.q,
            row.trial);
      }
    }
  }
}

int finish_run(const RunReport& report, const std::string& out_path) {
  if (!out_path.empty()) {
    write_text_file(out_path, report_to_json(report));
    std::printf("wrote %s\n", out_path.c_str());
  }
  print_summary(report);
  return exit_code_for(report);
}

int eval_specfun(const std::string& name, const std::vector<double>& args) {
  auto need = [&](size_t n) {
    if (args.size() != n) {
      throw std::invalid_argument("function '" + name + "' takes " +
                                  std::to_string(n) + " argument(s), got " +
                                  std::to_string(args.size()));
    }
  };
  if (name == "log_gamma") {
    need(1);
    std::printf("%.17g\n", specfun::log_gamma(args[0]));
  } else if (name == "gamma") {
    need(1);
    std::printf("%.17g\n", specfun::gamma(args[0]));
  } else if (name == "beta") {
    need(2);
    std::printf("%.17g\n", specfun::beta(args[0], args[1]));
  } else if (name == "incomplete_beta") {
    need(3);
    const auto r = specfun::incomplete_beta(args[0], args[1], args[2]);
    std::printf("%.17g est_abs_error=%.3g converged=%s\n", r.value,
                r.est_abs_error, r.converged ? "true" : "false");
  } else if (name == "gauss_2f1") {
    need(4);
    const auto r = specfun::gauss_2f1(args[0], args[1], args[2], args[3]);
    std::printf("%.17g est_abs_error=%.3g converged=%s\n", r.value,
                r.est_abs_error, r.converged ? "true" : "false");
  } else if (name == "t1_constant_factor") {
    need(1);
    std::printf("%.17g\n", t1_constant_factor(args[0]));
  } else if (name == "second_kernel_constant") {
    need(1);
    std::printf("%.17g\n", second_kernel_constant(args[0]));
  } else {
    throw std::invalid_argument(
        "unknown function '" + name +
        "'; known: log_gamma gamma beta incomplete_beta gauss_2f1 "
        "t1_constant_factor second_kernel_constant");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification of fractional trapezoid-gap "
               "identities and derivative-based bounds"};
  app.set_version_flag("--version", fracineq::tool_version);
  app.require_subcommand(1);

  // specfun eval
  auto* sc_specfun = app.add_subcommand("specfun", "evaluate special functions");
  auto* sc_eval = sc_specfun->add_subcommand("eval", "evaluate one function");
  std::string sf_name;
  std::vector<double> sf_args;
  sc_eval->add_option("name", sf_name, "function name")->required();
  sc_eval->add_option("args", sf_args, "numeric arguments");
  sc_specfun->require_subcommand(1);

  // shared run options
  struct RunOpts {
    std::string config;
    std::string out;
    int jobs = 0;
  };

  auto add_run_opts = [](CLI::App* sc, RunOpts& o) {
    sc->add_option("--config", o.config, "JSON config path (default: built-in)")
        ->check(CLI::ExistingFile);
    sc->add_option("--out", o.out, "write the JSON report here");
    sc->add_option("--jobs", o.jobs, "worker threads (0 = auto)");
  };

  auto* sc_ident = app.add_subcommand(
      "identities", "check both integral identities on the config grid");
  RunOpts ident_opts;
  add_run_opts(sc_ident, ident_opts);

  auto* sc_thm = app.add_subcommand(
      "theorems", "check the six bounds against oracle and stated routes");
  RunOpts thm_opts;
  std::vector<std::string> which;
  add_run_opts(sc_thm, thm_opts);
  sc_thm->add_option("--which", which, "subset of T1..T6 (comma separated)")
      ->delimiter(',');

  auto* sc_cert = app.add_subcommand(
      "certify", "grid-certify the envelope inequality for one object");
  std::string cert_fn, cert_map = "identity", cert_out;
  double cert_lambda = 0.5, cert_lo = 0.0, cert_hi = 1.0, cert_power = 1.0;
  double cert_tol = 1e-12;
  int cert_order = 0;
  std::vector<int> cert_grid;
  sc_cert->add_option("--fn", cert_fn, "function id")->required();
  sc_cert->add_option("--map", cert_map, "direction map id");
  sc_cert->add_option("--lambda", cert_lambda, "shape parameter in (0, 1/2]")
      ->required();
  sc_cert->add_option("--lo", cert_lo, "interval lower end");
  sc_cert->add_option("--hi", cert_hi, "interval upper end");
  sc_cert->add_option("--order", cert_order,
                      "derivative order of the certified object (0, 1, 2)");
  sc_cert->add_option("--power", cert_power, "power applied to the magnitude");
  sc_cert->add_option("--grid", cert_grid, "grid sizes n_u n_v n_t")
      ->expected(3);
  sc_cert->add_option("--tol", cert_tol, "violation tolerance");
  sc_cert->add_option("--out", cert_out, "write a JSON report here");

  auto* sc_fals = app.add_subcommand(
      "falsify", "randomized search for certified bound violations");
  RunOpts fals_opts;
  long fals_trials = -1;
  std::uint64_t fals_seed = 0;
  bool seed_set = false;
  add_run_opts(sc_fals, fals_opts);
  sc_fals->add_option("--trials", fals_trials, "number of random instances");
  auto* seed_opt = sc_fals->add_option("--seed", fals_seed, "RNG seed");

  auto* sc_rep = app.add_subcommand("report", "convert a JSON report to CSV");
  std::string rep_in, rep_out;
  sc_rep->add_option("--in", rep_in, "JSON report path")->required();
  sc_rep->add_option("--out", rep_out, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems map to exit 2
  }

  try {
    if (sc_eval->parsed()) {
      return eval_specfun(sf_name, sf_args);
    }
    if (sc_ident->parsed()) {
      const SweepConfig cfg = resolve_config(ident_opts.config, ident_opts.jobs);
      return finish_run(run_verify_identities(cfg), ident_opts.out);
    }
    if (sc_thm->parsed()) {
      const SweepConfig cfg = resolve_config(thm_opts.config, thm_opts.jobs);
      return finish_run(run_verify_theorems(cfg, which), thm_opts.out);
    }
    if (sc_cert->parsed()) {
      const FunctionSpec base = builtin_function(cert_fn);  // throws on bad id
      const InvexityMap map = builtin_map(cert_map);
      const FunctionSpec derived =
          derivative_magnitude(base, cert_order, cert_power);
      CertGrid grid;
      if (!cert_grid.empty()) {
        grid.n_u = cert_grid[0];
        grid.n_v = cert_grid[1];
        grid.n_t = cert_grid[2];
      }
      grid.tol = cert_tol;
      const CertificationReport rep = certify_lambda_preinvex(
          derived, map, cert_lambda, cert_lo, cert_hi, grid);
      std::printf("object: %s\n", derived.id.c_str());
      std::printf("passed: %s\n", rep.passed ? "true" : "false");
      std::printf("max_violation: %.17g\n", rep.max_violation);
      std::printf("argmax: u=%.17g v=%.17g t=%.17g\n", rep.argmax_u,
                  rep.argmax_v, rep.argmax_t);
      std::printf("grid: %d x %d x %d (%ld points)\n", rep.grid_u, rep.grid_v,
                  rep.grid_t, rep.points);
      if (!cert_out.empty()) {
        RunReport report;
        report.run_mode = "certify";
        report.config = default_config();
        ResultRow row;
        row.kind = "certification";
        row.fn = cert_fn;
        row.map = cert_map;
        row.a = cert_lo;
        row.b = cert_hi;
        row.lambda = cert_lambda;
        row.object = derived.id;
        row.cert = rep;
        if (!rep.passed) {
          row.status = RowStatus::flag;
          row.message = "envelope certification failed";
        }
        report.rows.push_back(row);
        report.summary.rows = 1;
        (rep.passed ? report.summary.n_pass : report.summary.n_flag) += 1;
        write_text_file(cert_out, report_to_json(report));
        std::printf("wrote %s\n", cert_out.c_str());
      }
      return rep.passed ? 0 : 1;
    }
    if (sc_fals->parsed()) {
      const SweepConfig cfg = resolve_config(fals_opts.config, fals_opts.jobs);
      seed_set = seed_opt->count() > 0;
      const long trials =
          fals_trials > 0 ? fals_trials : cfg.falsify.trials;
      const std::uint64_t seed = seed_set ? fals_seed : cfg.seed;
      return finish_run(run_falsify(cfg, trials, seed), fals_opts.out);
    }
    if (sc_rep->parsed()) {
      write_text_file(rep_out, report_json_to_csv(read_text_file(rep_in)));
      std::printf("wrote %s\n", rep_out.c_str());
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
