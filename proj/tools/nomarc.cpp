// nomarc: batch front-end for the downlink NOMA rate-control laboratory.
// Subcommands: allocate, cdf, sweep, figure, audit.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "noma/config.hpp"
#include "noma/csv.hpp"
#include "noma/experiments.hpp"
#include "noma/threshold_dist.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonOptions {
  std::string config_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<int> runs;
  bool quiet = false;
};

int env_workers() {
  const char* raw = std::getenv("NOMARC_WORKERS");
  if (!raw) return 1;
  const int workers = std::atoi(raw);
  return workers >= 1 ? workers : 1;
}

noma::ExperimentConfig load_experiment(const CommonOptions& options) {
  noma::KeyValueConfig file;
  if (!options.config_path.empty()) {
    file = noma::KeyValueConfig::parse_file(options.config_path);
  }
  noma::ExperimentConfig experiment = noma::experiment_from_config(file);
  if (options.seed) {
    experiment.seed = *options.seed;
    experiment.deployment.seed = *options.seed;
  }
  if (options.runs) experiment.runs = *options.runs;
  experiment.workers = env_workers();
  experiment.validate();
  return experiment;
}

void write_manifest(const noma::ExperimentConfig& experiment, const CommonOptions& options,
                    const std::string& subcommand, const std::string& extra = "") {
  noma::KeyValueConfig manifest = noma::config_from_experiment(experiment);
  manifest.set("meta", "artifact", std::string("nomarc ") + kVersion);
  manifest.set("meta", "subcommand", subcommand);
  if (!extra.empty()) manifest.set("meta", "detail", extra);
  const std::filesystem::path path =
      std::filesystem::path(options.out_dir) / "manifest.ini";
  std::filesystem::create_directories(options.out_dir);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << manifest.serialize();
}

void add_common(CLI::App* app, CommonOptions& options) {
  app->add_option("--config", options.config_path, "config file (sectioned key = value)")
      ->check(CLI::ExistingFile);
  app->add_option("--out", options.out_dir, "output directory");
  app->add_option("--seed", options.seed, "seed override");
  app->add_option("--runs", options.runs, "Monte Carlo run count override");
  app->add_flag("--quiet", options.quiet, "suppress progress output");
}

int run_allocate(const CommonOptions& options, double phi_a, double phi_b,
                 std::optional<double> mu_opt, const std::string& objective_name,
                 double total_power) {
  const double mu = mu_opt.value_or(0.1);
  if (!mu_opt && !options.quiet) {
    std::cout << "note: SIC imperfection not given, using default mu = 0.1\n";
  }
  const noma::Objective objective = noma::objective_from_string(objective_name);
  const noma::AllocationResult alloc =
      noma::allocate_from_phi(phi_a, phi_b, mu, total_power, objective);
  const auto [oma1, oma2] = noma::oma_rates(alloc.pair, objective);

  std::cout << "decoding order: " << (alloc.pair.label1 == 0 ? "A" : "B") << " first, "
            << (alloc.pair.label2 == 0 ? "A" : "B") << " second"
            << (alloc.pair.tie ? " (tie broken by label)" : "") << "\n";
  std::cout << "phi1 = " << alloc.pair.phi1 << "  phi2 = " << alloc.pair.phi2 << "\n";
  std::cout << "objective: " << noma::to_string(objective) << "  mu = " << mu << "\n";
  std::cout << "beta = " << alloc.beta << "  P1 = " << alloc.power1
            << "  P2 = " << alloc.power2 << "\n";
  std::cout << "gamma1 = " << alloc.gamma1 << "  gamma2 = " << alloc.gamma2 << "\n";
  std::cout << "R1 = " << alloc.rate1 << "  R2 = " << alloc.rate2 << " bps/Hz"
            << "  (OMA: " << oma1 << ", " << oma2 << ")\n";
  std::cout << "NOMA beats OMA: gate " << (alloc.beats_oma_gate ? "yes" : "no")
            << ", direct comparison " << (alloc.beats_oma_direct ? "yes" : "no")
            << "\n";
  return 0;
}

int run_cdf(const CommonOptions& options, double eps, double alpha, double beta,
            double mu, int user, double db_min, double db_max, double db_step) {
  noma::ExperimentConfig experiment = load_experiment(options);
  if (!(db_step > 0.0) || db_max < db_min) {
    throw std::invalid_argument("cdf: bad theta grid");
  }
  std::vector<double> theta_grid;
  for (double db = db_min; db <= db_max + 1e-9; db += db_step) {
    theta_grid.push_back(std::pow(10.0, db / 10.0));
  }
  noma::ThresholdQuery base;
  base.eps = eps;
  base.alpha = alpha;
  base.user_index = user;
  base.power = beta >= 1.0 ? noma::PowerProfile::single_user()
                           : noma::PowerProfile::two_user(beta, mu);
  if (beta >= 1.0) base.user_index = 1;
  base.theta = theta_grid.front();
  base.validate();

  const noma::CdfCurve analytic =
      noma::threshold_cdf_curve(base, theta_grid, noma::CdfMethod::Inversion);
  const noma::CdfCurve closed =
      noma::threshold_cdf_curve(base, theta_grid, noma::CdfMethod::ClosedForm);
  const noma::CdfCurve mc = noma::threshold_cdf_montecarlo(
      base, experiment.deployment, experiment.runs, theta_grid, experiment.seed);

  const noma::DataTable table = noma::curve_table(
      analytic, closed, &mc,
      "allocated-threshold CDF: Laplace inversion, sinc closed form, Monte Carlo");
  noma::write_table_csv(table, std::filesystem::path(options.out_dir) / "cdf.csv");
  write_manifest(experiment, options, "cdf");
  if (!options.quiet) {
    std::cout << "wrote " << options.out_dir << "/cdf.csv ("
              << table.rows.size() << " rows)\n";
  }
  return 0;
}

int run_sweep(const CommonOptions& options) {
  noma::ExperimentConfig experiment = load_experiment(options);
  noma::SweepResult all;
  bool csifree = false, benchmark = false;
  for (noma::SchemeKind scheme : experiment.schemes) {
    const bool is_benchmark = scheme == noma::SchemeKind::NomaBenchmark ||
                              scheme == noma::SchemeKind::OmaBenchmark;
    (is_benchmark ? benchmark : csifree) = true;
  }
  if (csifree) {
    const noma::SweepResult part = noma::run_csifree(experiment);
    all.rows.insert(all.rows.end(), part.rows.begin(), part.rows.end());
  }
  if (benchmark) {
    const noma::SweepResult part = noma::run_benchmark(experiment);
    all.rows.insert(all.rows.end(), part.rows.begin(), part.rows.end());
  }
  noma::write_sweep_csv(all,
                        "average transmission rate per (alpha, mu, lambda) grid point",
                        std::filesystem::path(options.out_dir) / "sweep.csv");
  write_manifest(experiment, options, "sweep");
  if (!options.quiet) {
    std::cout << "wrote " << options.out_dir << "/sweep.csv (" << all.rows.size()
              << " rows)\n";
  }
  return 0;
}

int run_figure(const CommonOptions& options, const std::string& figure_id) {
  noma::ExperimentConfig experiment = load_experiment(options);
  const noma::DataTable table = noma::reproduce_figure(figure_id, experiment);
  const std::filesystem::path path =
      std::filesystem::path(options.out_dir) / ("figure_" + figure_id + ".csv");
  noma::write_table_csv(table, path);
  write_manifest(experiment, options, "figure", figure_id);
  if (!options.quiet) {
    std::cout << "wrote " << path.string() << " (" << table.rows.size() << " rows)\n";
  }
  return 0;
}

int run_audit(const CommonOptions& options, std::vector<double> eps_values,
              int realizations, int draws) {
  noma::ExperimentConfig experiment = load_experiment(options);
  if (eps_values.empty()) eps_values = {0.1, 0.01};
  const noma::AuditResult audit = noma::reliability_audit(
      experiment.deployment, eps_values, realizations, draws,
      experiment.alpha_grid.front(), experiment.mu_grid.front(), experiment.seed);
  noma::write_audit_csv(audit,
                        "empirical outage at the allocated thresholds vs target",
                        std::filesystem::path(options.out_dir) / "audit.csv");
  write_manifest(experiment, options, "audit");

  for (double eps : eps_values) {
    bool pass = true;
    double worst = 0.0;
    for (const noma::AuditCheck& check : audit.checks) {
      if (check.eps != eps) continue;
      pass = pass && check.within_3sigma;
      worst = std::max(worst, std::abs(check.outage_exact - eps) / check.sigma);
    }
    std::cout << "eps=" << eps << ": " << (pass ? "PASS" : "FAIL")
              << " (worst deviation " << worst << " sigma)\n";
  }
  return audit.all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"downlink NOMA rate-control laboratory"};
  app.set_version_flag("--version", std::string("nomarc ") + kVersion);
  app.require_subcommand(1);

  CommonOptions options;

  // allocate
  auto* allocate = app.add_subcommand("allocate", "one 2-user rate/power allocation");
  double phi_a = 0.0, phi_b = 0.0, total_power = 1.0;
  std::optional<double> mu_opt;
  std::string objective_name = "equal-rate";
  add_common(allocate, options);
  allocate->add_option("--phi-a", phi_a, "single-user threshold of UE A")->required();
  allocate->add_option("--phi-b", phi_b, "single-user threshold of UE B")->required();
  allocate->add_option("--mu", mu_opt, "SIC imperfection in [0,1] (default 0.1)");
  allocate->add_option("--objective", objective_name, "equal-rate | max-sum-rate");
  allocate->add_option("--power", total_power, "total transmit power");

  // cdf
  auto* cdf = app.add_subcommand("cdf", "allocated-threshold CDF curves");
  double cdf_eps = 0.01, cdf_alpha = 4.0, cdf_beta = 1.0, cdf_mu = 0.1;
  int cdf_user = 1;
  double db_min = -30.0, db_max = 10.0, db_step = 1.0;
  add_common(cdf, options);
  cdf->add_option("--eps", cdf_eps, "reliability target");
  cdf->add_option("--alpha", cdf_alpha, "path-loss exponent");
  cdf->add_option("--beta", cdf_beta, "power split (1 = single-user operation)");
  cdf->add_option("--mu", cdf_mu, "SIC imperfection");
  cdf->add_option("--user", cdf_user, "decoding position (1 or 2)");
  cdf->add_option("--theta-db-min", db_min, "grid start, dB");
  cdf->add_option("--theta-db-max", db_max, "grid end, dB");
  cdf->add_option("--theta-db-step", db_step, "grid step, dB");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "average-rate sweeps over the config grids");
  add_common(sweep, options);

  // figure
  auto* figure = app.add_subcommand("figure", "emit one study figure as CSV");
  std::string figure_id;
  add_common(figure, options);
  figure->add_option("--figure", figure_id, "figure id (2a 2b 3a 3b 4 5a 5b 6 7a 7b 8a 8b 9 10)")
      ->required();

  // audit
  auto* audit = app.add_subcommand("audit", "reliability audit of allocated thresholds");
  std::vector<double> audit_eps;
  int audit_realizations = 20, audit_draws = 100000;
  add_common(audit, options);
  audit->add_option("--eps", audit_eps, "targets to audit (default 0.1 0.01)");
  audit->add_option("--realizations", audit_realizations, "fixed deployments to audit");
  audit->add_option("--draws", audit_draws, "fading draws per deployment");

  CLI11_PARSE(app, argc, argv);

  try {
    if (allocate->parsed()) {
      return run_allocate(options, phi_a, phi_b, mu_opt, objective_name, total_power);
    }
    if (cdf->parsed()) {
      return run_cdf(options, cdf_eps, cdf_alpha, cdf_beta, cdf_mu, cdf_user, db_min,
                     db_max, db_step);
    }
    if (sweep->parsed()) return run_sweep(options);
    if (figure->parsed()) return run_figure(options, figure_id);
    if (audit->parsed()) {
      return run_audit(options, audit_eps, audit_realizations, audit_draws);
    }
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 1;
}
