#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "noma/geometry.hpp"
#include "noma/pair_allocation.hpp"

namespace noma {

enum class SchemeKind { NomaCsiFree, OmaCsiFree, NomaBenchmark, OmaBenchmark };

std::string to_string(SchemeKind scheme);
std::string to_string(Objective objective);

struct ExperimentConfig {
  int runs = 5000;
  DeploymentConfig deployment = DeploymentConfig::with_mean_count(200.0);
  double eps_1 = 0.01;
  double eps_2 = 0.01;
  std::vector<double> mu_grid = {0.1};
  std::vector<double> alpha_grid = {4.0};
  std::vector<double> lambda_grid = {1e-4};
  // empty = both objectives
  std::optional<Objective> objective;
  std::set<SchemeKind> schemes = {SchemeKind::NomaCsiFree, SchemeKind::OmaCsiFree};
  std::uint64_t seed = 1;
  int workers = 1;
  int co_cell_max_tries = 20000;

  void validate() const;
  std::vector<Objective> objectives() const;
};

struct MeanCi {
  double mean = 0.0;
  double half_width = 0.0;  // 95%, normal approximation
  int count = 0;
};

MeanCi mean_with_ci(std::span<const double> samples);

struct SweepRow {
  double alpha = 4.0;
  double mu = 0.1;
  double lambda = 1e-4;
  SchemeKind scheme = SchemeKind::NomaCsiFree;
  Objective objective = Objective::EqualRate;
  MeanCi rate;      // bps/Hz
  int runs_used = 0;
  int skipped = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  const SweepRow& find(SchemeKind scheme, Objective objective, double alpha, double mu,
                       double lambda) const;
};

// Average-rate estimators of the CSI-free schemes over PPP realizations:
// each realization pairs two co-cell UEs, allocates through the closed-form
// rate control and accumulates per-(alpha, mu, lambda, scheme, objective)
// rate samples. Deterministic for a fixed (config, seed) at any worker count.
SweepResult run_csifree(const ExperimentConfig& config);

// Full-CSI benchmark: per realization the fading and interference levels are
// drawn, users are ordered by instantaneous SIR ratio, and the split is the
// equal-SIR root or the 1-D sum-rate maximum over beta in [1/2, 1].
SweepResult run_benchmark(const ExperimentConfig& config);

// Per-realization sample shared by both engines (exposed for tests).
struct PairSample {
  LinkSpec link_a;
  LinkSpec link_b;
};
std::optional<PairSample> sample_pair_links(const DeploymentConfig& deployment,
                                            double eps_1, double eps_2, double alpha,
                                            RngStream& rng, int max_tries);

// Empirical outage vs the target at the allocated thresholds, for a 2-user
// equal-rate allocation on fixed realizations. The exact-threshold route must
// land within 3 binomial sigma of the target; the closed-form route is
// reported alongside with its relative deviation.
struct AuditCheck {
  int realization = 0;
  double eps = 0.0;
  int user_index = 1;  // decoding position
  double outage_exact = 0.0;
  double outage_approx = 0.0;
  double sigma = 0.0;
  bool within_3sigma = false;
};

struct AuditResult {
  std::vector<AuditCheck> checks;
  bool all_pass = true;
};

AuditResult reliability_audit(const DeploymentConfig& deployment,
                              std::span<const double> eps_values, int realizations,
                              int fading_draws, double alpha, double mu,
                              std::uint64_t seed);

// Plot-ready data table for one of the study figures.
struct DataTable {
  std::string title;  // goes into the CSV header comment
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// ids: 2a 2b 3a 3b 4 5a 5b 6 7a 7b 8a 8b 9 10
DataTable reproduce_figure(const std::string& id, const ExperimentConfig& config);

}  // namespace noma
