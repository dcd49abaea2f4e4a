#include "noma/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "noma/threshold_dist.hpp"

namespace noma {

std::string to_string(SchemeKind scheme) {
  switch (scheme) {
    case SchemeKind::NomaCsiFree:
      return "noma-csifree";
    case SchemeKind::OmaCsiFree:
      return "oma-csifree";
    case SchemeKind::NomaBenchmark:
      return "noma-benchmark";
    case SchemeKind::OmaBenchmark:
      return "oma-benchmark";
  }
  throw std::invalid_argument("unknown scheme");
}

std::string to_string(Objective objective) {
  return objective == Objective::EqualRate ? "equal-rate" : "max-sum-rate";
}

void ExperimentConfig::validate() const {
  if (runs < 1) throw std::invalid_argument("experiment: runs must be >= 1");
  deployment.validate();
  if (!(eps_1 > 0.0 && eps_1 < 1.0 && eps_2 > 0.0 && eps_2 < 1.0)) {
    throw std::invalid_argument("experiment: eps must lie in (0,1)");
  }
  if (mu_grid.empty() || alpha_grid.empty() || lambda_grid.empty()) {
    throw std::invalid_argument("experiment: grids must be non-empty");
  }
  for (double mu : mu_grid) {
    if (!(mu >= 0.0 && mu <= 1.0)) {
      throw std::invalid_argument("experiment: mu grid values must lie in [0,1]");
    }
  }
  for (double a : alpha_grid) {
    if (!(a > 2.0)) throw std::invalid_argument("experiment: alpha grid values must exceed 2");
  }
  for (double l : lambda_grid) {
    if (!(l > 0.0)) throw std::invalid_argument("experiment: lambda grid values must be positive");
  }
  if (schemes.empty()) throw std::invalid_argument("experiment: schemes must be non-empty");
  if (workers < 1) throw std::invalid_argument("experiment: workers must be >= 1");
}

std::vector<Objective> ExperimentConfig::objectives() const {
  if (objective) return {*objective};
  return {Objective::EqualRate, Objective::MaxSumRate};
}

MeanCi mean_with_ci(std::span<const double> samples) {
  if (samples.size() < 2) {
    throw std::invalid_argument("mean_with_ci: need at least 2 samples");
  }
  double sum = 0.0, comp = 0.0;
  for (double x : samples) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double n = static_cast<double>(samples.size());
  const double mean = sum / n;
  double sq = 0.0, sq_comp = 0.0;
  for (double x : samples) {
    const double d = (x - mean) * (x - mean) - sq_comp;
    const double t = sq + d;
    sq_comp = (t - sq) - d;
    sq = t;
  }
  MeanCi out;
  out.mean = mean;
  out.count = static_cast<int>(samples.size());
  out.half_width = 1.96 * std::sqrt(sq / (n - 1.0) / n);
  return out;
}

const SweepRow& SweepResult::find(SchemeKind scheme, Objective objective, double alpha,
                                  double mu, double lambda) const {
  for (const SweepRow& row : rows) {
    if (row.scheme == scheme && row.objective == objective && row.alpha == alpha &&
        row.mu == mu && row.lambda == lambda) {
      return row;
    }
  }
  throw std::out_of_range("sweep: no row for the requested grid point");
}

std::optional<PairSample> sample_pair_links(const DeploymentConfig& deployment,
                                            double eps_1, double eps_2, double alpha,
                                            RngStream& rng, int max_tries) {
  const auto realization = sample_co_cell_pair(deployment, rng, max_tries);
  if (!realization) return std::nullopt;
  PairSample sample;
  sample.link_a = LinkSpec::from_association(realization->links[0], eps_1, alpha);
  sample.link_b = LinkSpec::from_association(realization->links[1], eps_2, alpha);
  return sample;
}

namespace {

struct Kahan {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

struct ChunkStats {
  std::vector<Kahan> sum;
  std::vector<Kahan> sumsq;
  long used = 0;
  long skipped = 0;
};

// Runs fn(realization_index, out) for all realizations, accumulating per-key
// first and second moments. Chunks have a fixed size and are merged in index
// order, so the result is bit-identical for any worker count.
struct EngineResult {
  std::vector<double> sum;
  std::vector<double> sumsq;
  long used = 0;
  long skipped = 0;
};

EngineResult run_deterministic(
    int runs, int workers, std::size_t nkeys,
    const std::function<bool(int, std::span<double>)>& fn) {
  constexpr int kChunk = 64;
  const int nchunks = (runs + kChunk - 1) / kChunk;
  std::vector<ChunkStats> chunks(static_cast<std::size_t>(nchunks));

  auto work = [&](int worker_id) {
    std::vector<double> out(nkeys);
    for (int c = worker_id; c < nchunks; c += workers) {
      ChunkStats& stats = chunks[static_cast<std::size_t>(c)];
      stats.sum.resize(nkeys);
      stats.sumsq.resize(nkeys);
      const int lo = c * kChunk;
      const int hi = std::min(runs, lo + kChunk);
      for (int r = lo; r < hi; ++r) {
        if (!fn(r, out)) {
          ++stats.skipped;
          continue;
        }
        ++stats.used;
        for (std::size_t k = 0; k < nkeys; ++k) {
          stats.sum[k].add(out[k]);
          stats.sumsq[k].add(out[k] * out[k]);
        }
      }
    }
  };

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  EngineResult result;
  result.sum.assign(nkeys, 0.0);
  result.sumsq.assign(nkeys, 0.0);
  std::vector<Kahan> sum(nkeys), sumsq(nkeys);
  for (const ChunkStats& stats : chunks) {
    result.used += stats.used;
    result.skipped += stats.skipped;
    if (stats.sum.empty()) continue;
    for (std::size_t k = 0; k < nkeys; ++k) {
      sum[k].add(stats.sum[k].sum);
      sumsq[k].add(stats.sumsq[k].sum);
    }
  }
  for (std::size_t k = 0; k < nkeys; ++k) {
    result.sum[k] = sum[k].sum;
    result.sumsq[k] = sumsq[k].sum;
  }
  return result;
}

MeanCi stats_from_moments(double sum, double sumsq, long count) {
  MeanCi out;
  out.count = static_cast<int>(count);
  if (count == 0) return out;
  const double n = static_cast<double>(count);
  out.mean = sum / n;
  if (count >= 2) {
    const double var = std::max(0.0, (sumsq - n * out.mean * out.mean) / (n - 1.0));
    out.half_width = 1.96 * std::sqrt(var / n);
  }
  return out;
}

// golden-section maximization with endpoint checks; f assumed unimodal
double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double mid = 0.5 * (a + b);
  double best_x = mid, best = f(mid);
  for (double x : {lo, hi}) {
    const double v = f(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  return best_x;
}

// instantaneous post-SIC SIRs under split beta, thresholds replaced by the
// per-user SIR ratios; same rational form as the CSI-free pair
double instantaneous_sum_log_rate(double rho1, double rho2, double mu, double beta) {
  const double sir1 = rho1 * beta / (1.0 + (1.0 - beta) * rho1);
  const double sir2 = rho2 * (1.0 - beta) / (1.0 + mu * beta * rho2);
  return std::log2((1.0 + sir1) * (1.0 + sir2));
}

std::uint64_t stream_index(std::size_t grid_cell, int runs, int realization) {
  return static_cast<std::uint64_t>(grid_cell) * static_cast<std::uint64_t>(runs) +
         static_cast<std::uint64_t>(realization);
}

struct KeyLayout {
  std::vector<SchemeKind> schemes;
  std::vector<Objective> objectives;
  std::size_t n_mu = 0;

  std::size_t size() const { return n_mu * schemes.size() * objectives.size(); }
  std::size_t index(std::size_t mu_idx, std::size_t scheme_idx, std::size_t obj_idx) const {
    return (mu_idx * schemes.size() + scheme_idx) * objectives.size() + obj_idx;
  }
};

SweepResult run_engine(const ExperimentConfig& config, bool benchmark) {
  config.validate();
  KeyLayout layout;
  for (SchemeKind s : {SchemeKind::NomaCsiFree, SchemeKind::OmaCsiFree,
                       SchemeKind::NomaBenchmark, SchemeKind::OmaBenchmark}) {
    const bool is_benchmark =
        s == SchemeKind::NomaBenchmark || s == SchemeKind::OmaBenchmark;
    if (is_benchmark == benchmark && config.schemes.count(s)) {
      layout.schemes.push_back(s);
    }
  }
  if (layout.schemes.empty()) {
    throw std::invalid_argument(benchmark
                                    ? "run_benchmark: no benchmark scheme requested"
                                    : "run_csifree: no CSI-free scheme requested");
  }
  layout.objectives = config.objectives();
  layout.n_mu = config.mu_grid.size();

  SweepResult result;
  std::size_t grid_cell = 0;
  for (double alpha : config.alpha_grid) {
    for (double lambda : config.lambda_grid) {
      DeploymentConfig deployment = config.deployment;
      deployment.density = lambda;
      deployment.validate();

      auto realization_fn = [&](int r, std::span<double> out) -> bool {
        RngStream rng = RngStream::substream(
            config.seed, stream_index(grid_cell, config.runs, r));
        const auto pair = sample_pair_links(deployment, config.eps_1, config.eps_2,
                                            alpha, rng, config.co_cell_max_tries);
        if (!pair) return false;
        const double phi_a = phi_approx(pair->link_a).value;
        const double phi_b = phi_approx(pair->link_b).value;

        double rho_a = 0.0, rho_b = 0.0;
        if (benchmark) {
          const FadingDraw fade_a =
              draw_fading(pair->link_a.interferer_distances.size(), rng);
          const FadingDraw fade_b =
              draw_fading(pair->link_b.interferer_distances.size(), rng);
          const double i_a =
              interference(pair->link_a.interferer_distances, fade_a.g, 1.0, alpha);
          const double i_b =
              interference(pair->link_b.interferer_distances, fade_b.g, 1.0, alpha);
          rho_a = instantaneous_ratio(fade_a.h, pair->link_a.serving_distance, 1.0,
                                      i_a, alpha);
          rho_b = instantaneous_ratio(fade_b.h, pair->link_b.serving_distance, 1.0,
                                      i_b, alpha);
        }

        for (std::size_t mi = 0; mi < layout.n_mu; ++mi) {
          const double mu = config.mu_grid[mi];
          for (std::size_t si = 0; si < layout.schemes.size(); ++si) {
            const SchemeKind scheme = layout.schemes[si];
            for (std::size_t oi = 0; oi < layout.objectives.size(); ++oi) {
              const Objective objective = layout.objectives[oi];
              double rate = 0.0;
              switch (scheme) {
                case SchemeKind::NomaCsiFree: {
                  const AllocationResult alloc =
                      allocate_from_phi(phi_a, phi_b, mu, 1.0, objective);
                  rate = objective == Objective::EqualRate
                             ? alloc.rate1
                             : alloc.rate1 + alloc.rate2;
                  break;
                }
                case SchemeKind::OmaCsiFree: {
                  const OrderedPair ordered = order_pair(phi_a, phi_b);
                  const auto [r1, r2] = oma_rates(ordered, objective);
                  rate = objective == Objective::EqualRate ? r1 : r1 + r2;
                  break;
                }
                case SchemeKind::NomaBenchmark: {
                  const OrderedPair ordered = order_pair(rho_a, rho_b);
                  if (objective == Objective::EqualRate) {
                    rate = std::log2(1.0 + equal_rate_gamma(ordered, mu));
                  } else {
                    const auto objective_fn = [&](double beta) {
                      return instantaneous_sum_log_rate(ordered.phi1, ordered.phi2,
                                                        mu, beta);
                    };
                    const double beta =
                        golden_section_max(objective_fn, 0.5, 1.0, 1e-6);
                    rate = objective_fn(beta);
                  }
                  break;
                }
                case SchemeKind::OmaBenchmark: {
                  if (objective == Objective::EqualRate) {
                    rate = 0.5 * std::log2(1.0 + std::min(rho_a, rho_b));
                  } else {
                    rate = 0.5 * std::log2((1.0 + rho_a) * (1.0 + rho_b));
                  }
                  break;
                }
              }
              out[layout.index(mi, si, oi)] = rate;
            }
          }
        }
        return true;
      };

      const EngineResult engine =
          run_deterministic(config.runs, config.workers, layout.size(), realization_fn);

      for (std::size_t mi = 0; mi < layout.n_mu; ++mi) {
        for (std::size_t si = 0; si < layout.schemes.size(); ++si) {
          for (std::size_t oi = 0; oi < layout.objectives.size(); ++oi) {
            const std::size_t k = layout.index(mi, si, oi);
            SweepRow row;
            row.alpha = alpha;
            row.mu = config.mu_grid[mi];
            row.lambda = lambda;
            row.scheme = layout.schemes[si];
            row.objective = layout.objectives[oi];
            row.rate = stats_from_moments(engine.sum[k], engine.sumsq[k], engine.used);
            row.runs_used = static_cast<int>(engine.used);
            row.skipped = static_cast<int>(engine.skipped);
            result.rows.push_back(row);
          }
        }
      }
      ++grid_cell;
    }
  }
  return result;
}

}  // namespace

SweepResult run_csifree(const ExperimentConfig& config) { return run_engine(config, false); }

SweepResult run_benchmark(const ExperimentConfig& config) { return run_engine(config, true); }

AuditResult reliability_audit(const DeploymentConfig& deployment,
                              std::span<const double> eps_values, int realizations,
                              int fading_draws, double alpha, double mu,
                              std::uint64_t seed) {
  if (realizations < 1 || fading_draws < 1) {
    throw std::invalid_argument("audit: realizations and fading draws must be >= 1");
  }
  AuditResult result;
  for (int r = 0; r < realizations; ++r) {
    RngStream rng = RngStream::substream(seed, static_cast<std::uint64_t>(r));
    std::optional<NetworkRealization> realization;
    for (int attempt = 0; attempt < 16 && !realization; ++attempt) {
      realization = sample_co_cell_pair(deployment, rng);
    }
    if (!realization) {
      throw std::runtime_error("audit: could not place a co-cell UE pair");
    }

    for (std::size_t ei = 0; ei < eps_values.size(); ++ei) {
      const double eps = eps_values[ei];
      const LinkSpec links[2] = {
          LinkSpec::from_association(realization->links[0], eps, alpha),
          LinkSpec::from_association(realization->links[1], eps, alpha)};

      // one allocation per threshold route; both are judged on shared draws
      struct Route {
        AllocationResult alloc;
        PowerProfile power;
        int first_ue = 0;  // UE feeding decoding position 1
        long outage[2] = {0, 0};
      };
      Route routes[2];
      for (int m = 0; m < 2; ++m) {
        const bool exact = m == 0;
        const double phi_a = exact ? phi_exact(links[0]).value : phi_approx(links[0]).value;
        const double phi_b = exact ? phi_exact(links[1]).value : phi_approx(links[1]).value;
        routes[m].alloc = allocate_from_phi(phi_a, phi_b, mu, 1.0, Objective::EqualRate);
        routes[m].power = PowerProfile::two_user(routes[m].alloc.beta, mu);
        routes[m].first_ue = routes[m].alloc.pair.label1;
      }

      std::vector<double> weights[2];
      for (int u = 0; u < 2; ++u) {
        weights[u].reserve(links[u].interferer_distances.size());
        for (double d : links[u].interferer_distances) {
          weights[u].push_back(std::pow(d, -alpha));
        }
      }
      const double gain_scale[2] = {
          std::pow(links[0].serving_distance, -alpha),
          std::pow(links[1].serving_distance, -alpha)};

      RngStream fade_rng = RngStream::substream(
          seed ^ 0x5bf03635ull, static_cast<std::uint64_t>(r) * 64u + ei);
      for (int d = 0; d < fading_draws; ++d) {
        double gain[2], inter[2];
        for (int u = 0; u < 2; ++u) {
          gain[u] = fade_rng.exponential() * gain_scale[u];
          double acc = 0.0;
          for (double w : weights[u]) acc += fade_rng.exponential() * w;
          inter[u] = acc;
        }
        for (Route& route : routes) {
          const int u1 = route.first_ue;
          const int u2 = 1 - u1;
          const double p1 = route.power.per_user[0];
          const double p2 = route.power.per_user[1];
          const double sir1 = gain[u1] * p1 / (gain[u1] * p2 + inter[u1]);
          const double sir2 = gain[u2] * p2 / (gain[u2] * mu * p1 + inter[u2]);
          if (sir1 <= route.alloc.gamma1) ++route.outage[0];
          if (sir2 <= route.alloc.gamma2) ++route.outage[1];
        }
      }

      const double sigma = std::sqrt(eps * (1.0 - eps) / fading_draws);
      for (int user = 1; user <= 2; ++user) {
        AuditCheck check;
        check.realization = r;
        check.eps = eps;
        check.user_index = user;
        check.outage_exact =
            static_cast<double>(routes[0].outage[user - 1]) / fading_draws;
        check.outage_approx =
            static_cast<double>(routes[1].outage[user - 1]) / fading_draws;
        check.sigma = sigma;
        check.within_3sigma = std::abs(check.outage_exact - eps) <= 3.0 * sigma;
        result.checks.push_back(check);
        result.all_pass = result.all_pass && check.within_3sigma;
      }
    }
  }
  return result;
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  }
  return grid;
}

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> grid = linspace(std::log10(lo), std::log10(hi), n);
  for (double& g : grid) g = std::pow(10.0, g);
  return grid;
}

// best ratio phi1/phi2 at fixed sum, for a pair objective evaluated on the
// ordered pair implied by the ratio
double best_ratio(double sum, const std::function<double(const OrderedPair&)>& objective) {
  const auto value = [&](double ratio) {
    OrderedPair pair;
    pair.phi1 = sum * ratio / (1.0 + ratio);
    pair.phi2 = sum / (1.0 + ratio);
    return objective(pair);
  };
  return golden_section_max(value, 1e-4, 1.0, 1e-7);
}

DataTable figure_2a(const ExperimentConfig&) {
  DataTable table;
  table.title =
      "single-user SIR threshold vs target error: exact product root and "
      "closed-form approximation, example deployments (r=30m, 10 interferers "
      "at 40+10j / 40+20j / 40+30j meters, alpha=4)";
  table.columns = {"eps",          "high_exact",   "high_approx", "medium_exact",
                   "medium_approx", "low_exact",    "low_approx"};
  for (double eps : logspace(1e-3, 0.5, 28)) {
    std::vector<double> row = {eps};
    for (FixtureRule rule : {FixtureRule::HighDensity, FixtureRule::MediumDensity,
                             FixtureRule::LowDensity}) {
      const LinkSpec link = LinkSpec::from_fixture(rule, 10, 30.0, eps, 4.0);
      row.push_back(phi_exact(link).value);
      row.push_back(phi_approx(link).value);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

DataTable figure_2b(const ExperimentConfig& config) {
  DataTable table;
  table.title =
      "CDF of the allocated SIR threshold, single-user operation: "
      "hypergeometric Laplace inversion vs sinc closed form vs Monte Carlo";
  table.columns = {"theta_db", "F_analytic", "F_closed", "F_mc", "ci"};
  const double eps = config.eps_1;
  const double alpha = config.alpha_grid.front();

  std::vector<double> theta_grid;
  std::vector<double> theta_db_grid;
  for (double db = -30.0; db <= 10.0 + 1e-9; db += 1.0) {
    theta_db_grid.push_back(db);
    theta_grid.push_back(std::pow(10.0, db / 10.0));
  }
  const ThresholdQuery base = ThresholdQuery::oma(1.0, eps, alpha);
  const CdfCurve analytic =
      threshold_cdf_curve(base, theta_grid, CdfMethod::Inversion);
  const CdfCurve closed =
      threshold_cdf_curve(base, theta_grid, CdfMethod::ClosedForm);
  const CdfCurve mc = threshold_cdf_montecarlo(base, config.deployment, config.runs,
                                               theta_grid, config.seed);
  for (std::size_t i = 0; i < theta_grid.size(); ++i) {
    table.rows.push_back({theta_db_grid[i], analytic.value[i], closed.value[i],
                          mc.value[i], mc.error[i]});
  }
  return table;
}

DataTable figure_ratio(const ExperimentConfig&, bool equal_rate) {
  DataTable table;
  table.title = equal_rate
                    ? "best threshold ratio phi1/phi2 vs threshold sum, "
                      "equal-rate split"
                    : "best threshold ratio phi1/phi2 vs threshold sum, "
                      "half-split sum rate";
  table.columns = {"phi_sum",  "ratio_mu0",   "ratio_mu005", "ratio_mu01",
                   "ratio_mu02", "ratio_mu05", "ratio_mu1"};
  const std::vector<double> mus = {0.0, 0.05, 0.1, 0.2, 0.5, 1.0};
  for (double sum : linspace(0.1, 2.0, 39)) {
    std::vector<double> row = {sum};
    for (double mu : mus) {
      row.push_back(best_ratio(sum, [&](const OrderedPair& pair) {
        return equal_rate ? equal_rate_gamma(pair, mu)
                          : sum_rate_gamma_bar(pair, mu, 0.5);
      }));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

DataTable figure_3b(const ExperimentConfig&) {
  DataTable table;
  table.title =
      "equal-rate transmission rate vs SIC imperfection, phi2=0.6, "
      "NOMA vs half-resource OMA";
  table.columns = {"mu", "noma_phi1_04", "oma_phi1_04", "noma_phi1_05", "oma_phi1_05"};
  for (double mu : linspace(0.0, 1.0, 51)) {
    std::vector<double> row = {mu};
    for (double phi1 : {0.4, 0.5}) {
      const OrderedPair pair = order_pair(phi1, 0.6);
      row.push_back(std::log2(1.0 + equal_rate_gamma(pair, mu)));
      row.push_back(0.5 * std::log2(1.0 + phi1));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

DataTable figure_5a(const ExperimentConfig&) {
  DataTable table;
  table.title =
      "max-sum-rate transmission rate vs SIC imperfection, phi1=0.1, "
      "NOMA at the better extreme split vs OMA";
  table.columns = {"mu", "noma_phi2_02", "oma_phi2_02", "noma_phi2_06", "oma_phi2_06"};
  for (double mu : linspace(0.0, 1.0, 51)) {
    std::vector<double> row = {mu};
    for (double phi2 : {0.2, 0.6}) {
      const OrderedPair pair = order_pair(0.1, phi2);
      const double beta = sum_rate_beta_star(pair, mu);
      row.push_back(std::log2(sum_rate_gamma_tilde(pair, mu, beta)));
      row.push_back(0.5 * std::log2((1.0 + pair.phi1) * (1.0 + pair.phi2)));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

DataTable figure_5b(const ExperimentConfig&) {
  DataTable table;
  table.title =
      "fairness coefficient vs SIC imperfection at the half split, phi1=0.1";
  table.columns = {"mu", "kappa_oma_phi2_02", "kappa_noma_phi2_02",
                   "kappa_oma_phi2_06", "kappa_noma_phi2_06"};
  for (double mu : linspace(0.0, 1.0, 51)) {
    std::vector<double> row = {mu};
    for (double phi2 : {0.2, 0.6}) {
      const OrderedPair pair = order_pair(0.1, phi2);
      const double oma = pair.phi1 / pair.phi2;
      row.push_back(oma);
      row.push_back(oma * (2.0 + mu * pair.phi2) / (2.0 + pair.phi1));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

DataTable figure_6(const ExperimentConfig& config) {
  DataTable table;
  table.title =
      "average CSI-free rate vs BS density: flat curves show the "
      "density-invariance of the allocated-rate distribution";
  table.columns = {"lambda",      "noma_eq",     "noma_eq_ci", "oma_eq",
                   "oma_eq_ci",   "noma_sum",    "noma_sum_ci", "oma_sum",
                   "oma_sum_ci"};
  ExperimentConfig run = config;
  run.schemes = {SchemeKind::NomaCsiFree, SchemeKind::OmaCsiFree};
  run.objective.reset();
  if (run.lambda_grid.size() < 2) {
    run.lambda_grid = {0.5e-4, 1e-4, 2e-4};
  }
  run.mu_grid = {config.mu_grid.front()};
  run.alpha_grid = {config.alpha_grid.front()};
  const SweepResult sweep = run_csifree(run);
  for (double lambda : run.lambda_grid) {
    std::vector<double> row = {lambda};
    for (Objective obj : {Objective::EqualRate, Objective::MaxSumRate}) {
      for (SchemeKind scheme : {SchemeKind::NomaCsiFree, SchemeKind::OmaCsiFree}) {
        const SweepRow& cell = sweep.find(scheme, obj, run.alpha_grid.front(),
                                          run.mu_grid.front(), lambda);
        row.push_back(cell.rate.mean);
        row.push_back(cell.rate.half_width);
      }
    }
    // column order: eq noma, eq oma, sum noma, sum oma
    table.rows.push_back(std::move(row));
  }
  return table;
}

DataTable figure_sweep(const ExperimentConfig& config, Objective objective,
                       bool sweep_alpha) {
  DataTable table;
  const std::string metric =
      objective == Objective::EqualRate ? "equal-rate" : "max-sum-rate";
  table.title = "average " + metric + " transmission rate, CSI-free scheme at "
                "two reliability targets vs the full-CSI benchmark";
  table.columns = {sweep_alpha ? "alpha" : "mu",
                   "bm_noma",     "bm_noma_ci", "bm_oma",      "bm_oma_ci",
                   "cf_noma_e1",  "cf_noma_e1_ci", "cf_oma_e1", "cf_oma_e1_ci",
                   "cf_noma_e2",  "cf_noma_e2_ci", "cf_oma_e2", "cf_oma_e2_ci"};

  ExperimentConfig base = config;
  base.objective = objective;
  if (sweep_alpha) {
    if (base.alpha_grid.size() < 2) base.alpha_grid = linspace(3.0, 5.0, 9);
    base.mu_grid = {config.mu_grid.front()};
  } else {
    if (base.mu_grid.size() < 2) base.mu_grid = linspace(0.0, 1.0, 11);
    base.alpha_grid = {config.alpha_grid.front()};
  }
  base.lambda_grid = {config.lambda_grid.front()};

  ExperimentConfig bench = base;
  bench.schemes = {SchemeKind::NomaBenchmark, SchemeKind::OmaBenchmark};
  const SweepResult bm = run_benchmark(bench);

  ExperimentConfig cf1 = base;
  cf1.schemes = {SchemeKind::NomaCsiFree, SchemeKind::OmaCsiFree};
  cf1.eps_1 = cf1.eps_2 = 0.1;
  const SweepResult r1 = run_csifree(cf1);

  ExperimentConfig cf2 = cf1;
  cf2.eps_1 = cf2.eps_2 = 0.01;
  const SweepResult r2 = run_csifree(cf2);

  const std::vector<double>& axis = sweep_alpha ? base.alpha_grid : base.mu_grid;
  for (double v : axis) {
    const double alpha = sweep_alpha ? v : base.alpha_grid.front();
    const double mu = sweep_alpha ? base.mu_grid.front() : v;
    const double lambda = base.lambda_grid.front();
    std::vector<double> row = {v};
    for (const auto* sweep : {&bm, &r1, &r2}) {
      const SchemeKind noma = sweep == &bm ? SchemeKind::NomaBenchmark
                                           : SchemeKind::NomaCsiFree;
      const SchemeKind oma = sweep == &bm ? SchemeKind::OmaBenchmark
                                          : SchemeKind::OmaCsiFree;
      const SweepRow& a = sweep->find(noma, objective, alpha, mu, lambda);
      const SweepRow& b = sweep->find(oma, objective, alpha, mu, lambda);
      row.push_back(a.rate.mean);
      row.push_back(a.rate.half_width);
      row.push_back(b.rate.mean);
      row.push_back(b.rate.half_width);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

DataTable figure_9(const ExperimentConfig&) {
  DataTable table;
  table.title =
      "interferer-count correction factor f(n,eps), bracketed by its n=1 "
      "and n->inf limits (threshold = mean-power-ratio times f)";
  table.columns = {"eps", "f_n1", "f_n2", "f_n5", "f_n10", "f_n100", "f_limit"};
  for (double eps : logspace(1e-4, 0.9, 50)) {
    std::vector<double> row = {eps};
    for (int n : {1, 2, 5, 10, 100}) {
      row.push_back(f_of_n(n, eps));
    }
    row.push_back(-std::log1p(-eps));
    table.rows.push_back(std::move(row));
  }
  return table;
}

DataTable figure_10(const ExperimentConfig&) {
  DataTable table;
  table.title = "relative error (percent) of the squared-mean sum-rate "
                "surrogate vs gamma1";
  table.columns = {"gamma1", "xi_gamma2_001", "xi_gamma2_01", "xi_gamma2_1"};
  for (double gamma1 : logspace(1e-3, 10.0, 53)) {
    table.rows.push_back({gamma1, xi_relative_error(gamma1, 0.01),
                          xi_relative_error(gamma1, 0.1),
                          xi_relative_error(gamma1, 1.0)});
  }
  return table;
}

}  // namespace

DataTable reproduce_figure(const std::string& id, const ExperimentConfig& config) {
  config.validate();
  if (id == "2a") return figure_2a(config);
  if (id == "2b") return figure_2b(config);
  if (id == "3a") return figure_ratio(config, true);
  if (id == "3b") return figure_3b(config);
  if (id == "4") return figure_ratio(config, false);
  if (id == "5a") return figure_5a(config);
  if (id == "5b") return figure_5b(config);
  if (id == "6") return figure_6(config);
  if (id == "7a") return figure_sweep(config, Objective::EqualRate, true);
  if (id == "7b") return figure_sweep(config, Objective::EqualRate, false);
  if (id == "8a") return figure_sweep(config, Objective::MaxSumRate, true);
  if (id == "8b") return figure_sweep(config, Objective::MaxSumRate, false);
  if (id == "9") return figure_9(config);
  if (id == "10") return figure_10(config);
  throw std::invalid_argument("reproduce_figure: unknown figure id '" + id + "'");
}

}  // namespace noma
