// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria run at their stated tolerances; runtimes are printed so
// budget regressions are visible.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "noma/experiments.hpp"
#include "noma/threshold_dist.hpp"

using namespace noma;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

OrderedPair random_ordered_pair(RngStream& rng) {
  const double a = std::pow(10.0, rng.uniform_in(-3.0, 0.5));
  const double b = std::pow(10.0, rng.uniform_in(-3.0, 0.5));
  return order_pair(a, b);
}

std::string fmt(const char* format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

// 1. Equal-rate crossover threshold at (0.4, 0.6) vs the quoted 1.53 +- 0.005.
Outcome criterion_1() {
  const double value = equal_rate_mu_threshold(order_pair(0.4, 0.6));
  const bool pass = std::abs(value - 1.53) <= 0.005;
  return {pass, fmt("threshold = %.6f, required 1.53 +- 0.005 "
                    "(exact formula value; the 1.53 figure is a truncation of it)",
                    value)};
}

// 2. Equal-rate fixed point: gamma1 == gamma2 to 1e-9 relative after allocate().
Outcome criterion_2() {
  RngStream rng(202);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const OrderedPair pair = random_ordered_pair(rng);
    for (double mu : {0.0, 0.1, 0.5, 1.0}) {
      const AllocationResult alloc =
          allocate_from_phi(pair.phi1, pair.phi2, mu, 1.0, Objective::EqualRate);
      const double rel = std::abs(alloc.gamma1 - alloc.gamma2) /
                         std::max(alloc.gamma1, alloc.gamma2);
      worst = std::max(worst, rel);
    }
  }
  return {worst <= 1e-9, fmt("worst |gamma1-gamma2|/gamma = %.3e over 4e4 allocations "
                             "(limit 1e-9)", worst)};
}

// 3. Approximation fidelity over PPP-derived links, plus the single-interferer
//    identities behind the quoted 1.0% / 11.1% figures.
Outcome criterion_3() {
  const DeploymentConfig deployment = DeploymentConfig::with_mean_count(200.0);
  double worst_tight = 0.0, worst_loose = 0.0;
  for (int r = 0; r < 1000; ++r) {
    RngStream rng = RngStream::substream(303, static_cast<std::uint64_t>(r));
    const NetworkRealization realization = sample_ppp(deployment, rng);
    for (double eps : {0.01, 0.1}) {
      const LinkSpec link =
          LinkSpec::from_association(realization.links[0], eps, 4.0);
      const double exact = phi_exact(link).value;
      const double approx = phi_approx(link).value;
      const double rel = std::abs(approx - exact) / exact;
      (eps == 0.01 ? worst_tight : worst_loose) =
          std::max(eps == 0.01 ? worst_tight : worst_loose, rel);
    }
  }

  LinkSpec single;
  single.serving_distance = 30.0;
  single.interferer_distances = {60.0};
  single.path_loss_exponent = 4.0;
  single.target_error = 0.01;
  const double e2 = phi_exact(single).value;
  const double a2 = phi_approx(single).value;
  single.target_error = 0.1;
  const double e1 = phi_exact(single).value;
  const double a1 = phi_approx(single).value;
  const bool identities =
      std::abs((e2 - a2) / e2 - 0.01) <= 1e-10 &&
      std::abs((e1 - a1) / e1 - 0.10) <= 1e-10 &&
      std::abs((e2 - a2) / a2 - 0.01 / 0.99) <= 1e-10 &&
      std::abs((e1 - a1) / a1 - 1.0 / 9.0) <= 1e-10;

  const bool pass = worst_tight <= 0.02 && worst_loose <= 0.12 && identities;
  return {pass, fmt("worst rel err %.4f (eps=1e-2, limit 0.02), %.4f (eps=1e-1, "
                    "limit 0.12); n=1 identities (1.0%%, 10.0%%, 1.01%%, 11.1%%) %s",
                    worst_tight, worst_loose, identities ? "hold" : "FAIL")};
}

// 4. Threshold-CDF cross-validation: inversion vs Monte Carlo and closed form.
Outcome criterion_4() {
  const double eps = 0.01, alpha = 4.0;
  std::vector<double> grid;
  for (double db = -26.0; db <= 6.0 + 1e-9; db += 1.0) {
    grid.push_back(std::pow(10.0, db / 10.0));
  }
  const ThresholdQuery base = ThresholdQuery::oma(1.0, eps, alpha);
  const CdfCurve analytic = threshold_cdf_curve(base, grid, CdfMethod::Inversion);
  const DeploymentConfig deployment = DeploymentConfig::with_mean_count(500.0, 1e-4, 0.4);
  const CdfCurve mc = threshold_cdf_montecarlo(base, deployment, 10000, grid, 404);

  double worst_mc = 0.0, worst_closed = 0.0, bound_slack = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    worst_mc = std::max(worst_mc, std::abs(mc.value[i] - analytic.value[i]));
    const ThresholdQuery q = ThresholdQuery::oma(grid[i], eps, alpha);
    const ClosedFormCdf closed = threshold_cdf_closed_form(q);
    if (!closed.lower_bound_only) {
      worst_closed = std::max(worst_closed, std::abs(closed.value - analytic.value[i]));
    } else {
      bound_slack = std::max(bound_slack, closed.value - analytic.value[i]);
    }
  }
  const bool pass = worst_mc <= 0.02 && worst_closed <= 1e-3 && bound_slack <= 1e-6;
  return {pass, fmt("max |F_mc - F_inv| = %.4f (limit 0.02); max |F_closed - F_inv| "
                    "= %.2e for z<=1 (limit 1e-3); bound violation %.1e (limit 1e-6)",
                    worst_mc, worst_closed, bound_slack)};
}

// 5. Closed-form CDFs at eps = 1e-1 and 1e-2 are exact 10 dB translates.
Outcome criterion_5() {
  double worst = 0.0;
  for (double db = -30.0; db <= 10.0 + 1e-9; db += 0.25) {
    const double theta = std::pow(10.0, db / 10.0);
    const ClosedFormCdf strict =
        threshold_cdf_closed_form(ThresholdQuery::oma(theta, 0.01, 4.0));
    const ClosedFormCdf shifted =
        threshold_cdf_closed_form(ThresholdQuery::oma(10.0 * theta, 0.1, 4.0));
    worst = std::max(worst, std::abs(strict.value - shifted.value) /
                                std::max(1e-30, std::abs(strict.value)));
  }
  return {worst <= 1e-13, fmt("worst relative mismatch %.2e over the grid "
                              "(identity, limit 1e-13)", worst)};
}

// 6. Density invariance of the CSI-free mean rates: overlapping 95% CIs for
//    every scheme/objective pair across lambda in {0.5, 1, 2} x 1e-4.
Outcome criterion_6() {
  ExperimentConfig config;
  config.runs = 5000;
  config.deployment = DeploymentConfig::with_mean_count(400.0, 1e-4, 0.4);
  config.eps_1 = config.eps_2 = 0.01;
  config.mu_grid = {0.1};
  config.alpha_grid = {4.0};
  config.lambda_grid = {0.5e-4, 1e-4, 2e-4};
  config.schemes = {SchemeKind::NomaCsiFree, SchemeKind::OmaCsiFree};
  config.seed = 606;
  config.workers = 4;
  const SweepResult sweep = run_csifree(config);

  bool pass = true;
  std::string detail;
  for (SchemeKind scheme : {SchemeKind::NomaCsiFree, SchemeKind::OmaCsiFree}) {
    for (Objective objective : {Objective::EqualRate, Objective::MaxSumRate}) {
      for (std::size_t i = 0; i < config.lambda_grid.size(); ++i) {
        for (std::size_t j = i + 1; j < config.lambda_grid.size(); ++j) {
          const MeanCi& a = sweep.find(scheme, objective, 4.0, 0.1,
                                       config.lambda_grid[i]).rate;
          const MeanCi& b = sweep.find(scheme, objective, 4.0, 0.1,
                                       config.lambda_grid[j]).rate;
          const double gap = std::abs(a.mean - b.mean);
          const double joint = a.half_width + b.half_width;
          if (gap > joint) pass = false;
          if (i == 0 && j == 1 && scheme == SchemeKind::NomaCsiFree &&
              objective == Objective::EqualRate) {
            detail = fmt("e.g. noma equal-rate: means %.5f / %.5f, CI gap %.2e vs "
                         "joint half-width %.2e", a.mean, b.mean, gap, joint);
          }
        }
      }
    }
  }
  return {pass, detail + (pass ? "; all 4 scheme/objective pairs overlap"
                               : "; some CI pair does NOT overlap")};
}

// 7. Perfect-SIC sum-rate dominance, exact inequality over 1e4 ordered pairs.
Outcome criterion_7() {
  RngStream rng(707);
  int violations = 0;
  double worst_margin = 1e300;
  for (int i = 0; i < 10000; ++i) {
    const OrderedPair pair = random_ordered_pair(rng);
    const AllocationResult alloc =
        allocate_from_phi(pair.phi1, pair.phi2, 0.0, 1.0, Objective::MaxSumRate);
    const auto [o1, o2] = oma_rates(alloc.pair, Objective::MaxSumRate);
    const double margin = alloc.rate1 + alloc.rate2 - (o1 + o2);
    worst_margin = std::min(worst_margin, margin);
    if (margin < 0.0) ++violations;
  }
  return {violations == 0, fmt("%d violations over 1e4 pairs (smallest margin %.3e "
                               "bps/Hz)", violations, worst_margin)};
}

// 8. The split objective peaks at an interval extreme on a dense beta grid.
Outcome criterion_8() {
  RngStream rng(808);
  double worst_excess = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const OrderedPair pair = random_ordered_pair(rng);
    for (double mu : {0.0, 0.1, 0.5, 1.0}) {
      const double best_extreme = std::max(sum_rate_gamma_bar(pair, mu, 0.5),
                                           sum_rate_gamma_bar(pair, mu, 1.0));
      for (int k = 0; k <= 500; ++k) {
        const double beta = 0.5 + 0.001 * k;
        const double g1 = pair.phi1 * beta / (1.0 + (1.0 - beta) * pair.phi1);
        const double g2 =
            pair.phi2 * (1.0 - beta) / (1.0 + beta * mu * pair.phi2);
        worst_excess = std::max(worst_excess, g1 + g2 - best_extreme);
      }
    }
  }
  return {worst_excess <= 1e-6, fmt("worst interior excess over the better extreme "
                                    "= %.2e (limit 1e-6, grid step 1e-3)",
                                    worst_excess)};
}

// 9. Reliability audit: empirical outage within 3 binomial sigma of the target
//    when thresholds come from the exact product root.
Outcome criterion_9() {
  const DeploymentConfig deployment = DeploymentConfig::with_mean_count(50.0);
  const std::vector<double> eps = {0.1, 0.01};
  const AuditResult audit = reliability_audit(deployment, eps, 20, 100000, 4.0, 0.1, 909);
  double worst_sigmas = 0.0;
  int fails = 0;
  for (const AuditCheck& check : audit.checks) {
    worst_sigmas = std::max(worst_sigmas,
                            std::abs(check.outage_exact - check.eps) / check.sigma);
    if (!check.within_3sigma) ++fails;
  }
  return {audit.all_pass, fmt("%d of %zu checks outside 3 sigma (worst deviation "
                              "%.2f sigma)", fails, audit.checks.size(), worst_sigmas)};
}

// 10. Full-CSI benchmark vs CSI-free ordering, the equal-rate crossing in
//     (0.3, 0.5), and the mu -> 0 sum-rate gain near 39%.
Outcome criterion_10() {
  ExperimentConfig config;
  config.runs = 5000;
  config.deployment = DeploymentConfig::with_mean_count(200.0);
  config.eps_1 = config.eps_2 = 0.01;
  config.mu_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  config.alpha_grid = {4.0};
  config.lambda_grid = {1e-4};
  config.seed = 1010;
  config.workers = 4;
  config.schemes = {SchemeKind::NomaCsiFree, SchemeKind::OmaCsiFree,
                    SchemeKind::NomaBenchmark, SchemeKind::OmaBenchmark};
  const SweepResult cf = run_csifree(config);
  const SweepResult bm = run_benchmark(config);

  bool upper_bound = true;
  for (double mu : config.mu_grid) {
    for (Objective obj : {Objective::EqualRate, Objective::MaxSumRate}) {
      const double cf_noma =
          cf.find(SchemeKind::NomaCsiFree, obj, 4.0, mu, 1e-4).rate.mean;
      const double cf_oma =
          cf.find(SchemeKind::OmaCsiFree, obj, 4.0, mu, 1e-4).rate.mean;
      const double bm_noma =
          bm.find(SchemeKind::NomaBenchmark, obj, 4.0, mu, 1e-4).rate.mean;
      const double bm_oma =
          bm.find(SchemeKind::OmaBenchmark, obj, 4.0, mu, 1e-4).rate.mean;
      if (bm_noma < cf_noma || bm_oma < cf_oma) upper_bound = false;
    }
  }

  const double eq_03 =
      bm.find(SchemeKind::NomaBenchmark, Objective::EqualRate, 4.0, 0.3, 1e-4).rate.mean -
      bm.find(SchemeKind::OmaBenchmark, Objective::EqualRate, 4.0, 0.3, 1e-4).rate.mean;
  const double eq_05 =
      bm.find(SchemeKind::NomaBenchmark, Objective::EqualRate, 4.0, 0.5, 1e-4).rate.mean -
      bm.find(SchemeKind::OmaBenchmark, Objective::EqualRate, 4.0, 0.5, 1e-4).rate.mean;
  const bool crossing = eq_03 > 0.0 && eq_05 < 0.0;

  const double sum_noma =
      bm.find(SchemeKind::NomaBenchmark, Objective::MaxSumRate, 4.0, 0.0, 1e-4).rate.mean;
  const double sum_oma =
      bm.find(SchemeKind::OmaBenchmark, Objective::MaxSumRate, 4.0, 0.0, 1e-4).rate.mean;
  const double gain = sum_noma / sum_oma - 1.0;
  const bool gain_ok = std::abs(gain - 0.39) <= 0.05;

  const bool pass = upper_bound && crossing && gain_ok;
  return {pass, fmt("benchmark bounds CSI-free: %s; equal-rate NOMA-OMA margin "
                    "%.4f at mu=0.3, %.4f at mu=0.5 (crossing %s); mu=0 sum-rate "
                    "gain %.1f%% (39 +- 5)",
                    upper_bound ? "yes" : "NO", eq_03, eq_05,
                    crossing ? "inside (0.3,0.5)" : "NOT in (0.3,0.5)",
                    100.0 * gain)};
}

// 11. Fairness relation at the half split: NOMA is less fair exactly when
//     mu < phi1/phi2, zero violations over the grid.
Outcome criterion_11() {
  int violations = 0;
  long total = 0, ties = 0;
  // grid indices make the tie manifold mu phi2 == phi1 exactly detectable;
  // off it, the margin (>= 1.25e-4) dwarfs any rounding
  for (int i = 1; i <= 19; ++i) {
    for (int j = i; j <= 20; ++j) {
      for (int m = 0; m <= 20; ++m) {
        const double phi1 = i * 0.05;
        const double phi2 = j * 0.05;
        const double mu = m * 0.05;
        const double oma = phi1 / phi2;
        const double noma = oma * (2.0 + mu * phi2) / (2.0 + phi1);
        ++total;
        if (m * j == 20 * i) {
          // exact tie: both strict relations are false in real arithmetic;
          // the computed ratio may sit within an ulp of 1
          ++ties;
          if (std::abs(noma / oma - 1.0) > 4e-16) ++violations;
        } else if ((noma < oma) != (mu < phi1 / phi2)) {
          ++violations;
        }
      }
    }
  }
  // and the operation agrees where the half split is optimal
  const OrderedPair pair = order_pair(0.1, 0.6);
  for (double mu : {0.0, 0.05, 0.5, 1.0}) {
    const double oma = fairness_kappa(pair, mu, FairnessScheme::Oma);
    const double noma = fairness_kappa(pair, mu, FairnessScheme::NomaSumRate);
    ++total;
    if ((noma < oma) != (mu < pair.phi1 / pair.phi2)) ++violations;
  }
  return {violations == 0,
          fmt("%d violations over %ld grid points (%ld exact ties handled)",
              violations, total, ties)};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> criteria = {
      {1, "equal-rate NOMA-vs-OMA crossover threshold", criterion_1},
      {2, "equal-rate fixed point", criterion_2},
      {3, "threshold approximation fidelity", criterion_3},
      {4, "threshold-CDF cross-validation", criterion_4},
      {5, "10 dB shift between reliability targets", criterion_5},
      {6, "density invariance of mean rates", criterion_6},
      {7, "perfect-SIC sum-rate dominance", criterion_7},
      {8, "split optimum at interval extremes", criterion_8},
      {9, "reliability audit", criterion_9},
      {10, "benchmark vs CSI-free ordering", criterion_10},
      {11, "fairness relation", criterion_11},
  };

  int failures = 0;
  for (const Entry& entry : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = entry.run();
    } catch (const std::exception& err) {
      outcome = {false, std::string("exception: ") + err.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s — %s (%.1f s)\n",
                outcome.pass ? "PASS" : "FAIL", entry.id, entry.name,
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
