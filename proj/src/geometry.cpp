#include "noma/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace noma {

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void DeploymentConfig::validate() const {
  if (!(density > 0.0) || !std::isfinite(density)) {
    throw std::invalid_argument("deployment: density must be positive");
  }
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw std::invalid_argument("deployment: window must be non-empty");
  }
  if (!(guard_fraction >= 0.0 && guard_fraction < 1.0)) {
    throw std::invalid_argument("deployment: guard fraction must lie in [0,1)");
  }
  if (!(mean_bs_count() > 0.0)) {
    throw std::invalid_argument("deployment: expected BS count must be positive");
  }
}

DeploymentConfig DeploymentConfig::with_mean_count(double mean_count, double density,
                                                   double guard_fraction) {
  DeploymentConfig config;
  config.density = density;
  config.half_width = 0.5 * std::sqrt(mean_count / density);
  config.guard_fraction = guard_fraction;
  config.validate();
  return config;
}

std::vector<Point> sample_bs_positions(const DeploymentConfig& config, RngStream& rng) {
  config.validate();
  const double mean = config.mean_bs_count();
  std::vector<Point> bs;
  do {
    const long count = rng.poisson(mean);
    bs.clear();
    bs.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
      bs.push_back({rng.uniform_in(-config.half_width, config.half_width),
                    rng.uniform_in(-config.half_width, config.half_width)});
    }
  } while (bs.size() < 2);  // an interferer must exist
  return bs;
}

Association associate(const std::vector<Point>& bs_positions, const Point& ue) {
  if (bs_positions.size() < 2) {
    throw std::invalid_argument("associate: need at least 2 BSs (no interferer exists)");
  }
  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < bs_positions.size(); ++i) {
    const double d = distance(bs_positions[i], ue);
    if (d < best_dist) {
      best_dist = d;
      best = i;
    }
  }
  Association assoc;
  assoc.serving_index = best;
  assoc.serving_distance = best_dist;
  assoc.interferer_distances.reserve(bs_positions.size() - 1);
  for (std::size_t i = 0; i < bs_positions.size(); ++i) {
    if (i == best) continue;
    assoc.interferer_distances.push_back(distance(bs_positions[i], ue));
  }
  std::sort(assoc.interferer_distances.begin(), assoc.interferer_distances.end());
  return assoc;
}

Point sample_ue_position(const DeploymentConfig& config, RngStream& rng) {
  const double w = config.inner_half_width();
  return {rng.uniform_in(-w, w), rng.uniform_in(-w, w)};
}

NetworkRealization sample_ppp(const DeploymentConfig& config, RngStream& rng) {
  NetworkRealization realization;
  realization.bs_positions = sample_bs_positions(config, rng);
  add_ue(realization, sample_ue_position(config, rng));
  return realization;
}

void add_ue(NetworkRealization& realization, const Point& ue) {
  realization.ue_positions.push_back(ue);
  realization.links.push_back(associate(realization.bs_positions, ue));
}

std::optional<NetworkRealization> sample_co_cell_pair(const DeploymentConfig& config,
                                                      RngStream& rng, int max_tries) {
  NetworkRealization realization;
  realization.bs_positions = sample_bs_positions(config, rng);
  add_ue(realization, sample_ue_position(config, rng));
  const std::size_t cell = realization.links[0].serving_index;
  const Point anchor = realization.bs_positions[cell];

  for (int attempt = 0; attempt < max_tries; ++attempt) {
    const Point candidate = sample_ue_position(config, rng);
    const double dx = candidate.x - anchor.x;
    const double dy = candidate.y - anchor.y;
    const double d0_sq = dx * dx + dy * dy;
    bool closer_found = false;
    for (std::size_t i = 0; i < realization.bs_positions.size(); ++i) {
      if (i == cell) continue;
      const double ex = candidate.x - realization.bs_positions[i].x;
      const double ey = candidate.y - realization.bs_positions[i].y;
      if (ex * ex + ey * ey < d0_sq) {
        closer_found = true;
        break;
      }
    }
    if (!closer_found) {
      add_ue(realization, candidate);
      return realization;
    }
  }
  return std::nullopt;
}

double fixture_step(FixtureRule rule) {
  switch (rule) {
    case FixtureRule::HighDensity:
      return 10.0;
    case FixtureRule::MediumDensity:
      return 20.0;
    case FixtureRule::LowDensity:
      return 30.0;
  }
  throw std::invalid_argument("fixture_step: unknown rule");
}

std::vector<double> make_fixture(FixtureRule rule, int n) {
  if (n < 1) {
    throw std::invalid_argument("make_fixture: n must be >= 1");
  }
  const double step = fixture_step(rule);
  std::vector<double> dists(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    dists[static_cast<std::size_t>(j - 1)] = 40.0 + step * j;
  }
  return dists;
}

}  // namespace noma
