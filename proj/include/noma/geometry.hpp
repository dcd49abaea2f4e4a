#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "noma/rng.hpp"

namespace noma {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Point& a, const Point& b);

// Square deployment window [-half_width, half_width]^2 with base stations
// drawn from a homogeneous Poisson process. UEs are confined to the inner
// square shrunk by guard_fraction so their interference field is
// approximately edge-free.
struct DeploymentConfig {
  double density = 1e-4;        // BS per m^2
  double half_width = 0.0;      // meters
  double guard_fraction = 0.2;  // fraction of half_width kept clear of UEs
  std::uint64_t seed = 1;

  double area() const { return 4.0 * half_width * half_width; }
  double mean_bs_count() const { return density * area(); }
  double inner_half_width() const { return half_width * (1.0 - guard_fraction); }
  double guard_distance() const { return half_width * guard_fraction; }

  void validate() const;  // throws std::invalid_argument

  // Window sized so that density * area equals mean_count.
  static DeploymentConfig with_mean_count(double mean_count, double density = 1e-4,
                                          double guard_fraction = 0.2);
};

struct Association {
  std::size_t serving_index = 0;
  double serving_distance = 0.0;
  std::vector<double> interferer_distances;  // ascending, serving BS excluded
};

struct NetworkRealization {
  std::vector<Point> bs_positions;
  std::vector<Point> ue_positions;
  std::vector<Association> links;  // one entry per UE
};

// Poisson number of BSs, uniform positions, resampled until at least 2 BSs.
std::vector<Point> sample_bs_positions(const DeploymentConfig& config, RngStream& rng);

// Nearest-BS association; requires >= 2 BSs so an interferer exists.
Association associate(const std::vector<Point>& bs_positions, const Point& ue);

Point sample_ue_position(const DeploymentConfig& config, RngStream& rng);

// One deployment with a single tagged UE placed uniformly in the inner region.
NetworkRealization sample_ppp(const DeploymentConfig& config, RngStream& rng);

void add_ue(NetworkRealization& realization, const Point& ue);

// Two UEs sharing a serving BS: the first is uniform in the inner region, the
// second is rejection-sampled until it lands in the same Voronoi cell.
// Returns nullopt when max_tries rejections are exhausted.
std::optional<NetworkRealization> sample_co_cell_pair(const DeploymentConfig& config,
                                                      RngStream& rng,
                                                      int max_tries = 20000);

// Deterministic interferer layouts r_j = 40 + step*j, j = 1..n, used by the
// example deployments (step 10 / 20 / 30 for high / medium / low density).
enum class FixtureRule { HighDensity, MediumDensity, LowDensity };

double fixture_step(FixtureRule rule);
std::vector<double> make_fixture(FixtureRule rule, int n);

}  // namespace noma
