#include "noma/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace noma {

void PowerProfile::validate() const {
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw std::invalid_argument("power profile: total power must be positive");
  }
  if (per_user.empty()) {
    throw std::invalid_argument("power profile: at least one user required");
  }
  if (!(sic_error >= 0.0 && sic_error <= 1.0)) {
    throw std::invalid_argument("power profile: SIC error factor must lie in [0,1]");
  }
  // beta = 1 is a valid sum-rate operating point, so a trailing zero is allowed
  double sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (double p : per_user) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("power profile: per-user powers must be non-negative");
    }
    if (p > prev * (1.0 + 1e-12) + 1e-300) {
      throw std::invalid_argument("power profile: powers must be non-increasing");
    }
    prev = p;
    sum += p;
  }
  if (!(per_user.front() > 0.0)) {
    throw std::invalid_argument("power profile: leading power must be positive");
  }
  if (std::abs(sum - total) > 1e-9 * total) {
    throw std::invalid_argument("power profile: per-user powers must sum to total");
  }
}

PowerProfile PowerProfile::single_user(double total) {
  PowerProfile p;
  p.total = total;
  p.per_user = {total};
  p.sic_error = 0.0;
  return p;
}

PowerProfile PowerProfile::two_user(double beta, double sic_error, double total) {
  if (!(beta >= 0.5 && beta <= 1.0)) {
    throw std::invalid_argument("power profile: beta must lie in [1/2, 1]");
  }
  PowerProfile p;
  p.total = total;
  p.per_user = {beta * total, (1.0 - beta) * total};
  p.sic_error = sic_error;
  return p;
}

FadingDraw draw_fading(std::size_t num_interferers, RngStream& rng) {
  FadingDraw draw;
  draw.h = rng.exponential();
  draw.g.resize(num_interferers);
  for (auto& g : draw.g) g = rng.exponential();
  return draw;
}

double interference(std::span<const double> interferer_distances,
                    std::span<const double> g, double total_power, double alpha) {
  if (interferer_distances.empty()) {
    throw std::invalid_argument("interference: interferer list is empty");
  }
  if (interferer_distances.size() != g.size()) {
    throw std::invalid_argument("interference: fading/distance size mismatch");
  }
  if (!(alpha > 2.0)) {
    throw std::invalid_argument("interference: path-loss exponent must exceed 2");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    sum += g[j] * std::pow(interferer_distances[j], -alpha);
  }
  return sum * total_power;
}

double sir_after_sic(int user_index, double h, double serving_distance,
                     const PowerProfile& power, double inter_cell, double alpha) {
  const int m = power.num_users();
  if (user_index < 1 || user_index > m) {
    throw std::invalid_argument("sir_after_sic: user index out of range");
  }
  if (!(inter_cell > 0.0)) {
    throw std::invalid_argument("sir_after_sic: interference must be positive");
  }
  double residual = 0.0;  // cancelled-signal leakage plus not-yet-decoded signals
  for (int j = 1; j <= m; ++j) {
    if (j < user_index) {
      residual += power.sic_error * power.per_user[static_cast<std::size_t>(j - 1)];
    } else if (j > user_index) {
      residual += power.per_user[static_cast<std::size_t>(j - 1)];
    }
  }
  const double gain = h * std::pow(serving_distance, -alpha);
  const double wanted = gain * power.per_user[static_cast<std::size_t>(user_index - 1)];
  return wanted / (gain * residual + inter_cell);
}

double instantaneous_ratio(double h, double serving_distance, double total_power,
                           double inter_cell, double alpha) {
  if (!(inter_cell > 0.0)) {
    throw std::invalid_argument("instantaneous_ratio: interference must be positive");
  }
  return h * std::pow(serving_distance, -alpha) * total_power / inter_cell;
}

}  // namespace noma
