#pragma once

#include <span>
#include <vector>

#include "noma/rng.hpp"

namespace noma {

// Power split of the composite downlink signal. per_user is ordered by
// decoding position and must be non-increasing so the intended decoding
// order is preserved at the receivers.
struct PowerProfile {
  double total = 1.0;             // P_T (dimensionless; it cancels in the SIR)
  std::vector<double> per_user;   // P_1 >= P_2 >= ... >= 0, sums to total
  double sic_error = 0.0;         // mu in [0,1]

  int num_users() const { return static_cast<int>(per_user.size()); }
  void validate() const;

  static PowerProfile single_user(double total = 1.0);
  static PowerProfile two_user(double beta, double sic_error, double total = 1.0);
};

// Unit-mean exponential power fading for one UE: h for the serving link and
// one g per interfering BS.
struct FadingDraw {
  double h = 1.0;
  std::vector<double> g;
};

FadingDraw draw_fading(std::size_t num_interferers, RngStream& rng);

// Inter-cell interference: sum of g_j * r_j^-alpha * P_T over interferers.
double interference(std::span<const double> interferer_distances,
                    std::span<const double> g, double total_power, double alpha);

// Post-SIC SIR of the user_index-th signal (1-based) at its own receiver.
// Earlier signals are cancelled up to the residual factor sic_error; later
// signals are treated as interference in full.
double sir_after_sic(int user_index, double h, double serving_distance,
                     const PowerProfile& power, double inter_cell, double alpha);

// Single-user instantaneous SIR h r^-alpha P_T / I, the ordering statistic
// of the full-CSI benchmark.
double instantaneous_ratio(double h, double serving_distance, double total_power,
                           double inter_cell, double alpha);

}  // namespace noma
