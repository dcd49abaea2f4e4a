#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "noma/channel.hpp"
#include "noma/geometry.hpp"

namespace noma {

// One evaluation point of the allocated-threshold distribution: which user,
// under which power profile, at which SIR threshold theta.
struct ThresholdQuery {
  double theta = 1.0;   // > 0
  double eps = 0.01;    // reliability target in (0,1)
  double alpha = 4.0;   // path-loss exponent > 2
  PowerProfile power = PowerProfile::single_user();
  int user_index = 1;   // 1-based

  double delta() const { return 2.0 / alpha; }
  void validate() const;

  static ThresholdQuery oma(double theta, double eps, double alpha);
};

// Transform point z(theta) = (P_i/theta - mu sum_{j<i} P_j - sum_{j>i} P_j)
// * eps / P_T. Non-positive z means theta is unreachable (the CDF is 1 there).
double z_of_theta(const ThresholdQuery& query);

// CDF of Psi = sum over the squared-relative-distance process of x^{-1/delta},
// i.e. the inverse transform of 1/(s 1F1(-delta,1-delta,-s)). Default path is
// Gaver-Stehfest; the Euler path exists to cross-check it.
double f_psi_cdf(double x, double delta, int stehfest_terms = 14);
double f_psi_cdf_euler(double x, double delta);

// Exact distribution of the allocated SIR threshold over PPP randomness:
// F(theta) = 1 - F_Psi(z(theta)).
double threshold_cdf(const ThresholdQuery& query, int stehfest_terms = 14);

// Closed form 1 - sinc(delta) z^delta: exact for z <= 1, a lower bound for
// z > 1 (where the raw expression may even be negative).
struct ClosedFormCdf {
  double value = 0.0;
  bool lower_bound_only = false;
};
ClosedFormCdf threshold_cdf_closed_form(const ThresholdQuery& query);

enum class CdfMethod { Inversion, ClosedForm, MonteCarlo };

struct CdfCurve {
  std::vector<double> theta;
  std::vector<double> value;  // non-decreasing, in [0,1]
  std::vector<double> error;  // per-point error estimate
  CdfMethod method = CdfMethod::Inversion;
};

// Tabulated analytic curve on an ascending theta grid. Inversion-method
// error estimates compare two Gaver-Stehfest orders; closed-form entries are
// exact where valid and carry the bound flag through the error column (0 =
// exact, nan = bound only).
CdfCurve threshold_cdf_curve(const ThresholdQuery& base, std::span<const double> theta_grid,
                             CdfMethod method, int stehfest_terms = 14);

// Empirical CDF of gamma_i over PPP realizations, allocated through the
// closed-form rate control; error column is the 95% binomial half-width.
CdfCurve threshold_cdf_montecarlo(const ThresholdQuery& base,
                                  const DeploymentConfig& deployment, int runs,
                                  std::span<const double> theta_grid,
                                  std::uint64_t seed);

}  // namespace noma
