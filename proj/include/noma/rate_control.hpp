#pragma once

#include <vector>

#include "noma/channel.hpp"
#include "noma/geometry.hpp"

namespace noma {

// Topology summary of one downlink: serving distance, every interferer
// distance inside the window, the target error probability and the
// path-loss exponent. alpha > 2 keeps the interference field summable.
struct LinkSpec {
  double serving_distance = 0.0;
  std::vector<double> interferer_distances;  // ascending
  double target_error = 0.01;                // epsilon in (0,1)
  double path_loss_exponent = 4.0;           // alpha > 2

  void validate() const;

  // upsilon = r^-alpha / sum_j r_j^-alpha, the mean desired-to-interference
  // power ratio of the link.
  double mean_power_ratio() const;

  static LinkSpec from_fixture(FixtureRule rule, int n, double serving_distance,
                               double target_error, double alpha);
  static LinkSpec from_association(const Association& assoc, double target_error,
                                   double alpha);
};

enum class PhiMethod { Exact, Approximate };

// Single-user SIR threshold meeting the reliability target on this link.
struct PhiValue {
  double value = 0.0;
  PhiMethod method = PhiMethod::Exact;
  // set when target_error exceeds 0.1, outside the approximation's
  // advertised accuracy range
  bool eps_above_approx_range = false;
};

// Unique positive root phi of  prod_j (1 + phi (r/r_j)^alpha) = 1/(1-eps),
// found by bracketed Newton/bisection to relative residual <= 1e-12.
PhiValue phi_exact(const LinkSpec& link);

// Closed-form approximation phi ~= eps * upsilon, tight for eps <= 0.1.
PhiValue phi_approx(const LinkSpec& link);

// n ((1-eps)^{-1/n} - 1): the finite-n correction factor between the
// approximate threshold and the arithmetic-mean surrogate root. Decreasing
// in n, from eps/(1-eps) at n=1 towards -ln(1-eps).
double f_of_n(int n, double eps);

// Post-split SIR threshold of the user_index-th signal (1-based):
// gamma = phi P_i / (P_T + phi (mu * sum_{j<i} P_j + sum_{j>i} P_j)).
double gamma_from_phi(double phi, int user_index, const PowerProfile& power);

// Shannon rate log2(1 + gamma) in bps/Hz.
double rate_from_gamma(double gamma);

}  // namespace noma
