#pragma once

#include <utility>

#include "noma/rate_control.hpp"

namespace noma {

// Two single-user thresholds arranged in decoding order: the user with the
// smaller threshold is decoded first, which is the order that maximizes the
// common rate and keeps the equal-rate split feasible.
struct OrderedPair {
  double phi1 = 0.0;  // first in decoding order (smaller threshold)
  double phi2 = 0.0;  // second (larger threshold)
  int label1 = 0;     // original UE label of the first-decoded user (0 = A, 1 = B)
  int label2 = 1;
  bool tie = false;
};

OrderedPair order_pair(double phi_a, double phi_b);

enum class Objective { EqualRate, MaxSumRate };
enum class Scheme { Noma, Oma };

// Power fraction of the first-decoded user that equalizes the two post-split
// thresholds. Smaller root of
//   phi1 phi2 (1-mu) b^2 - (phi1+phi2+2 phi1 phi2) b + phi2 (1+phi1) = 0,
// evaluated in product form so the mu -> 1 degeneration is seamless.
double equal_rate_beta(const OrderedPair& pair, double mu);

// Common threshold reached under the equal-rate split.
double equal_rate_gamma(const OrderedPair& pair, double mu);

// Necessary feasibility condition for the equal-rate split:
// 2 phi1 / (2 + phi1 (1-mu)) <= phi2. Always true once ordered.
bool feasibility_equal_rate(const OrderedPair& pair, double mu);

// SIC-imperfection level below which equal-rate NOMA outrates half-resource OMA.
double equal_rate_mu_threshold(const OrderedPair& pair);
bool noma_beats_oma_equal_rate(const OrderedPair& pair, double mu);

// (1+gamma1)(1+gamma2) under an arbitrary split beta in [1/2, 1].
double sum_rate_gamma_tilde(const OrderedPair& pair, double mu, double beta);

// SIC-imperfection level below which the half split beats the full split for
// sum rate; the optimum is always one of the two interval extremes. At mu = 0
// the exact monotonicity rule applies instead of the surrogate threshold.
double sum_rate_mu_threshold(const OrderedPair& pair);
double sum_rate_beta_star(const OrderedPair& pair, double mu);

// gamma1 + gamma2 at the extreme splits only (beta = 1/2 or beta = 1).
double sum_rate_gamma_bar(const OrderedPair& pair, double mu, double beta);

// Second-order surrogate (1 + (gamma1+gamma2)/2)^2 >= (1+gamma1)(1+gamma2),
// with its relative error xi in percent.
double gamma_tilde_approx(double gamma1, double gamma2);
double xi_relative_error(double gamma1, double gamma2);

// Sum-rate NOMA-vs-OMA gate. Exact for mu = 0; for mu > 0 the closed form
// rides on the surrogate and holds up to its (small) error.
double sum_rate_oma_crossover_mu(const OrderedPair& pair);
bool noma_beats_oma_sum_rate(const OrderedPair& pair, double mu);

enum class FairnessScheme { Oma, NomaSumRate };

// Threshold ratio of the first-decoded user to the second under the given
// scheme; the NOMA variant is defined at the beta = 1/2 operating point.
double fairness_kappa(const OrderedPair& pair, double mu, FairnessScheme scheme);

struct AllocationResult {
  OrderedPair pair;
  double beta = 0.5;
  double power1 = 0.0, power2 = 0.0;
  double gamma1 = 0.0, gamma2 = 0.0;
  double rate1 = 0.0, rate2 = 0.0;  // bps/Hz
  Objective objective = Objective::EqualRate;
  Scheme scheme = Scheme::Noma;
  // NOMA-vs-OMA verdicts: the closed-form gate and the direct rate comparison
  bool beats_oma_gate = false;
  bool beats_oma_direct = false;
};

// End-to-end allocation: thresholds from the closed-form rate control, order,
// split per objective, per-user thresholds and rates.
AllocationResult allocate(const LinkSpec& link_a, const LinkSpec& link_b, double mu,
                          double total_power, Objective objective);
AllocationResult allocate_from_phi(double phi_a, double phi_b, double mu,
                                   double total_power, Objective objective);

// Half-resource OMA rates for the same pair: equal-rate hands both users the
// worse single-user rate; sum-rate hands each its own.
std::pair<double, double> oma_rates(const OrderedPair& pair, Objective objective);

}  // namespace noma
