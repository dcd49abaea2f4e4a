#include "noma/pair_allocation.hpp"

#include <cmath>
#include <stdexcept>

namespace noma {

OrderedPair order_pair(double phi_a, double phi_b) {
  if (!(phi_a > 0.0 && phi_b > 0.0)) {
    throw std::invalid_argument("order_pair: thresholds must be positive");
  }
  OrderedPair pair;
  pair.tie = phi_a == phi_b;
  if (phi_a <= phi_b) {
    pair.phi1 = phi_a;
    pair.phi2 = phi_b;
    pair.label1 = 0;
    pair.label2 = 1;
  } else {
    pair.phi1 = phi_b;
    pair.phi2 = phi_a;
    pair.label1 = 1;
    pair.label2 = 0;
  }
  return pair;
}

namespace {

void check_pair(const OrderedPair& pair) {
  if (!(pair.phi1 > 0.0 && pair.phi2 > 0.0)) {
    throw std::invalid_argument("pair: thresholds must be positive");
  }
}

void check_mu(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw std::invalid_argument("pair: SIC error factor must lie in [0,1]");
  }
}

}  // namespace

double equal_rate_beta(const OrderedPair& pair, double mu) {
  check_pair(pair);
  check_mu(mu);
  const double p1 = pair.phi1, p2 = pair.phi2;
  const double a = p1 * p2 * (1.0 - mu);
  const double minus_b = p1 + p2 + 2.0 * p1 * p2;
  const double c = p2 * (1.0 + p1);
  // smaller root via the product form: immune to cancellation as a -> 0
  const double disc = minus_b * minus_b - 4.0 * a * c;
  const double beta = 2.0 * c / (minus_b + std::sqrt(disc));
  if (beta < 0.5 - 1e-12) {
    throw std::domain_error("equal_rate_beta: infeasible order (beta < 1/2)");
  }
  return std::min(std::max(beta, 0.5), 1.0);
}

double equal_rate_gamma(const OrderedPair& pair, double mu) {
  check_pair(pair);
  check_mu(mu);
  const double s = pair.phi1 + pair.phi2;
  const double p = pair.phi1 * pair.phi2;
  const double k = pair.phi1 + mu * pair.phi2 * (1.0 + pair.phi1);
  // (sqrt(s^2 + 4 p k) - s) / (2 k) written without cancellation
  return 2.0 * p / (s + std::sqrt(s * s + 4.0 * p * k));
}

bool feasibility_equal_rate(const OrderedPair& pair, double mu) {
  check_pair(pair);
  check_mu(mu);
  return 2.0 * pair.phi1 / (2.0 + pair.phi1 * (1.0 - mu)) <= pair.phi2;
}

double equal_rate_mu_threshold(const OrderedPair& pair) {
  check_pair(pair);
  const double root = std::sqrt(1.0 + pair.phi1);
  return (pair.phi2 - pair.phi1) * (1.0 + root) / (pair.phi1 * pair.phi2 * root);
}

bool noma_beats_oma_equal_rate(const OrderedPair& pair, double mu) {
  check_mu(mu);
  return mu < equal_rate_mu_threshold(pair);
}

double sum_rate_gamma_tilde(const OrderedPair& pair, double mu, double beta) {
  check_pair(pair);
  check_mu(mu);
  if (!(beta >= 0.5 && beta <= 1.0)) {
    throw std::invalid_argument("sum_rate_gamma_tilde: beta must lie in [1/2,1]");
  }
  const PowerProfile power = PowerProfile::two_user(beta, mu);
  const double g1 = gamma_from_phi(pair.phi1, 1, power);
  const double g2 = gamma_from_phi(pair.phi2, 2, power);
  return (1.0 + g1) * (1.0 + g2);
}

double sum_rate_mu_threshold(const OrderedPair& pair) {
  check_pair(pair);
  const double p1 = pair.phi1, p2 = pair.phi2;
  return (2.0 * (p2 - p1) + p1 * (p2 - 2.0)) / (p1 * p2 * (1.0 + p1));
}

double sum_rate_beta_star(const OrderedPair& pair, double mu) {
  check_mu(mu);
  if (mu == 0.0) {
    // exact rule under perfect SIC: the product objective is monotone in
    // beta, so the half split wins whenever phi2 >= phi1
    check_pair(pair);
    return pair.phi2 >= pair.phi1 ? 0.5 : 1.0;
  }
  return mu < sum_rate_mu_threshold(pair) ? 0.5 : 1.0;
}

double sum_rate_gamma_bar(const OrderedPair& pair, double mu, double beta) {
  check_pair(pair);
  check_mu(mu);
  if (beta == 0.5) {
    return pair.phi1 / (2.0 + pair.phi1) + pair.phi2 / (2.0 + mu * pair.phi2);
  }
  if (beta == 1.0) {
    return pair.phi1;
  }
  throw std::invalid_argument("sum_rate_gamma_bar: defined at beta = 1/2 or 1 only");
}

double gamma_tilde_approx(double gamma1, double gamma2) {
  if (!(gamma1 >= 0.0 && gamma2 >= 0.0)) {
    throw std::invalid_argument("gamma_tilde_approx: thresholds must be non-negative");
  }
  const double half_sum = 0.5 * (gamma1 + gamma2);
  return (1.0 + half_sum) * (1.0 + half_sum);
}

double xi_relative_error(double gamma1, double gamma2) {
  if (!(gamma1 >= 0.0 && gamma2 >= 0.0)) {
    throw std::invalid_argument("xi_relative_error: thresholds must be non-negative");
  }
  const double ratio = (1.0 + gamma1) / (1.0 + gamma2);
  return 25.0 * (ratio + 1.0 / ratio) - 50.0;
}

double sum_rate_oma_crossover_mu(const OrderedPair& pair) {
  check_pair(pair);
  const double p1 = pair.phi1, p2 = pair.phi2;
  const double den = p1 * p1 * (2.0 * p1 + 3.0) + 2.0 * p2 * (p1 + 2.0) * (p1 + 2.0);
  const double first =
      std::sqrt(2.0) * (p1 + 2.0) * (p1 + 2.0) * std::sqrt(2.0 + p1 + p2) / den;
  const double second = (4.0 * p1 * p1 * p1 + 6.0 * p1 * p1 + p1 * p1 * p2 +
                         6.0 * p1 * p2 + 8.0 * p2) /
                        (p2 * den);
  return first - second;
}

bool noma_beats_oma_sum_rate(const OrderedPair& pair, double mu) {
  check_mu(mu);
  if (mu == 0.0) {
    return true;
  }
  return mu < sum_rate_oma_crossover_mu(pair);
}

double fairness_kappa(const OrderedPair& pair, double mu, FairnessScheme scheme) {
  check_pair(pair);
  check_mu(mu);
  const double oma = pair.phi1 / pair.phi2;
  if (scheme == FairnessScheme::Oma) {
    return oma;
  }
  if (sum_rate_beta_star(pair, mu) != 0.5) {
    throw std::domain_error(
        "fairness_kappa: NOMA fairness is defined at the beta = 1/2 operating "
        "point, but beta* = 1 for this pair");
  }
  return oma * (2.0 + mu * pair.phi2) / (2.0 + pair.phi1);
}

AllocationResult allocate_from_phi(double phi_a, double phi_b, double mu,
                                   double total_power, Objective objective) {
  check_mu(mu);
  if (!(total_power > 0.0)) {
    throw std::invalid_argument("allocate: total power must be positive");
  }
  AllocationResult result;
  result.pair = order_pair(phi_a, phi_b);
  result.objective = objective;
  result.scheme = Scheme::Noma;

  result.beta = objective == Objective::EqualRate
                    ? equal_rate_beta(result.pair, mu)
                    : sum_rate_beta_star(result.pair, mu);
  const PowerProfile power = PowerProfile::two_user(result.beta, mu, total_power);
  result.power1 = power.per_user[0];
  result.power2 = power.per_user[1];
  result.gamma1 = gamma_from_phi(result.pair.phi1, 1, power);
  result.gamma2 = gamma_from_phi(result.pair.phi2, 2, power);
  result.rate1 = rate_from_gamma(result.gamma1);
  result.rate2 = rate_from_gamma(result.gamma2);

  const auto [oma1, oma2] = oma_rates(result.pair, objective);
  if (objective == Objective::EqualRate) {
    result.beats_oma_gate = noma_beats_oma_equal_rate(result.pair, mu);
    result.beats_oma_direct = result.rate1 > oma1;
  } else {
    result.beats_oma_gate = noma_beats_oma_sum_rate(result.pair, mu);
    result.beats_oma_direct = result.rate1 + result.rate2 > oma1 + oma2;
  }
  return result;
}

AllocationResult allocate(const LinkSpec& link_a, const LinkSpec& link_b, double mu,
                          double total_power, Objective objective) {
  return allocate_from_phi(phi_approx(link_a).value, phi_approx(link_b).value, mu,
                           total_power, objective);
}

std::pair<double, double> oma_rates(const OrderedPair& pair, Objective objective) {
  check_pair(pair);
  if (objective == Objective::EqualRate) {
    const double rate = 0.5 * std::log2(1.0 + std::min(pair.phi1, pair.phi2));
    return {rate, rate};
  }
  return {0.5 * std::log2(1.0 + pair.phi1), 0.5 * std::log2(1.0 + pair.phi2)};
}

}  // namespace noma
