#include "noma/rate_control.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace noma {

void LinkSpec::validate() const {
  if (!(serving_distance > 0.0) || !std::isfinite(serving_distance)) {
    throw std::invalid_argument("link: serving distance must be positive");
  }
  if (interferer_distances.empty()) {
    throw std::invalid_argument("link: at least one interferer required");
  }
  if (!(target_error > 0.0 && target_error < 1.0)) {
    throw std::invalid_argument("link: target error must lie in (0,1)");
  }
  if (!(path_loss_exponent > 2.0)) {
    throw std::invalid_argument("link: path-loss exponent must exceed 2");
  }
  for (double d : interferer_distances) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw std::invalid_argument("link: interferer distances must be positive");
    }
  }
  if (!std::is_sorted(interferer_distances.begin(), interferer_distances.end())) {
    throw std::invalid_argument("link: interferer distances must be ascending");
  }
}

double LinkSpec::mean_power_ratio() const {
  double sum = 0.0;
  for (double d : interferer_distances) {
    sum += std::pow(d, -path_loss_exponent);
  }
  return std::pow(serving_distance, -path_loss_exponent) / sum;
}

LinkSpec LinkSpec::from_fixture(FixtureRule rule, int n, double serving_distance,
                                double target_error, double alpha) {
  LinkSpec link;
  link.serving_distance = serving_distance;
  link.interferer_distances = make_fixture(rule, n);
  link.target_error = target_error;
  link.path_loss_exponent = alpha;
  link.validate();
  return link;
}

LinkSpec LinkSpec::from_association(const Association& assoc, double target_error,
                                    double alpha) {
  LinkSpec link;
  link.serving_distance = assoc.serving_distance;
  link.interferer_distances = assoc.interferer_distances;
  link.target_error = target_error;
  link.path_loss_exponent = alpha;
  link.validate();
  return link;
}

namespace {

// log prod_j (1 + phi c_j) - log(1/(1-eps)), monotone increasing in phi
struct RootFunction {
  std::vector<double> coeff;  // c_j = (r / r_j)^alpha
  double target = 0.0;        // -log(1 - eps)

  double value(double phi) const {
    double acc = 0.0;
    for (double c : coeff) acc += std::log1p(phi * c);
    return acc - target;
  }
  double derivative(double phi) const {
    double acc = 0.0;
    for (double c : coeff) acc += c / (1.0 + phi * c);
    return acc;
  }
};

}  // namespace

PhiValue phi_exact(const LinkSpec& link) {
  link.validate();
  RootFunction f;
  f.coeff.reserve(link.interferer_distances.size());
  for (double d : link.interferer_distances) {
    f.coeff.push_back(std::pow(link.serving_distance / d, link.path_loss_exponent));
  }
  f.target = -std::log1p(-link.target_error);

  // Bracket from the closed-form estimate; it underestimates the root, so
  // doubling the upper end must eventually flip the sign.
  const double estimate = link.target_error * link.mean_power_ratio();
  double lo = 0.0;
  double hi = std::max(estimate, 1e-300);
  int expand = 0;
  while (f.value(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++expand > 2100) {
      throw std::runtime_error("phi_exact: bracket expansion failed, lo=" +
                               std::to_string(lo) + " hi=" + std::to_string(hi));
    }
  }

  // Safeguarded Newton: fall back to bisection whenever the Newton step
  // leaves the bracket. Uniqueness and monotonicity make this safe.
  double phi = std::min(std::max(estimate, lo), hi);
  double val = f.value(phi);
  for (int iter = 0; iter < 200; ++iter) {
    if (val > 0.0) {
      hi = phi;
    } else {
      lo = phi;
    }
    const double deriv = f.derivative(phi);
    double next = phi - val / deriv;
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    const double prev = phi;
    phi = next;
    val = f.value(phi);
    if (std::abs(val) <= 1e-13 * std::max(1.0, f.target) &&
        std::abs(phi - prev) <= 1e-13 * phi) {
      break;
    }
  }
  // |log residual| <= 1e-11 implies the product misses 1/(1-eps) by the
  // same relative amount, well inside the 1e-10 contract.
  if (std::abs(val) > 1e-11) {
    throw std::runtime_error("phi_exact: no convergence, residual=" +
                             std::to_string(val) + " bracket=[" + std::to_string(lo) +
                             "," + std::to_string(hi) + "]");
  }

  PhiValue result;
  result.value = phi;
  result.method = PhiMethod::Exact;
  result.eps_above_approx_range = link.target_error > 0.1;
  return result;
}

PhiValue phi_approx(const LinkSpec& link) {
  link.validate();
  PhiValue result;
  result.value = link.target_error * link.mean_power_ratio();
  result.method = PhiMethod::Approximate;
  result.eps_above_approx_range = link.target_error > 0.1;
  return result;
}

double f_of_n(int n, double eps) {
  if (n < 1) {
    throw std::invalid_argument("f_of_n: n must be >= 1");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("f_of_n: eps must lie in (0,1)");
  }
  // n ((1-eps)^{-1/n} - 1) = n expm1(-log(1-eps)/n)
  return n * std::expm1(-std::log1p(-eps) / n);
}

double gamma_from_phi(double phi, int user_index, const PowerProfile& power) {
  if (!(phi > 0.0)) {
    throw std::invalid_argument("gamma_from_phi: phi must be positive");
  }
  power.validate();
  const int m = power.num_users();
  if (user_index < 1 || user_index > m) {
    throw std::invalid_argument("gamma_from_phi: user index out of range");
  }
  double residual = 0.0;
  for (int j = 1; j <= m; ++j) {
    if (j < user_index) {
      residual += power.sic_error * power.per_user[static_cast<std::size_t>(j - 1)];
    } else if (j > user_index) {
      residual += power.per_user[static_cast<std::size_t>(j - 1)];
    }
  }
  const double p_i = power.per_user[static_cast<std::size_t>(user_index - 1)];
  return phi * p_i / (power.total + phi * residual);
}

double rate_from_gamma(double gamma) {
  if (!(gamma >= 0.0)) {
    throw std::invalid_argument("rate_from_gamma: gamma must be non-negative");
  }
  return std::log2(1.0 + gamma);
}

}  // namespace noma
