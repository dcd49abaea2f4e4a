#include "noma/threshold_dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "noma/laplace.hpp"
#include "noma/rate_control.hpp"
#include "noma/special_functions.hpp"

namespace noma {

void ThresholdQuery::validate() const {
  if (!(theta > 0.0)) {
    throw std::invalid_argument("threshold query: theta must be positive");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("threshold query: eps must lie in (0,1)");
  }
  if (!(alpha > 2.0)) {
    throw std::invalid_argument("threshold query: alpha must exceed 2");
  }
  power.validate();
  if (user_index < 1 || user_index > power.num_users()) {
    throw std::invalid_argument("threshold query: user index out of range");
  }
}

ThresholdQuery ThresholdQuery::oma(double theta, double eps, double alpha) {
  ThresholdQuery q;
  q.theta = theta;
  q.eps = eps;
  q.alpha = alpha;
  q.power = PowerProfile::single_user();
  q.user_index = 1;
  return q;
}

double z_of_theta(const ThresholdQuery& query) {
  query.validate();
  const int m = query.power.num_users();
  double residual = 0.0;
  for (int j = 1; j <= m; ++j) {
    if (j < query.user_index) {
      residual += query.power.sic_error * query.power.per_user[static_cast<std::size_t>(j - 1)];
    } else if (j > query.user_index) {
      residual += query.power.per_user[static_cast<std::size_t>(j - 1)];
    }
  }
  const double p_i = query.power.per_user[static_cast<std::size_t>(query.user_index - 1)];
  return (p_i / query.theta - residual) * query.eps / query.power.total;
}

double f_psi_cdf(double x, double delta, int stehfest_terms) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("f_psi_cdf: x must be positive");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("f_psi_cdf: delta must lie in (0,1)");
  }
  const double value = gaver_stehfest(
      [delta](double s) { return 1.0 / (s * kummer_1f1_neg(delta, s)); }, x,
      stehfest_terms);
  return std::clamp(value, 0.0, 1.0);
}

double f_psi_cdf_euler(double x, double delta) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("f_psi_cdf: x must be positive");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("f_psi_cdf: delta must lie in (0,1)");
  }
  const double value = euler_inversion(
      [delta](std::complex<double> s) {
        return 1.0 / (s * kummer_1f1_neg(delta, s));
      },
      x);
  return std::clamp(value, 0.0, 1.0);
}

double threshold_cdf(const ThresholdQuery& query, int stehfest_terms) {
  const double z = z_of_theta(query);
  if (z <= 0.0) {
    return 1.0;  // threshold unreachable under this split
  }
  return std::clamp(1.0 - f_psi_cdf(z, query.delta(), stehfest_terms), 0.0, 1.0);
}

ClosedFormCdf threshold_cdf_closed_form(const ThresholdQuery& query) {
  const double z = z_of_theta(query);
  ClosedFormCdf result;
  if (z <= 0.0) {
    result.value = 1.0;
    result.lower_bound_only = false;
    return result;
  }
  const double delta = query.delta();
  result.value = 1.0 - normalized_sinc(delta) * std::pow(z, delta);
  result.lower_bound_only = z > 1.0;
  return result;
}

CdfCurve threshold_cdf_curve(const ThresholdQuery& base, std::span<const double> theta_grid,
                             CdfMethod method, int stehfest_terms) {
  if (method == CdfMethod::MonteCarlo) {
    throw std::invalid_argument("threshold_cdf_curve: use threshold_cdf_montecarlo");
  }
  CdfCurve curve;
  curve.method = method;
  curve.theta.assign(theta_grid.begin(), theta_grid.end());
  if (!std::is_sorted(curve.theta.begin(), curve.theta.end())) {
    throw std::invalid_argument("threshold_cdf_curve: theta grid must ascend");
  }
  curve.value.reserve(curve.theta.size());
  curve.error.reserve(curve.theta.size());
  double running_max = 0.0;
  for (double theta : curve.theta) {
    ThresholdQuery q = base;
    q.theta = theta;
    if (method == CdfMethod::Inversion) {
      const double f = threshold_cdf(q, stehfest_terms);
      const double f_check = threshold_cdf(q, std::max(stehfest_terms - 2, 2));
      // inversion noise is far below the analytic increments; keep the
      // tabulated curve monotone
      running_max = std::max(running_max, f);
      curve.value.push_back(running_max);
      curve.error.push_back(std::abs(f - f_check));
    } else {
      const ClosedFormCdf cf = threshold_cdf_closed_form(q);
      curve.value.push_back(std::clamp(cf.value, 0.0, 1.0));
      curve.error.push_back(cf.lower_bound_only
                                ? std::numeric_limits<double>::quiet_NaN()
                                : 0.0);
    }
  }
  return curve;
}

CdfCurve threshold_cdf_montecarlo(const ThresholdQuery& base,
                                  const DeploymentConfig& deployment, int runs,
                                  std::span<const double> theta_grid,
                                  std::uint64_t seed) {
  if (runs < 1) {
    throw std::invalid_argument("threshold_cdf_montecarlo: runs must be >= 1");
  }
  base.validate();
  deployment.validate();

  std::vector<double> gammas;
  gammas.reserve(static_cast<std::size_t>(runs));
  for (int r = 0; r < runs; ++r) {
    RngStream rng = RngStream::substream(seed, static_cast<std::uint64_t>(r));
    const NetworkRealization realization = sample_ppp(deployment, rng);
    const LinkSpec link =
        LinkSpec::from_association(realization.links[0], base.eps, base.alpha);
    const double phi = phi_approx(link).value;
    gammas.push_back(gamma_from_phi(phi, base.user_index, base.power));
  }
  std::sort(gammas.begin(), gammas.end());

  CdfCurve curve;
  curve.method = CdfMethod::MonteCarlo;
  curve.theta.assign(theta_grid.begin(), theta_grid.end());
  curve.value.reserve(curve.theta.size());
  curve.error.reserve(curve.theta.size());
  for (double theta : curve.theta) {
    const auto it = std::upper_bound(gammas.begin(), gammas.end(), theta);
    const double f = static_cast<double>(it - gammas.begin()) / gammas.size();
    curve.value.push_back(f);
    curve.error.push_back(1.96 * std::sqrt(f * (1.0 - f) / gammas.size()));
  }
  return curve;
}

}  // namespace noma
