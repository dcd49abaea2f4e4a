#include "noma/laplace.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace noma {

namespace {

long double factorial_ld(int n) {
  long double f = 1.0L;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long double binomial_ld(int n, int k) {
  return factorial_ld(n) / (factorial_ld(k) * factorial_ld(n - k));
}

// zeta_k = (-1)^(n/2+k) sum_{j=floor((k+1)/2)}^{min(k,n/2)}
//          j^(n/2+1)/(n/2)! C(n/2,j) C(2j,j) C(j,k-j)
std::vector<long double> stehfest_coefficients(int terms) {
  const int half = terms / 2;
  std::vector<long double> zeta(static_cast<std::size_t>(terms) + 1, 0.0L);
  for (int k = 1; k <= terms; ++k) {
    long double acc = 0.0L;
    for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
      acc += std::pow(static_cast<long double>(j), half + 1) / factorial_ld(half) *
             binomial_ld(half, j) * binomial_ld(2 * j, j) * binomial_ld(j, k - j);
    }
    zeta[static_cast<std::size_t>(k)] = ((half + k) % 2 == 0 ? acc : -acc);
  }
  return zeta;
}

}  // namespace

double gaver_stehfest(const std::function<double(double)>& transform, double x,
                      int terms) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("gaver_stehfest: x must be positive");
  }
  // above 20 terms the alternating coefficients outgrow long double headroom
  if (terms < 2 || terms % 2 != 0 || terms > 20) {
    throw std::invalid_argument("gaver_stehfest: terms must be even and in [2,20]");
  }
  static thread_local int cached_terms = 0;
  static thread_local std::vector<long double> cached_zeta;
  if (cached_terms != terms) {
    cached_zeta = stehfest_coefficients(terms);
    cached_terms = terms;
  }
  const long double log2x = 0.69314718055994530942L / static_cast<long double>(x);
  long double sum = 0.0L;
  for (int k = 1; k <= terms; ++k) {
    const double s = static_cast<double>(log2x * k);
    const double value = transform(s);
    if (!std::isfinite(value)) {
      throw std::runtime_error("gaver_stehfest: transform returned non-finite value");
    }
    sum += cached_zeta[static_cast<std::size_t>(k)] * static_cast<long double>(value);
  }
  return static_cast<double>(log2x * sum);
}

double euler_inversion(
    const std::function<std::complex<double>(std::complex<double>)>& transform,
    double x, int series_terms, int average_terms, double a_param) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("euler_inversion: x must be positive");
  }
  if (series_terms < 1 || average_terms < 1) {
    throw std::invalid_argument("euler_inversion: term counts must be positive");
  }
  const int total = series_terms + average_terms;
  const double re = a_param / (2.0 * x);

  // partial sums of the alternating Bromwich series
  std::vector<double> partial(static_cast<std::size_t>(total) + 1, 0.0);
  double running = 0.5 * transform({re, 0.0}).real();
  partial[0] = running;
  for (int k = 1; k <= total; ++k) {
    const std::complex<double> s{re, k * M_PI / x};
    const double term = (k % 2 == 0 ? 1.0 : -1.0) * transform(s).real();
    if (!std::isfinite(term)) {
      throw std::runtime_error("euler_inversion: transform returned non-finite value");
    }
    running += term;
    partial[static_cast<std::size_t>(k)] = running;
  }

  // binomial (Euler) average of the last average_terms+1 partial sums
  long double average = 0.0L;
  long double binom = 1.0L;  // C(m, i) scaled by 2^-m at the end
  for (int i = 0; i <= average_terms; ++i) {
    average += binom * partial[static_cast<std::size_t>(series_terms + i)];
    binom *= static_cast<long double>(average_terms - i) / (i + 1.0L);
  }
  average *= std::pow(0.5L, average_terms);

  return static_cast<double>(std::exp(a_param / 2.0) / x * average);
}

}  // namespace noma
