#include "noma/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace noma {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxSeriesTerms = 4000;
constexpr int kMaxCfIterations = 2000;

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("kummer_1f1: delta must lie in (0,1)");
  }
}

// Direct series: 1F1(-d,1-d,-s) = 1 - d * sum_{k>=1} (-s)^k / ((k-d) k!),
// using the pochhammer collapse (-d)_k / (1-d)_k = -d / (k-d).
template <typename S>
S series_small(double delta, S s) {
  using Real = decltype(std::abs(S{}));
  const Real d = static_cast<Real>(delta);
  S term{Real{1}};  // (-s)^k / k!
  S sum{Real{1}};
  for (int k = 1; k <= kMaxSeriesTerms; ++k) {
    term *= -s / static_cast<Real>(k);
    const S contrib = -d * term / (static_cast<Real>(k) - d);
    sum += contrib;
    if (std::abs(contrib) <= Real{1e-18} * std::abs(sum) && k > 4) {
      return sum;
    }
  }
  throw std::runtime_error("kummer_1f1: small-argument series did not converge");
}

// Kummer transformation for real s > 0: e^-s 1F1(1, 1-d, s); every term of
// the transformed series is positive, so there is no cancellation. Extended
// precision keeps the e^s growth representable up to s ~ 4000.
double series_kummer_real(double delta, double s) {
  long double term = 1.0L;  // s^k / (1-d)_k
  long double sum = 1.0L;
  const long double ls = s;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    term *= ls / (static_cast<long double>(k) + 1.0L - static_cast<long double>(delta));
    sum += term;
    if (term <= 1e-20L * sum && k > 4) {
      return static_cast<double>(std::exp(-ls) * sum);
    }
  }
  throw std::runtime_error("kummer_1f1: transformed series did not converge");
}

// Lentz continued fraction for the upper incomplete gamma with a = -delta:
// Gamma(-d, s) = e^-s s^-d / (s+1+d - 1(1+d)/(s+3+d - 2(2+d)/(...))).
// The s^±d factors cancel in the final assembly, so only the CF is returned.
template <typename S>
S upper_gamma_cf(double delta, S s) {
  const double tiny = 1e-300;
  S b = s + S{1.0 + delta};
  S c = S{1.0 / tiny};
  S d = S{1.0} / b;
  S f = d;
  for (int i = 1; i <= kMaxCfIterations; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) + delta);
    b += S{2.0};
    d = an * d + b;
    if (std::abs(d) < tiny) d = S{tiny};
    c = b + an / c;
    if (std::abs(c) < tiny) c = S{tiny};
    d = S{1.0} / d;
    const S factor = c * d;
    f *= factor;
    if (std::abs(factor - S{1.0}) < 1e-16) {
      return f;
    }
  }
  throw std::runtime_error("kummer_1f1: incomplete-gamma continued fraction stalled");
}

// 1F1(-d, 1-d, -s) = Gamma(1-d) s^d + d e^-s CF(s), from the identity
// 1F1(-d, 1-d, -s) = -d s^d gamma(-d, s) and gamma = Gamma - Gamma(.,s).
template <typename S>
S via_incomplete_gamma(double delta, S s) {
  const S cf = upper_gamma_cf(delta, s);
  const S s_pow = std::exp(S{delta} * std::log(s));
  return std::tgamma(1.0 - delta) * s_pow + delta * std::exp(-s) * cf;
}

}  // namespace

double normalized_sinc(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(kPi * x) / (kPi * x);
}

double kummer_1f1_neg(double delta, double s) {
  check_delta(delta);
  if (!(s >= 0.0)) {
    throw std::invalid_argument("kummer_1f1: real path requires s >= 0");
  }
  if (s == 0.0) return 1.0;
  if (s <= 2.0) return series_small(delta, s);
  if (s <= 400.0) return series_kummer_real(delta, s);
  return via_incomplete_gamma(delta, s);
}

std::complex<double> kummer_1f1_neg(double delta, std::complex<double> s) {
  check_delta(delta);
  if (s == std::complex<double>{0.0, 0.0}) return {1.0, 0.0};
  if (s.imag() == 0.0 && s.real() >= 0.0) {
    return {kummer_1f1_neg(delta, s.real()), 0.0};
  }
  if (std::abs(s) <= 25.0) {
    // extended precision buys back the e^|s| alternating-series cancellation
    const std::complex<long double> value =
        series_small(delta, std::complex<long double>(s.real(), s.imag()));
    return {static_cast<double>(value.real()), static_cast<double>(value.imag())};
  }
  if (!(s.real() >= 0.0)) {
    throw std::invalid_argument("kummer_1f1: complex path requires Re s >= 0");
  }
  return via_incomplete_gamma(delta, s);
}

}  // namespace noma
