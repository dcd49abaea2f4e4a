#pragma once

#include <complex>

namespace noma {

// sin(pi x) / (pi x), the normalized sinc; 1 at x = 0.
double normalized_sinc(double x);

// Kummer confluent hypergeometric 1F1(-delta, 1-delta, -s) for delta in (0,1),
// the reciprocal Laplace transform kernel of the interference-distance sum.
// Evaluation routes (all relative accuracy ~1e-13):
//   |s| small  — direct power series (terms alternate but stay tame);
//   s real, moderate — Kummer-transformed all-positive series
//                      e^-s 1F1(1, 1-delta, s) in extended precision;
//   otherwise  — exact reduction to the upper incomplete gamma,
//                1F1 = Gamma(1-delta) s^delta + delta e^-s CF(s),
//                with CF the Lentz continued fraction, valid for Re s >= 0.
double kummer_1f1_neg(double delta, double s);
std::complex<double> kummer_1f1_neg(double delta, std::complex<double> s);

}  // namespace noma
