#pragma once

#include <complex>
#include <functional>

namespace noma {

// Gaver-Stehfest inversion: f(x) ~ (ln2/x) sum_k zeta_k F(k ln2/x). Needs
// only real-axis transform values; coefficients are assembled in extended
// precision. terms must be even; 14 is the double-precision sweet spot.
double gaver_stehfest(const std::function<double(double)>& transform, double x,
                      int terms = 14);

// Euler-summation inversion on the Bromwich line (Abate-Whitt style):
// alternating series accelerated with a binomial average. Independent of
// Gaver-Stehfest, used to cross-check it. a_param fixes the discretization
// error at ~e^-a_param.
double euler_inversion(
    const std::function<std::complex<double>(std::complex<double>)>& transform,
    double x, int series_terms = 38, int average_terms = 11, double a_param = 18.4);

}  // namespace noma
