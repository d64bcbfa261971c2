#pragma once

#include <cmath>
#include <vector>

namespace featalloc {

// Regularized lower incomplete gamma P(a,x); Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

inline double poisson_log_pmf(int k, double rate) {
  return -rate + k * std::log(rate) - std::lgamma(k + 1.0);
}

inline double poisson_pmf(int k, double rate) {
  if (rate == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::exp(poisson_log_pmf(k, rate));
}

// P(Pois(rate) > j)
inline double poisson_tail(int j, double rate) {
  if (rate == 0.0) return 0.0;
  return gamma_p(j + 1.0, rate);
}

// Survival function of the chi-square distribution with df degrees of freedom.
inline double chi_square_sf(double stat, double df) {
  return gamma_q(df / 2.0, stat / 2.0);
}

inline double log_sum_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log1p(std::exp(b - a));
}

}  // namespace featalloc
