#include "featalloc/random.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace featalloc {

std::uint64_t RandomStream::uniform_below(std::uint64_t n) {
  if (n == 0) throw std::domain_error("uniform_below: n must be positive");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % n;
}

int RandomStream::poisson(double rate) {
  if (rate < 0.0) throw std::domain_error("poisson: rate must be >= 0");
  if (rate == 0.0) return 0;
  if (rate > 30.0) {
    // keeps the pmf walk in a range where exp(-rate) does not underflow
    int half = poisson(rate / 2.0);
    return half + poisson(rate - rate / 2.0);
  }
  const double u = uniform();
  double pmf = std::exp(-rate);
  double cum = pmf;
  int k = 0;
  while (u >= cum) {
    ++k;
    pmf *= rate / k;
    cum += pmf;
    if (k > 400) break;  // cumulative has saturated to 1 numerically
  }
  return k;
}

double RandomStream::normal() {
  // Marsaglia polar method; the second variate is discarded so the
  // consumption pattern stays simple.
  for (;;) {
    double x = 2.0 * uniform() - 1.0;
    double y = 2.0 * uniform() - 1.0;
    double s = x * x + y * y;
    if (s > 0.0 && s < 1.0) {
      return x * std::sqrt(-2.0 * std::log(s) / s);
    }
  }
}

double RandomStream::gamma(double shape) {
  if (shape <= 0.0) throw std::domain_error("gamma: shape must be positive");
  if (shape < 1.0) {
    // boost via Gamma(shape+1) and a power of a uniform
    double u = uniform();
    while (u == 0.0) u = uniform();
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang squeeze
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double RandomStream::beta(double a, double b) {
  double x = gamma(a);
  double y = gamma(b);
  if (x + y == 0.0) return 0.5;
  return x / (x + y);
}

std::size_t RandomStream::categorical(const std::vector<double>& weights) {
  double u = uniform();
  double cum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    cum += weights[i];
    if (u < cum) return i;
  }
  return weights.size();
}

}  // namespace featalloc
