#pragma once

#include <cstdint>
#include <random>

namespace featalloc {

// Seeded random stream with self-contained variate algorithms, so that a
// given seed yields the same draw sequence on every platform. Samplers take
// one of these by reference and advance only it.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform on [0,1), 53-bit resolution
  double uniform() { return (engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t uniform_below(std::uint64_t n);  // unbiased, rejection

  bool bernoulli(double p) { return uniform() < p; }

  // inverse-CDF walk for small rates, binary splitting above
  int poisson(double rate);

  double normal();

  double gamma(double shape);  // unit scale

  double beta(double a, double b);

  // index into a discrete distribution given by weights (need not be
  // normalized); returns weights.size() when the draw falls into any
  // leftover mass beyond the listed weights (total assumed 1)
  std::size_t categorical(const std::vector<double>& weights);

 private:
  std::mt19937_64 engine_;
};

}  // namespace featalloc
