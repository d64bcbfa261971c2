#pragma once

#include <vector>

#include "featalloc/allocation.hpp"
#include "featalloc/probability.hpp"
#include "featalloc/random.hpp"

namespace featalloc {

// A (possibly truncated) feature frequency sequence. tail_bound is a
// certified upper bound on the frequency mass beyond the stored head;
// zero means the model is exactly finite.
struct FrequencyModel {
  std::vector<double> freqs;
  std::vector<double> labels;  // optional distinct real labels, one per freq
  double tail_bound = 0.0;

  FrequencyModel() = default;
  explicit FrequencyModel(std::vector<double> freqs, double tail_bound = 0.0,
                          std::vector<double> labels = {});
};

// Running state of the customer recursion: dish sizes in order of
// appearance after n_seen customers.
struct SeqState {
  int n_seen = 0;
  std::vector<int> dish_counts;

  int k_total() const { return static_cast<int>(dish_counts.size()); }
};

// Frequency model plus an independent Pois(lambda) count of singleton
// features {n} per index.
struct EfpfModel {
  FrequencyModel freq_model;
  double singleton_rate = 0.0;

  EfpfModel(FrequencyModel freq_model, double singleton_rate);
};

// Advances the buffet by one customer. Draw order: one Bernoulli per
// existing dish in label order, then the Poisson count of new dishes.
// Returns the new customer's order-of-appearance dish labels (sorted).
std::vector<int> ibp_sample_next(SeqState& state, const IbpParams& params,
                                 RandomStream& rng);

FeatureAllocation ibp_sample_allocation(const IbpParams& params, int n,
                                        RandomStream& rng);

// Runs the frequency recursion for `truncation` rounds: a Poisson count of
// atoms per round, each Beta(1-discount, concentration+round+discount), each
// given a fresh uniform label. Draw order per round: the Poisson count, then
// per atom the Beta then its label. tail_bound is set to the expected
// frequency mass of all rounds beyond the truncation.
FrequencyModel sample_3bp_frequencies(const IbpParams& params, int truncation,
                                      RandomStream& rng);

// Expected total frequency mass emitted after round `truncation`:
// sum over rounds r > truncation of rate(r) * E[Beta(1-a, t+r+a)].
double expected_residual_frequency_mass(const IbpParams& params, int truncation);

// Independent Bernoulli(V_k) per index and frequency; draws are consumed
// index-major. Requires tail_bound < 1e-6.
FeatureAllocation frequency_model_sample(const FrequencyModel& model, int n,
                                         RandomStream& rng);

FeatureAllocation two_feature_sample(const TwoFeatureParams& params, int n,
                                     RandomStream& rng);

// Frequency draw first, then per index an independent Pois(lambda) count of
// singleton features {index}.
FeatureAllocation efpf_model_sample(const EfpfModel& model, int n,
                                    RandomStream& rng);

// Distributionally equivalent construction: frequency draw, then a single
// Pois(n*lambda) total count of singletons, each assigned to a uniformly
// random index.
FeatureAllocation efpf_model_sample_pooled(const EfpfModel& model, int n,
                                           RandomStream& rng);

}  // namespace featalloc
