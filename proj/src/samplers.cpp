#include "featalloc/samplers.hpp"

#include <cmath>
#include <stdexcept>

namespace featalloc {

FrequencyModel::FrequencyModel(std::vector<double> freqs_, double tail_bound_,
                               std::vector<double> labels_)
    : freqs(std::move(freqs_)), labels(std::move(labels_)), tail_bound(tail_bound_) {
  for (double v : freqs) {
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("frequency model: frequency out of [0,1]");
  }
  if (!(tail_bound >= 0.0))
    throw std::invalid_argument("frequency model: tail bound must be >= 0");
  if (!labels.empty() && labels.size() != freqs.size())
    throw std::invalid_argument("frequency model: one label per frequency");
}

EfpfModel::EfpfModel(FrequencyModel freq_model_, double singleton_rate_)
    : freq_model(std::move(freq_model_)), singleton_rate(singleton_rate_) {
  if (!(singleton_rate >= 0.0))
    throw std::invalid_argument("efpf model: singleton rate must be >= 0");
}

std::vector<int> ibp_sample_next(SeqState& state, const IbpParams& params,
                                 RandomStream& rng) {
  const int n = state.n_seen + 1;
  std::vector<int> labels;
  for (int k = 0; k < state.k_total(); ++k) {
    double join = (state.dish_counts[k] - params.discount) /
                  (params.concentration + n - 1);
    if (rng.bernoulli(join)) {
      ++state.dish_counts[k];
      labels.push_back(k + 1);
    }
  }
  int fresh = rng.poisson(ibp_new_dish_rate(params, n));
  for (int j = 0; j < fresh; ++j) {
    state.dish_counts.push_back(1);
    labels.push_back(state.k_total());
  }
  state.n_seen = n;
  return labels;
}

FeatureAllocation ibp_sample_allocation(const IbpParams& params, int n,
                                        RandomStream& rng) {
  if (n < 1) throw std::domain_error("ibp_sample_allocation: n must be >= 1");
  SeqState state;
  std::vector<std::vector<int>> index_labels(n);
  for (int i = 0; i < n; ++i) index_labels[i] = ibp_sample_next(state, params, rng);
  return allocation_from_index_labels(n, index_labels);
}

double expected_residual_frequency_mass(const IbpParams& params, int truncation) {
  const double t = params.concentration;
  const double a = params.discount;
  double mass = 0.0;
  double term = 0.0;
  int r = truncation;
  for (int step = 0; step < 1000000; ++step) {
    ++r;
    term = ibp_new_dish_rate(params, r) * (1.0 - a) / (t + r + 1.0);
    mass += term;
    if (term < 1e-16 * (mass + 1e-300)) return mass;
  }
  // power-law tail: term_r ~ C r^(a-2), so the remainder integrates to
  // about term_r * r / (1 - a)
  return mass + term * r / (1.0 - a);
}

FrequencyModel sample_3bp_frequencies(const IbpParams& params, int truncation,
                                      RandomStream& rng) {
  if (truncation < 1)
    throw std::domain_error("sample_3bp_frequencies: truncation must be >= 1");
  FrequencyModel model;
  for (int r = 1; r <= truncation; ++r) {
    int fresh = rng.poisson(ibp_new_dish_rate(params, r));
    for (int j = 0; j < fresh; ++j) {
      model.freqs.push_back(rng.beta(1.0 - params.discount,
                                     params.concentration + r + params.discount));
      model.labels.push_back(rng.uniform());
    }
  }
  model.tail_bound = expected_residual_frequency_mass(params, truncation);
  return model;
}

FeatureAllocation frequency_model_sample(const FrequencyModel& model, int n,
                                         RandomStream& rng) {
  if (n < 1) throw std::domain_error("frequency_model_sample: n must be >= 1");
  if (!(model.tail_bound < 1e-6))
    throw std::invalid_argument(
        "frequency_model_sample: model tail too heavy to sample from the head");
  std::vector<std::vector<int>> index_labels(n);
  for (int i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < model.freqs.size(); ++k) {
      if (rng.bernoulli(model.freqs[k]))
        index_labels[i].push_back(static_cast<int>(k + 1));
    }
  }
  return allocation_from_index_labels(n, index_labels);
}

FeatureAllocation two_feature_sample(const TwoFeatureParams& params, int n,
                                     RandomStream& rng) {
  if (n < 1) throw std::domain_error("two_feature_sample: n must be >= 1");
  std::vector<std::vector<int>> index_labels(n);
  for (int i = 0; i < n; ++i) {
    switch (rng.categorical({params.p10, params.p01, params.p11})) {
      case 0: index_labels[i] = {1}; break;
      case 1: index_labels[i] = {2}; break;
      case 2: index_labels[i] = {1, 2}; break;
      default: break;  // p00
    }
  }
  return allocation_from_index_labels(n, index_labels);
}

namespace {

FeatureAllocation with_singletons(const FeatureAllocation& base,
                                  const std::vector<int>& singleton_counts) {
  std::vector<Feature> fs = base.features();
  for (int i = 0; i < static_cast<int>(singleton_counts.size()); ++i) {
    for (int c = 0; c < singleton_counts[i]; ++c) fs.push_back({i + 1});
  }
  return FeatureAllocation(base.n(), std::move(fs));
}

}  // namespace

FeatureAllocation efpf_model_sample(const EfpfModel& model, int n,
                                    RandomStream& rng) {
  FeatureAllocation base = frequency_model_sample(model.freq_model, n, rng);
  std::vector<int> singles(n);
  for (int i = 0; i < n; ++i) singles[i] = rng.poisson(model.singleton_rate);
  return with_singletons(base, singles);
}

FeatureAllocation efpf_model_sample_pooled(const EfpfModel& model, int n,
                                           RandomStream& rng) {
  FeatureAllocation base = frequency_model_sample(model.freq_model, n, rng);
  std::vector<int> singles(n, 0);
  int total = rng.poisson(n * model.singleton_rate);
  for (int j = 0; j < total; ++j)
    ++singles[static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)))];
  return with_singletons(base, singles);
}

}  // namespace featalloc
