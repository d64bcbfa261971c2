#pragma once

#include <optional>
#include <vector>

#include "featalloc/allocation.hpp"
#include "featalloc/rational.hpp"

namespace featalloc {

// Three-parameter Indian buffet process: mass gamma, concentration theta,
// discount alpha.
struct IbpParams {
  double mass;
  double concentration;
  double discount;

  IbpParams(double mass, double concentration, double discount);
};

// Per-index category frequencies of the general two-feature model:
// p10 = feature 1 only, p01 = feature 2 only, p11 = both, p00 = neither.
struct TwoFeatureParams {
  double p10, p01, p11, p00;

  TwoFeatureParams(double p10, double p01, double p11, double p00);
  double q1() const { return p10 + p11; }
  double q2() const { return p01 + p11; }
};

// Exact-rational mirror of TwoFeatureParams, normalized to sum exactly 1.
struct TwoFeatureRates {
  Rational p10, p01, p11, p00;
};

// Rationalizes each field (denominators <= 10^6) and rescales so the four
// rates sum to one exactly. Fails when a field has no close rational.
std::optional<TwoFeatureRates> rationalized(const TwoFeatureParams& params);

// A probability carried in log space, with an exact rational value alongside
// when the inputs admitted one.
struct EfpfValue {
  double log_prob;
  std::optional<Rational> exact;

  double value() const;
};

// Poisson rate of new dishes for customer n (the paper-family's per-round
// rate): mass * Gamma(theta+1)Gamma(theta+discount-1+n) /
// (Gamma(theta+n)Gamma(theta+discount)).
double ibp_new_dish_rate(const IbpParams& params, int n);

// sum of ibp_new_dish_rate over customers 1..n
double ibp_rate_sum(const IbpParams& params, int n);

// Probability of one uniformly random ordering of a 3IBP allocation of [n]
// with the given feature sizes; symmetric in sizes. sizes may be empty
// (probability of the empty allocation).
EfpfValue ibp_efpf(const IbpParams& params, int n, const std::vector<int>& sizes);

// Unordered-allocation probability: ibp_efpf divided by the ordering factor
// of the allocation's multiplicity profile.
EfpfValue ibp_unordered_prob(const IbpParams& params, const FeatureAllocation& fa);

// Ordered probability for the two-feature Bernoulli model with frequencies
// qa, qb: the symmetrized product over the two frequency-to-feature pairings.
// Sizes m1, m2 may be zero.
EfpfValue bernoulli_two_feature_efpf(double qa, double qb, int n, int m1, int m2);

// Ordered-allocation probability under the general two-feature model
// (at most two features). Sums the per-index category products over the
// distinct assignments of latent labels {1,2} to the ordered features
// (unused labels produce the empty feature) and applies the ordering factor.
EfpfValue two_feature_ordered_prob(const TwoFeatureParams& params,
                                   const OrderedFeatureAllocation& ordered);

// |p10*p01 - p11*p00| <= tol; the two-feature model is a feature frequency
// model exactly when this product condition holds.
bool is_frequency_factorizable(const TwoFeatureParams& params, double tol = 1e-9);

// Labeled-feature probability for fixed frequencies: prod V_k^{m_k}
// (1-V_k)^{n-m_k} over listed sizes, times (1-V_k)^n for the remaining
// frequencies. Sizes may be zero; frequencies at 0 or 1 use 0^0 = 1.
EfpfValue finite_frequency_efpf(const std::vector<double>& freqs, int n,
                                const std::vector<int>& sizes);

}  // namespace featalloc
