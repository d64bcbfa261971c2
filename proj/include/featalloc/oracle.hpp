#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "featalloc/allocation.hpp"
#include "featalloc/paintbox.hpp"
#include "featalloc/probability.hpp"
#include "featalloc/rational.hpp"

namespace featalloc {

// Exact distribution over canonical allocations of [n].
struct AllocationDistribution {
  int n = 0;
  std::map<FeatureAllocation, Rational> support;

  Rational prob(const FeatureAllocation& fa) const;
  Rational total() const;
};

// All n x k binary matrices, streamed as bit rows (bit k of rows[i] is
// entry (i,k)). Guarded to n*k <= 16.
void enumerate_binary_matrices(int n, int k,
                               const std::function<void(const std::vector<std::uint32_t>&)>& fn);

// Exact law of the finite frequency model by summing matrix probabilities
// over the matrices inducing each allocation.
AllocationDistribution exact_distribution_finite_freq(const std::vector<Rational>& freqs,
                                                      int n);

// Exact law of the general two-feature model by enumerating the 4^n
// per-index label sequences. n <= 6.
AllocationDistribution exact_distribution_two_feature(const TwoFeatureRates& rates, int n);

// Exact law of a frequency model extended with singleton features: the
// total singleton count T is drawn from total_pmf (T = 0..|total_pmf|-1,
// masses summing to 1), and each of the T singletons is attached to a
// uniformly random index.
AllocationDistribution exact_distribution_freq_plus_singletons(
    const std::vector<Rational>& freqs, int n, const std::vector<Rational>& total_pmf);

// Exact law induced by sampling indices independently into the cells of a
// paintbox decomposition (cell lengths as probabilities).
AllocationDistribution exact_distribution_from_paintbox_cells(
    const std::vector<PaintboxCell>& cells, int n);

// Allocation probabilities of [2] under the customer recursion, by
// enumerating first/second-customer histories with the Poisson counts
// truncated to an analytic tail below tail_tol.
std::map<FeatureAllocation, double> ibp_sequential_enumeration_n2(const IbpParams& params,
                                                                  double tail_tol);

// Pushforward of dist under restriction to [m].
AllocationDistribution restrict_distribution(const AllocationDistribution& dist, int m);

// dist is invariant under every permutation of [n]; exact. n <= 6.
bool check_exchangeable(const AllocationDistribution& dist);

// Marginal consistency: the extension sums of dist_n reproduce dist_m exactly.
bool check_consistency(const AllocationDistribution& dist_m,
                       const AllocationDistribution& dist_n);

struct EfpfFormCheck {
  bool has_efpf = false;
  // size multiset (sorted descending) -> ordered probability, when has_efpf
  std::vector<std::pair<std::vector<int>, Rational>> table;
  // two same-profile allocations with different ordered probabilities otherwise
  std::optional<std::pair<FeatureAllocation, FeatureAllocation>> witness;
};

// Converts to ordered probabilities via the ordering factors and tests
// whether they depend on the feature sizes alone. n <= 5.
EfpfFormCheck check_efpf_form(const AllocationDistribution& dist);

}  // namespace featalloc
