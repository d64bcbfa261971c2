#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "featalloc/random.hpp"
#include "featalloc/rational.hpp"

namespace featalloc {

// A feature is a non-empty sorted set of 1-based indices.
using Feature = std::vector<int>;

// Canonical order: by smallest member, then size, then lexicographic.
// Identical features are adjacent, so a sorted feature list is a faithful
// multiset representation.
bool feature_less(const Feature& a, const Feature& b);

// Multiset of non-empty subsets of {1..n}, kept in canonical order so that
// equality is structural. The empty allocation (no features) is valid.
class FeatureAllocation {
 public:
  FeatureAllocation() : n_(0) {}
  FeatureAllocation(int n, std::vector<Feature> features);

  int n() const { return n_; }
  const std::vector<Feature>& features() const { return features_; }
  int feature_count() const { return static_cast<int>(features_.size()); }
  bool empty() const { return features_.empty(); }

  bool operator==(const FeatureAllocation& other) const = default;
  // total order for use as a map key
  bool operator<(const FeatureAllocation& other) const;

 private:
  int n_;
  std::vector<Feature> features_;  // canonical order
};

// Sequence of features over {1..n}; order is meaningful.
struct OrderedFeatureAllocation {
  int n = 0;
  std::vector<Feature> features;

  FeatureAllocation unordered() const;
  bool operator==(const OrderedFeatureAllocation&) const = default;
};

// K features, H distinct, with distinct-feature multiplicities in
// non-increasing order.
struct MultiplicityProfile {
  int k_total = 0;
  int h_distinct = 0;
  std::vector<int> multiplicities;

  bool operator==(const MultiplicityProfile&) const = default;
};

// Per-index sets of positive-integer feature labels; labels form the prefix
// {1..K} when produced by order-of-appearance labeling.
struct LabelSets {
  int n = 0;
  int k_total = 0;
  std::vector<std::vector<int>> labels;  // labels[i] is Z_{i+1}, sorted

  bool operator==(const LabelSets&) const = default;
};

struct BinaryMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::uint8_t>> cells;  // cells[i][k]
};

// { A ∩ [m] : A in fa, A ∩ [m] nonempty } over [m].
FeatureAllocation restrict_to(const FeatureAllocation& fa, int m);

// true iff restricting fa_n to [fa_m.n()] gives fa_m.
bool is_extension(const FeatureAllocation& fa_n, const FeatureAllocation& fa_m);

// sigma is 1-based: sigma[i-1] is the image of index i.
FeatureAllocation apply_permutation(const FeatureAllocation& fa,
                                    const std::vector<int>& sigma);

MultiplicityProfile multiplicity_profile(const FeatureAllocation& fa);

// (K choose multiplicities)^-1 = prod(mult!)/K!; the factor converting an
// unordered allocation probability to the probability of one uniformly
// random ordering.
Rational ordering_factor(const MultiplicityProfile& profile);

// Labels features 1..K by first-appearance index. Features first appearing
// together at one index consume the next tie_break values in canonical
// order and are labeled by increasing tie-break value. tie_break must hold
// at least K distinct values.
LabelSets order_of_appearance_labels(const FeatureAllocation& fa,
                                     const std::vector<double>& tie_break);

// Orders features by the given per-feature label values (assigned to the
// canonical feature list positionally), ascending.
OrderedFeatureAllocation ordered_from_labels(const FeatureAllocation& fa,
                                             const std::vector<double>& labels);

// Draws one iid continuous label per feature and sorts. Every
// distinguishable ordering is equally likely.
OrderedFeatureAllocation uniform_random_ordering(const FeatureAllocation& fa,
                                                 RandomStream& rng);

BinaryMatrix to_binary_matrix(const LabelSets& labels);

// Inverse of labeling: feature k = {indices whose label set contains k}.
FeatureAllocation allocation_from_label_sets(const LabelSets& labels);

// Builds the allocation induced by arbitrary per-index label collections
// (labels need not be a prefix; empty collections allowed).
FeatureAllocation allocation_from_index_labels(
    int n, const std::vector<std::vector<int>>& index_labels);

// every index in exactly one feature
bool is_partition(const FeatureAllocation& fa);

}  // namespace featalloc
