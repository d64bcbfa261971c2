#pragma once

#include <cstdint>
#include <vector>

#include "featalloc/allocation.hpp"
#include "featalloc/probability.hpp"
#include "featalloc/random.hpp"
#include "featalloc/rational.hpp"

namespace featalloc {

// Half-open interval [lo, hi) within [0,1], rational endpoints.
struct Interval {
  Rational lo, hi;
  bool operator==(const Interval&) const = default;
};

// Finite union of disjoint half-open subintervals of [0,1), normalized:
// sorted, non-overlapping, adjacent pieces merged, empty pieces dropped.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> pieces);

  const std::vector<Interval>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  Rational length() const;

  bool contains(double x) const;

  // left-most subset with the given total length (used by the recursive
  // subdivision); requires 0 <= want <= length()
  IntervalSet take_left(const Rational& want) const;
  // set difference within this set
  IntervalSet minus(const IntervalSet& other) const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> pieces_;
};

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
Rational intersection_length(const IntervalSet& a, const IntervalSet& b);

// Ordered feature subsets C_k of [0,1).
struct FeaturePaintbox {
  std::vector<IntervalSet> subsets;
};

// Ranked atoms plus dust for the partition paintbox.
struct KingmanPaintbox {
  std::vector<double> atoms;  // non-increasing, positive, sum <= 1

  explicit KingmanPaintbox(std::vector<double> atoms);
  double dust() const;
};

// Partition sampler: every index picks atom k with probability atoms[k] or
// dust with the remaining mass; dust indices become singleton blocks.
FeatureAllocation kingman_sample(const KingmanPaintbox& pb, int n, RandomStream& rng);

// Cell I_e of the recursive subdivision, keyed by the bitmask with bit k set
// when e_k = 1 (k zero-based over the frequency list).
struct PaintboxCell {
  std::uint32_t bits = 0;
  IntervalSet part;
};

// Recursive subdivision of [0,1): at step K each cell I_e is split into a
// left part of length V_K * |I_e| (new digit 1) and the remainder (digit 0).
// C_K is the union of the digit-1 parts. K <= 20.
FeaturePaintbox build_frequency_paintbox(const std::vector<Rational>& freqs);
FeaturePaintbox build_frequency_paintbox(const std::vector<double>& freqs);

// The full cell decomposition after all splits; 2^K cells, empties included.
std::vector<PaintboxCell> frequency_paintbox_cells(const std::vector<Rational>& freqs);

// Index n joins feature k iff its uniform draw lands in C_k.
FeatureAllocation paintbox_sample(const FeaturePaintbox& pb, int n, RandomStream& rng);

// Two overlapping intervals realizing the general two-feature model:
// C_1 = [0, p10+p11), C_2 = [p10, p10+p11+p01).
FeaturePaintbox two_feature_paintbox(const TwoFeatureRates& rates);
FeaturePaintbox two_feature_paintbox(const TwoFeatureParams& params);

}  // namespace featalloc
