#pragma once

#include <map>

#include "featalloc/allocation.hpp"
#include "featalloc/oracle.hpp"

namespace featalloc {

// Counting measure over canonical allocations.
struct EmpiricalDist {
  std::map<FeatureAllocation, long> counts;
  long total = 0;

  void add(const FeatureAllocation& fa) {
    ++counts[fa];
    ++total;
  }
};

// Total variation distance between the empirical measure and an exact law.
double tv_distance(const EmpiricalDist& emp, const AllocationDistribution& exact);

// Total variation distance against a real-valued pmf over allocations
// (need not cover the empirical support).
double tv_distance(const EmpiricalDist& emp,
                   const std::map<FeatureAllocation, double>& pmf);

double tv_distance(const EmpiricalDist& a, const EmpiricalDist& b);

// Total variation between an empirical integer distribution and a pmf
// vector over 0..len-1 (mass beyond counts toward the distance).
double tv_distance_counts(const std::map<int, long>& counts, long total,
                          const std::vector<double>& pmf);

// Chi-square test that the empirical allocation distribution is invariant
// under all permutations of [n]: counts within each permutation orbit are
// pooled and compared to the orbit-uniform expectation. Orbits whose
// per-member expectation falls below min_expected are skipped.
// Returns the p-value (1.0 when no orbit is testable).
double exchangeability_chi_square_pvalue(const EmpiricalDist& emp, int n,
                                         double min_expected = 5.0);

struct MomentSummary {
  double mean = 0.0;
  double variance = 0.0;
  double mean_se = 0.0;
  double variance_se = 0.0;
};

MomentSummary summarize_moments(const std::vector<double>& values);

}  // namespace featalloc
