#pragma once

#include <set>
#include <vector>

#include "featalloc/allocation.hpp"
#include "featalloc/oracle.hpp"

namespace testutil {

inline featalloc::FeatureAllocation fa(int n, std::vector<std::vector<int>> features) {
  return featalloc::FeatureAllocation(n, std::move(features));
}

// Distinct allocations representable as n x k binary matrices (n*k <= 16).
inline std::vector<featalloc::FeatureAllocation> allocation_family(int n, int k) {
  std::set<featalloc::FeatureAllocation> seen;
  featalloc::enumerate_binary_matrices(n, k, [&](const std::vector<std::uint32_t>& rows) {
    std::vector<featalloc::Feature> fs;
    for (int col = 0; col < k; ++col) {
      featalloc::Feature f;
      for (int i = 0; i < n; ++i) {
        if (rows[i] & (1u << col)) f.push_back(i + 1);
      }
      if (!f.empty()) fs.push_back(std::move(f));
    }
    seen.insert(featalloc::FeatureAllocation(n, std::move(fs)));
  });
  return {seen.begin(), seen.end()};
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace testutil
